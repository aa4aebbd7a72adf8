//
// Copyright 2026 The lipfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "lipfilter/seed.hpp"

#include <sodium.h>

#include <cctype>
#include <vector>

#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

void EnsureSodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error(ErrorCode::kIoError, "libsodium failed to initialize");
}

void PutBigEndian(std::uint64_t v, std::uint8_t* out) {
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(v & 0xFF);
    v >>= 8;
  }
}

std::vector<std::uint8_t> LabelMessage(std::string_view label,
                                       std::uint64_t index) {
  std::vector<std::uint8_t> msg(label.begin(), label.end());
  msg.push_back(0);
  std::uint8_t be[8];
  PutBigEndian(index, be);
  msg.insert(msg.end(), be, be + 8);
  return msg;
}

void KeyedHash(const std::array<std::uint8_t, 32>& key, std::string_view label,
               std::uint64_t index, std::uint8_t* out, std::size_t out_len) {
  EnsureSodium();
  const std::vector<std::uint8_t> msg = LabelMessage(label, index);
  crypto_generichash(out, out_len, msg.data(), msg.size(), key.data(),
                     key.size());
}

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Seed Seed::FromHex(std::string_view hex) {
  if (hex.size() != 64) {
    throw ParseError(hex.size(), "seed must be 64 hex digits");
  }
  std::array<std::uint8_t, 32> bytes{};
  for (std::size_t i = 0; i < 32; ++i) {
    const int hi = HexDigit(hex[2 * i]);
    const int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0) throw ParseError(2 * i, "invalid hex digit");
    if (lo < 0) throw ParseError(2 * i + 1, "invalid hex digit");
    bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Seed(bytes);
}

Seed Seed::FromInteger(std::uint64_t value) {
  std::array<std::uint8_t, 32> zero{};
  std::array<std::uint8_t, 32> bytes{};
  KeyedHash(zero, "integer-seed", value, bytes.data(), bytes.size());
  return Seed(bytes);
}

Seed Seed::Random() {
  EnsureSodium();
  std::array<std::uint8_t, 32> bytes{};
  randombytes_buf(bytes.data(), bytes.size());
  return Seed(bytes);
}

std::string Seed::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

RoundKey Seed::DeriveRoundKey(std::string_view label, std::uint64_t t) const {
  RoundKey key;
  KeyedHash(bytes_, label, t, key.bytes.data(), key.bytes.size());
  return key;
}

std::uint64_t Seed::DeriveU64(std::string_view label,
                              std::uint64_t index) const {
  std::uint8_t out[16];
  KeyedHash(bytes_, label, index, out, sizeof(out));
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | out[i];
  return v;
}

Seed Seed::Derive(std::string_view label, std::uint64_t index) const {
  std::array<std::uint8_t, 32> bytes{};
  KeyedHash(bytes_, label, index, bytes.data(), bytes.size());
  return Seed(bytes);
}

EdgeRank RankEdge(const RoundKey& key, EdgeId e) {
  static_assert(crypto_shorthash_siphashx24_BYTES == 16);
  static_assert(crypto_shorthash_siphashx24_KEYBYTES == 16);
  std::uint8_t msg[16];
  PutBigEndian(e.lo, msg);
  PutBigEndian(e.hi, msg + 8);
  std::uint8_t out[16];
  crypto_shorthash_siphashx24(out, msg, sizeof(msg), key.bytes.data());
  unsigned __int128 h = 0;
  for (std::uint8_t b : out) h = (h << 8) | b;
  return EdgeRank{h, e};
}

}  // namespace lipfilter
