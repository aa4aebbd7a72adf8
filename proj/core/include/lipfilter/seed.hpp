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

#ifndef LIPFILTER_SEED_HPP_
#define LIPFILTER_SEED_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "lipfilter/graph.hpp"

namespace lipfilter {

// 16-byte key for the 128-bit edge-rank hash of one round.
struct RoundKey {
  std::array<std::uint8_t, 16> bytes{};
  friend bool operator==(const RoundKey&, const RoundKey&) = default;
};

// 32 bytes of master randomness. All derived randomness is a keyed BLAKE2b
// of (label, index) under the master, so runs are reproducible from the hex
// string alone.
class Seed {
 public:
  Seed() = default;
  explicit Seed(const std::array<std::uint8_t, 32>& bytes) : bytes_(bytes) {}

  // Exactly 64 hex digits; throws kParseError.
  static Seed FromHex(std::string_view hex);
  // Deterministic seed from a small integer, for tests and sweeps.
  static Seed FromInteger(std::uint64_t value);
  // Drawn from system entropy.
  static Seed Random();

  std::string ToHex() const;
  const std::array<std::uint8_t, 32>& bytes() const { return bytes_; }

  // Key for iteration t of a filter; the label separates uses.
  RoundKey DeriveRoundKey(std::string_view label, std::uint64_t t) const;
  // A derived 64-bit value, e.g. to seed a std::mt19937_64 stream.
  std::uint64_t DeriveU64(std::string_view label, std::uint64_t index) const;
  // A derived child seed.
  Seed Derive(std::string_view label, std::uint64_t index) const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  std::array<std::uint8_t, 32> bytes_{};
};

// Canonical undirected edge: lo < hi in vertex order.
struct EdgeId {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static EdgeId Of(Vertex u, Vertex v) {
    return u.id < v.id ? EdgeId{u.id, v.id} : EdgeId{v.id, u.id};
  }
  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Position of an edge in the random order: the keyed hash first, the edge
// itself as tie-break, so the order is total.
struct EdgeRank {
  unsigned __int128 hash = 0;
  EdgeId edge;
  friend constexpr auto operator<=>(const EdgeRank&, const EdgeRank&) = default;
};

// SipHash-2-4 with 128-bit output over the 16-byte big-endian encoding of
// (lo, hi).
EdgeRank RankEdge(const RoundKey& key, EdgeId e);

}  // namespace lipfilter

template <>
struct std::hash<lipfilter::EdgeId> {
  std::size_t operator()(const lipfilter::EdgeId& e) const noexcept {
    std::uint64_t h = e.lo * 0x9E3779B97F4A7C15ULL ^
                      (e.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

#endif  // LIPFILTER_SEED_HPP_
