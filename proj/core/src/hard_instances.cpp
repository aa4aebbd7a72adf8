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

#include "lipfilter/hard_instances.hpp"

#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "lipfilter/errors.hpp"
#include "lipfilter/oracles.hpp"
#include "lipfilter/violation.hpp"

namespace lipfilter {
namespace {

std::uint64_t Mask(int d) {
  return d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
}

std::uint64_t RandomPoint(int d, std::mt19937_64& rng) {
  return rng() & Mask(d);
}

// Uniform point at Hamming distance exactly dist from center.
std::uint64_t RandomAtDistance(std::uint64_t center, int d, int dist,
                               std::mt19937_64& rng) {
  std::vector<int> bits(d);
  std::iota(bits.begin(), bits.end(), 0);
  for (int i = 0; i < dist; ++i) {
    std::uniform_int_distribution<int> pick(i, d - 1);
    std::swap(bits[i], bits[pick(rng)]);
    center ^= std::uint64_t{1} << bits[i];
  }
  return center;
}

int Hamming(Vertex x, Vertex y) { return std::popcount(x.id ^ y.id); }

}  // namespace

Rational HardInstance::Evaluate(Vertex x) const {
  // |x - anchor| < r/2  <=>  2|x - anchor| < r.
  for (Vertex v : a) {
    const int dist = Hamming(x, v);
    if (2 * dist < r) return Rational(dist);
  }
  for (Vertex v : a_prime) {
    const int dist = Hamming(x, v);
    if (2 * dist < r) return Rational(r - dist);
  }
  return Rational(r, 2);
}

OraclePtr HardInstance::Oracle() const {
  auto self = std::make_shared<const HardInstance>(*this);
  return std::make_shared<CallbackOracle>(
      graph, Rational(0), Rational(r),
      [self](Vertex x) -> Value { return self->Evaluate(x); });
}

std::vector<Vertex> HardInstance::Support() const {
  std::vector<Vertex> out = a;
  out.insert(out.end(), a_prime.begin(), a_prime.end());
  return out;
}

HardInstance SampleHardInstance(int d, int r, int b, int m,
                                std::mt19937_64& rng, bool enforce_separation,
                                int max_retries) {
  if (d < 1 || d > 64) {
    throw Error(ErrorCode::kInvalidParam, "d must be in 1..64");
  }
  if (r < 2 || r % 2 != 0) {
    throw Error(ErrorCode::kInvalidParam, "r must be even and >= 2");
  }
  if (b != 0 && b != 1) throw Error(ErrorCode::kInvalidParam, "b must be 0 or 1");
  if (r - b > d) {
    throw Error(ErrorCode::kInvalidParam, "r - b exceeds the dimension");
  }
  if (m < 1) throw Error(ErrorCode::kInvalidParam, "m must be >= 1");
  if (max_retries < 1) {
    throw Error(ErrorCode::kInvalidParam, "max_retries must be >= 1");
  }

  HardInstance inst;
  inst.d = d;
  inst.r = r;
  inst.b = b;
  inst.graph = std::make_shared<const Graph>(Graph::Hypercube(d));
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    inst.a.clear();
    inst.a_prime.clear();
    for (int i = 0; i < m; ++i) inst.a.push_back(Vertex{RandomPoint(d, rng)});
    for (int i = 0; i < m; ++i) {
      inst.a_prime.push_back(
          Vertex{RandomAtDistance(inst.a[i].id, d, r - b, rng)});
    }
    if (!enforce_separation || CheckSeparation(inst)) return inst;
  }
  throw Error(ErrorCode::kRetryExhausted,
              "separation not reached after " + std::to_string(max_retries) +
                  " attempts");
}

bool CheckSeparation(const HardInstance& inst) {
  const std::vector<Vertex> support = inst.Support();
  const std::size_t m = inst.a.size();
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      if (i < m && j == i + m) continue;  // corresponding pair
      // dist > d/4  <=>  4 * dist > d.
      if (4 * Hamming(support[i], support[j]) <= inst.d) return false;
    }
  }
  return true;
}

FarTable SearchFarTable(int k, const Rational& r, const Rational& target,
                        std::mt19937_64& rng, int max_steps,
                        int max_restarts) {
  if (k < 1 || k > 10) {
    throw Error(ErrorCode::kInvalidParam, "k must be in 1..10");
  }
  if (r.sign() <= 0) throw Error(ErrorCode::kInvalidParam, "r must be > 0");
  if (max_steps < 1 || max_restarts < 1) {
    throw Error(ErrorCode::kInvalidParam, "search limits must be positive");
  }
  const Graph cube = Graph::Hypercube(k);
  const std::size_t n = std::size_t{1} << k;
  const Rational values[] = {Rational(0), r / Rational(2), r};
  std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
  std::uniform_int_distribution<int> pick_value(0, 2);
  for (int restart = 0; restart < max_restarts; ++restart) {
    FarTable out{k, r, ValueTable(n, values[1]), Rational(0)};
    for (int step = 0; step < max_steps; ++step) {
      ValueTable next = out.table;
      next[pick_vertex(rng)] = values[pick_value(rng)];
      if (MaxViolationScore(cube, next) > Rational(1)) continue;
      const Rational l0 = ExactL0Distance(cube, next, n);
      if (l0 < out.l0) continue;
      out.table = std::move(next);
      out.l0 = l0;
      if (out.l0 >= target) return out;
    }
  }
  throw Error(ErrorCode::kRetryExhausted,
              "no table reached the target distance");
}

OraclePtr LiftJunta(const ValueTable& table, int d, std::vector<int> coords,
                    std::uint64_t mask, Rational lo, Rational hi) {
  const int k = static_cast<int>(coords.size());
  if (k < 1 || k > d || d > 64) {
    throw Error(ErrorCode::kInvalidParam, "need 1 <= k <= d <= 64");
  }
  if (table.size() != (std::size_t{1} << k)) {
    throw Error(ErrorCode::kInvalidParam, "table size must be 2^k");
  }
  std::vector<int> seen(d + 1, 0);
  for (int c : coords) {
    if (c < 1 || c > d || seen[c]++) {
      throw Error(ErrorCode::kInvalidParam, "coordinates must be distinct, 1..d");
    }
  }
  auto graph = std::make_shared<const Graph>(Graph::Hypercube(d));
  auto values = std::make_shared<const ValueTable>(table);
  std::vector<int> shifts;
  for (int c : coords) shifts.push_back(d - c);
  return std::make_shared<CallbackOracle>(
      std::move(graph), std::move(lo), std::move(hi),
      [values, shifts = std::move(shifts), mask](Vertex x) -> Value {
        const std::uint64_t y = x.id ^ mask;
        std::uint64_t index = 0;
        for (int shift : shifts) index = (index << 1) | ((y >> shift) & 1);
        return (*values)[index];
      });
}

OraclePtr LiftJunta(const ValueTable& table, int k, int d, Rational lo,
                    Rational hi) {
  if (k < 1 || k > d) {
    throw Error(ErrorCode::kInvalidParam, "need 1 <= k <= d");
  }
  std::vector<int> coords(k);
  std::iota(coords.begin(), coords.end(), 1);
  return LiftJunta(table, d, std::move(coords), 0, std::move(lo),
                   std::move(hi));
}

}  // namespace lipfilter
