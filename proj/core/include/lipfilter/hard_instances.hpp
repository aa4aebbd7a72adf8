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

#ifndef LIPFILTER_HARD_INSTANCES_HPP_
#define LIPFILTER_HARD_INSTANCES_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "lipfilter/function.hpp"
#include "lipfilter/graph.hpp"
#include "lipfilter/rational.hpp"

namespace lipfilter {

// A sampled instance of the anchor-pair distribution on {0,1}^d.
//
// f(x) = |x - A[i]| for the first i with |x - A[i]| < r/2, otherwise
// r - |x - A'[i]| for the first i with |x - A'[i]| < r/2, otherwise r/2.
// A'[i] sits at distance r - b from A[i].
struct HardInstance {
  int d = 0;
  int r = 0;
  int b = 0;
  std::vector<Vertex> a;
  std::vector<Vertex> a_prime;
  std::shared_ptr<const Graph> graph;

  // Lazy evaluation; cost is O(m) distance computations.
  Rational Evaluate(Vertex x) const;
  // Oracle with declared range [0, r].
  OraclePtr Oracle() const;
  // A followed by A', duplicates kept.
  std::vector<Vertex> Support() const;
};

inline constexpr int kDefaultHardRetries = 10000;

// Requires 1 <= d <= 64, even r >= 2, b in {0, 1}, r - b <= d and m >= 1.
// With enforce_separation, whole anchor lists are resampled until
// CheckSeparation holds; throws kRetryExhausted after max_retries attempts.
HardInstance SampleHardInstance(int d, int r, int b, int m,
                                std::mt19937_64& rng, bool enforce_separation,
                                int max_retries = kDefaultHardRetries);

// True iff every pair of anchors other than (A[i], A'[i]) is at distance
// greater than d/4.
bool CheckSeparation(const HardInstance& inst);

// A dense far-from-Lipschitz table on {0,1}^k with values in {0, r/2, r}.
//
// Starting from r/2 everywhere, single vertices are turned into 0 or r
// anchors by a seeded hill climb on the exact l0 distance. Every step keeps
// the maximum violation score at most 1, the same as the corresponding pairs
// of b = 1 instances; after lifting to a larger cube this keeps every
// violated pair inside one copy of the small cube.
struct FarTable {
  int k = 0;
  Rational r;
  ValueTable table;
  Rational l0;  // exact relative l0 distance of table
};

// Requires 1 <= k <= 10 and r > 0. Throws kRetryExhausted if no table with
// l0 >= target is found within max_restarts climbs of max_steps steps.
FarTable SearchFarTable(int k, const Rational& r, const Rational& target,
                        std::mt19937_64& rng, int max_steps = 2000,
                        int max_restarts = 200);

// Lifts a function on {0,1}^k to a junta on {0,1}^d: x maps to the table
// index whose i-th bit (most significant first) is coordinate coords[i] of
// x XOR mask. Coordinates are 1-based and distinct. Lifting through a cube
// automorphism preserves the relative l0 distance to Lipschitz.
OraclePtr LiftJunta(const ValueTable& table, int d, std::vector<int> coords,
                    std::uint64_t mask, Rational lo, Rational hi);
// Reads coordinates 1..k with no mask.
OraclePtr LiftJunta(const ValueTable& table, int k, int d, Rational lo,
                    Rational hi);

}  // namespace lipfilter

#endif  // LIPFILTER_HARD_INSTANCES_HPP_
