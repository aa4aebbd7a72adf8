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

#ifndef LIPFILTER_VIOLATION_HPP_
#define LIPFILTER_VIOLATION_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lipfilter/function.hpp"
#include "lipfilter/graph.hpp"
#include "lipfilter/rational.hpp"

namespace lipfilter {

inline constexpr std::uint64_t kDefaultBallBudget = std::uint64_t{1} << 24;

// Value access used by the violation oracle; may be a memoized filter round.
using ValueFn = std::function<Value(Vertex)>;

// max(0, |fx - fy| - dist); 0 when either value is ? or dist is infinite.
Rational ViolationScore(const Value& fx, const Value& fy, Distance dist);
Rational ViolationScore(const FunctionOracle& f, Vertex x, Vertex y);

// Largest distance at which a vertex with value fx can still be in a pair
// with score > tau, given values in [lo, hi]; -1 if none can.
Distance ViolationRadius(const Rational& fx, const Rational& lo,
                         const Rational& hi, const Rational& tau);

// {y : dist(x, y) < |f(x) - f(y)| - tau}, sorted by vertex. Empty if f(x)
// is ?. The search is truncated at ViolationRadius, which is sound because
// every value lies in [lo, hi].
std::vector<Vertex> ViolNeighbors(const Graph& g, const ValueFn& value,
                                  const Rational& lo, const Rational& hi,
                                  const Rational& tau, Vertex x,
                                  std::uint64_t ball_budget =
                                      kDefaultBallBudget);
std::vector<Vertex> ViolNeighbors(const FunctionOracle& f, const Rational& tau,
                                  Vertex x,
                                  std::uint64_t ball_budget =
                                      kDefaultBallBudget);

// x takes part in some violated pair.
bool IsDangerous(const FunctionOracle& f, Vertex x,
                 std::uint64_t ball_budget = kDefaultBallBudget);

// Every pair with score > tau, oriented (low, high) by value, sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ViolationEdges(
    const Graph& g, const ValueTable& values, const Rational& tau);

// Exhaustive maximum score over all pairs.
Rational MaxViolationScore(const Graph& g, const ValueTable& values);

}  // namespace lipfilter

#endif  // LIPFILTER_VIOLATION_HPP_
