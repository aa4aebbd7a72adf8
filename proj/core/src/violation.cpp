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

#include "lipfilter/violation.hpp"

#include <algorithm>
#include <string>

#include "lipfilter/errors.hpp"

namespace lipfilter {

Rational ViolationScore(const Value& fx, const Value& fy, Distance dist) {
  if (!fx || !fy || dist == kInfiniteDistance) return Rational();
  Rational excess = (*fx - *fy).Abs() - Rational(dist);
  return excess.sign() > 0 ? excess : Rational();
}

Rational ViolationScore(const FunctionOracle& f, Vertex x, Vertex y) {
  const Distance d = f.graph().Dist(x, y);
  return ViolationScore(f.Lookup(x), f.Lookup(y), d);
}

Distance ViolationRadius(const Rational& fx, const Rational& lo,
                         const Rational& hi, const Rational& tau) {
  const Rational gap = Max(fx - lo, hi - fx) - tau;
  if (gap.sign() <= 0) return -1;
  // dist < gap  <=>  dist <= ceil(gap) - 1.
  return gap.Ceil().ToInt64() - 1;
}

std::vector<Vertex> ViolNeighbors(const Graph& g, const ValueFn& value,
                                  const Rational& lo, const Rational& hi,
                                  const Rational& tau, Vertex x,
                                  std::uint64_t ball_budget) {
  if (tau.sign() < 0) {
    throw Error(ErrorCode::kInvalidParam, "threshold must be nonnegative");
  }
  g.CheckVertex(x);
  std::vector<Vertex> out;
  const Value fx = value(x);
  if (!fx) return out;
  const Distance radius = ViolationRadius(*fx, lo, hi, tau);
  if (radius < 1) return out;
  const std::uint64_t size = g.BallSize(x, radius);
  if (size > ball_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "violation search ball of " + std::to_string(size) +
                    " vertices exceeds budget " + std::to_string(ball_budget));
  }
  // |fx - fy| > dist + tau  <=>  fy > above[dist] or fy < below[dist].
  std::vector<Rational> above(radius + 1);
  std::vector<Rational> below(radius + 1);
  for (Distance k = 1; k <= radius; ++k) {
    above[k] = *fx + Rational(k) + tau;
    below[k] = *fx - Rational(k) - tau;
  }
  g.ForEachInBall(x, radius, [&](Vertex y, Distance dist) {
    if (dist == 0) return;
    const Value fy = value(y);
    if (!fy) return;
    if (*fy > above[dist] || *fy < below[dist]) out.push_back(y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> ViolNeighbors(const FunctionOracle& f, const Rational& tau,
                                  Vertex x, std::uint64_t ball_budget) {
  return ViolNeighbors(
      f.graph(), [&f](Vertex v) { return f.Lookup(v); }, f.range_lo(),
      f.range_hi(), tau, x, ball_budget);
}

bool IsDangerous(const FunctionOracle& f, Vertex x,
                 std::uint64_t ball_budget) {
  return !ViolNeighbors(f, Rational(), x, ball_budget).empty();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ViolationEdges(
    const Graph& g, const ValueTable& values, const Rational& tau) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t n = g.vertex_count();
  // The observed value range bounds every gap, so the ball search is exact.
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (const Value& v : values) {
    if (!v) continue;
    if (!lo || *v < *lo) lo = *v;
    if (!hi || *v > *hi) hi = *v;
  }
  if (!lo) return out;
  const ValueFn value = [&values](Vertex v) { return values[v.id]; };
  for (std::uint64_t i = 0; i < n; ++i) {
    for (Vertex y : ViolNeighbors(g, value, *lo, *hi, tau, Vertex{i},
                                  std::numeric_limits<std::uint64_t>::max())) {
      if (y.id <= i) continue;
      if (*values[i] < *values[y.id]) {
        out.emplace_back(i, y.id);
      } else {
        out.emplace_back(y.id, i);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational MaxViolationScore(const Graph& g, const ValueTable& values) {
  Rational best;
  const std::uint64_t n = g.vertex_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = i + 1; j < n; ++j) {
      best = Max(best, ViolationScore(values[i], values[j],
                                      g.Dist(Vertex{i}, Vertex{j})));
    }
  }
  return best;
}

}  // namespace lipfilter
