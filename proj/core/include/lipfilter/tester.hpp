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

#ifndef LIPFILTER_TESTER_HPP_
#define LIPFILTER_TESTER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lipfilter/filter_l1.hpp"
#include "lipfilter/function.hpp"
#include "lipfilter/rational.hpp"
#include "lipfilter/seed.hpp"

namespace lipfilter {

// Log base inside the interval half-width.
inline constexpr double kTesterLogBase = 2.0;
inline constexpr double kTesterThresholdFactor = 2.005;

struct TesterParams {
  double eps = 0.25;
  // 0 selects the default (1500 / eps)^2.
  std::uint64_t samples = 0;
  // Odd.
  int reps = 9;
  // Stop once a strict majority of reps agree.
  bool majority_early_stop = false;
  // Stop a run once further samples cannot change its decision.
  bool early_decision = false;
  FilterOptions filter;
};

// 2 * sqrt(d * log2(d / eps)).
double IntervalHalfWidth(int d, double eps);
std::uint64_t DefaultSampleCount(double eps);

struct TestRun {
  bool accept = false;
  Vertex pivot;
  Rational interval_lo;
  Rational interval_hi;
  std::uint64_t samples = 0;        // samples evaluated
  std::uint64_t disagreements = 0;  // f(x_i) != y_i, with ? a disagreement
  double omega_hat = 0;             // disagreements / samples
  std::uint64_t lookups = 0;
};

struct TestResult {
  bool accept = false;
  std::vector<TestRun> runs;
  std::uint64_t lookups = 0;
};

// One run: pivot p, interval I = [f(p) - t, f(p) + t], then m uniform samples
// answered by the l0 filter on f restricted to I. Accepts iff
// disagreements / m < 2.005 eps. Throws kInvalidParam unless
// eps in (0, 1/3) and d >= 4.
TestRun TolerantTestOnce(const OraclePtr& f, const TesterParams& params,
                         std::mt19937_64& rng, const Seed& filter_seed);

// Majority over params.reps runs; run k uses streams derived from seed and k.
TestResult TolerantTest(const OraclePtr& f, const TesterParams& params,
                        const Seed& seed);

// |{x in C : f(x) in [lo, hi]}| / N for the canonical minimum cover C of the
// violation graph; a missing bound is unbounded.
Rational EpsOfInterval(const Graph& g, const ValueTable& f,
                       const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi);

// Exact fraction of vertices where the l0 filter on f restricted to [lo, hi]
// (with ? for values outside) disagrees with f, by querying every vertex.
Rational ExactDisagreementRate(const OraclePtr& f, const Rational& lo,
                               const Rational& hi, const Seed& filter_seed,
                               const FilterOptions& options = {});

}  // namespace lipfilter

#endif  // LIPFILTER_TESTER_HPP_
