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

#ifndef LIPFILTER_FILTER_L1_HPP_
#define LIPFILTER_FILTER_L1_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "lipfilter/function.hpp"
#include "lipfilter/matching.hpp"
#include "lipfilter/rational.hpp"
#include "lipfilter/seed.hpp"
#include "lipfilter/violation.hpp"

namespace lipfilter {

// Rounds t = 2..rounds of the l1 filter. rounds is 1 + the least k with
// (3/2)^k >= r / slack (1 when slack >= r), so tau(rounds) <= slack.
struct Schedule {
  Rational r;
  Rational slack;
  int rounds = 1;

  // r * (2/3)^(t-1)
  Rational Tau(int t) const;
  // (r/3) * (2/3)^(t-2) = Tau(t) / 2
  Rational Delta(int t) const;
};

// Throws kInvalidParam unless r > 0 and slack > 0.
Schedule MakeSchedule(const Rational& r, const Rational& slack);

struct FilterOptions {
  std::uint64_t ball_budget = kDefaultBallBudget;
  std::uint64_t match_budget = kDefaultMatchBudget;
  // l0 filter only: cache every lookup of f for the session. Off trades
  // repeated lookups for speed when f is cheap.
  bool memoize_lookups = true;
};

enum class GlobalMatcher {
  // Greedy in canonical edge order; no randomness.
  kCanonicalGreedy,
  // Greedy in the seeded rank order used by the local filter.
  kRankedGreedy,
  // The matching LCA itself, queried at every vertex.
  kLca,
};

// Round key used by both the global and local l1 filter.
RoundKey L1RoundKey(const Seed& seed, int t);

// Reference run over the whole domain. Element i of the result is the table
// after round i + 1, so front() is f and back() is the output. f must be
// total.
std::vector<ValueTable> GlobalFilterL1Trace(const FunctionOracle& f,
                                            const Rational& slack,
                                            GlobalMatcher matcher,
                                            const Seed& seed,
                                            const FilterOptions& options = {});
ValueTable GlobalFilterL1(const FunctionOracle& f, const Rational& slack,
                          GlobalMatcher matcher, const Seed& seed,
                          const FilterOptions& options = {});

// Local access to the output of the l1 filter for one seed. Values of every
// round are memoized; ClearCache() never changes answers. Single-threaded;
// build one per thread from the same seed.
class LocalFilterL1 {
 public:
  LocalFilterL1(OraclePtr f, const Rational& slack, const Seed& seed,
                const FilterOptions& options = {});
  ~LocalFilterL1();

  // The filtered value at x. Throws kPartialFunction if f reads ?.
  Rational Query(Vertex x);
  // The value after round t (1 <= t <= rounds).
  Rational QueryRound(Vertex x, int t);

  const Schedule& schedule() const { return schedule_; }
  const FunctionOracle& function() const { return *f_; }
  void ClearCache();
  std::size_t cache_size() const;

 private:
  struct Round;
  Rational RoundValue(Vertex x, int t);

  OraclePtr f_;
  Schedule schedule_;
  Seed seed_;
  FilterOptions options_;
  std::vector<std::unique_ptr<Round>> rounds_;  // index t - 1
};

}  // namespace lipfilter

#endif  // LIPFILTER_FILTER_L1_HPP_
