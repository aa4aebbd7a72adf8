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

#ifndef LIPFILTER_BENCH_HPP_
#define LIPFILTER_BENCH_HPP_

#include <cstdint>

#include "lipfilter/filter_l1.hpp"
#include "lipfilter/rational.hpp"
#include "lipfilter/seed.hpp"

namespace lipfilter {

enum class FilterKind { kL0, kL1 };

struct LookupStats {
  int d = 0;
  int r = 0;
  std::uint64_t queries = 0;
  double mean_lookups = 0;
  std::uint64_t max_lookups = 0;
};

// Per-query lookup cost of a filter on a b = 1 hard instance on {0,1}^d with
// m = 8 anchor pairs. Even-numbered queries are uniform vertices, odd ones
// cycle through the anchors. Every query runs in a fresh filter session, so
// the count is the cost of one query from a cold cache. The l1 filter uses
// slack l1_slack.
LookupStats MeasureHardInstanceLookups(FilterKind kind, int d, int r,
                                       std::uint64_t queries,
                                       const Seed& seed,
                                       const FilterOptions& options = {},
                                       const Rational& l1_slack =
                                           Rational(1, 100));

}  // namespace lipfilter

#endif  // LIPFILTER_BENCH_HPP_
