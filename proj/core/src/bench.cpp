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

#include "lipfilter/bench.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "lipfilter/errors.hpp"
#include "lipfilter/filter_l0.hpp"
#include "lipfilter/hard_instances.hpp"

namespace lipfilter {

LookupStats MeasureHardInstanceLookups(FilterKind kind, int d, int r,
                                       std::uint64_t queries,
                                       const Seed& seed,
                                       const FilterOptions& options,
                                       const Rational& l1_slack) {
  if (queries == 0) {
    throw Error(ErrorCode::kInvalidParam, "need at least one query");
  }
  std::mt19937_64 rng(seed.DeriveU64("bench-instance",
                                     static_cast<std::uint64_t>(d)));
  const HardInstance inst =
      SampleHardInstance(d, r, /*b=*/1, /*m=*/8, rng, false);
  const OraclePtr f = inst.Oracle();
  const std::vector<Vertex> support = inst.Support();
  const std::uint64_t mask =
      d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;

  LookupStats stats;
  stats.d = d;
  stats.r = r;
  stats.queries = queries;
  double total = 0;
  for (std::uint64_t i = 0; i < queries; ++i) {
    const Vertex x =
        i % 2 == 0 ? Vertex{rng() & mask} : support[(i / 2) % support.size()];
    const Seed filter_seed = seed.Derive("bench-filter", i);
    const std::uint64_t before = f->lookups();
    if (kind == FilterKind::kL0) {
      LocalFilterL0 filter(f, filter_seed, options);
      filter.Query(x);
    } else {
      LocalFilterL1 filter(f, l1_slack, filter_seed, options);
      filter.Query(x);
    }
    const std::uint64_t used = f->lookups() - before;
    total += static_cast<double>(used);
    stats.max_lookups = std::max(stats.max_lookups, used);
  }
  stats.mean_lookups = total / static_cast<double>(queries);
  return stats;
}

}  // namespace lipfilter
