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

#ifndef LIPFILTER_FILTER_L0_HPP_
#define LIPFILTER_FILTER_L0_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lipfilter/filter_l1.hpp"
#include "lipfilter/function.hpp"
#include "lipfilter/matching.hpp"
#include "lipfilter/seed.hpp"

namespace lipfilter {

// Extension from outside a cover: for u in cover with f(u) defined,
// g(u) = max(floor, max over defined v outside cover of f(v) - dist(u, v)).
// Vertices outside the cover keep f; ? stays ?. Throws kNotACover if a
// violated pair has both endpoints outside the cover. The result does not
// depend on the order of the cover.
ValueTable GlobalFilterL0(const Graph& g, const ValueTable& f,
                          const std::vector<std::uint64_t>& cover,
                          const Rational& floor = Rational());

RoundKey L0Key(const Seed& seed);

// Local access to the l0 filter for one seed.
//
// With [lo, hi] the declared range of f: an unmatched x answers f(x); a
// matched x answers max(lo, max over unmatched defined y with
// dist(x, y) <= floor(hi - lo) of f(y) - dist(x, y)). For lo = 0 this is the
// usual extension with floor 0 over the ball of radius r.
//
// Values of f and matching verdicts are memoized per session; ClearCache()
// never changes answers. Single-threaded.
class LocalFilterL0 {
 public:
  LocalFilterL0(OraclePtr f, const Seed& seed,
                const FilterOptions& options = {});
  ~LocalFilterL0();

  Value Query(Vertex x);
  // Partner of x in the matching of the violation graph at threshold 0.
  std::optional<Vertex> MatchOf(Vertex x);

  const FunctionOracle& function() const { return *f_; }
  void ClearCache();
  std::size_t cache_size() const;

 private:
  struct Memo;
  Value Lookup(Vertex x);

  OraclePtr f_;
  FilterOptions options_;
  Distance s_radius_;
  std::unique_ptr<MatchingLca> matcher_;
  std::unique_ptr<Memo> memo_;
};

// Vertices matched by the session's matching (queries every vertex).
std::vector<std::uint64_t> MatchedSet(LocalFilterL0& filter);

}  // namespace lipfilter

#endif  // LIPFILTER_FILTER_L0_HPP_
