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

#include "lipfilter/filter_l0.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lipfilter/errors.hpp"
#include "lipfilter/violation.hpp"
#include "value_memo.hpp"

namespace lipfilter {

ValueTable GlobalFilterL0(const Graph& g, const ValueTable& f,
                          const std::vector<std::uint64_t>& cover,
                          const Rational& floor) {
  const std::uint64_t n = g.vertex_count();
  if (f.size() != n) {
    throw Error(ErrorCode::kInvalidParam, "table size does not match domain");
  }
  std::vector<char> in_cover(n, 0);
  for (std::uint64_t c : cover) {
    g.CheckVertex(Vertex{c});
    in_cover[c] = 1;
  }
  for (const auto& [a, b] : ViolationEdges(g, f, Rational())) {
    if (!in_cover[a] && !in_cover[b]) {
      throw Error(ErrorCode::kNotACover,
                  "violated pair (" + g.CanonicalName(Vertex{a}) + ", " +
                      g.CanonicalName(Vertex{b}) + ") is not covered");
    }
  }
  ValueTable out = f;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (!in_cover[u] || !f[u]) continue;
    Rational best = floor;
    for (std::uint64_t v = 0; v < n; ++v) {
      if (in_cover[v] || !f[v]) continue;
      const Distance d = g.Dist(Vertex{u}, Vertex{v});
      if (d == kInfiniteDistance) continue;
      best = Max(best, *f[v] - Rational(d));
    }
    out[u] = best;
  }
  return out;
}

RoundKey L0Key(const Seed& seed) { return seed.DeriveRoundKey("l0", 0); }

struct LocalFilterL0::Memo {
  explicit Memo(const Graph& g) : values(g), partners(g) {}
  internal::VertexMemo<Value> values;
  internal::VertexMemo<std::optional<Vertex>> partners;
};

LocalFilterL0::LocalFilterL0(OraclePtr f, const Seed& seed,
                             const FilterOptions& options)
    : f_(std::move(f)),
      options_(options),
      s_radius_(f_->range_diameter().Floor().ToInt64()),
      memo_(std::make_unique<Memo>(f_->graph())) {
  const Rational lo = f_->range_lo();
  const Rational hi = f_->range_hi();
  matcher_ = std::make_unique<MatchingLca>(
      [this, lo, hi](Vertex x) {
        return ViolNeighbors(
            f_->graph(),
            [this](Vertex v) {
              return options_.memoize_lookups ? Lookup(v) : f_->Lookup(v);
            },
            lo, hi,
            Rational(), x, options_.ball_budget);
      },
      L0Key(seed), options_.match_budget);
}

LocalFilterL0::~LocalFilterL0() = default;

Value LocalFilterL0::Lookup(Vertex x) {
  if (const Value* hit = memo_->values.Find(x)) return *hit;
  return memo_->values.Put(x, f_->Lookup(x));
}

std::optional<Vertex> LocalFilterL0::MatchOf(Vertex x) {
  f_->graph().CheckVertex(x);
  if (const auto* hit = memo_->partners.Find(x)) return *hit;
  return memo_->partners.Put(x, matcher_->MatchOf(x));
}

Value LocalFilterL0::Query(Vertex x) {
  const Graph& g = f_->graph();
  g.CheckVertex(x);
  const Value fx = Lookup(x);
  if (!fx) return fx;
  if (!MatchOf(x)) return fx;

  const Rational& hi = f_->range_hi();
  Rational best = f_->range_lo();
  if (s_radius_ < 1) return best;
  const std::uint64_t size = g.BallSize(x, s_radius_);
  if (size > options_.ball_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "extension ball of " + std::to_string(size) +
                    " vertices exceeds budget " +
                    std::to_string(options_.ball_budget));
  }
  std::vector<std::vector<Vertex>> shells(s_radius_ + 1);
  g.ForEachInBall(x, s_radius_, [&](Vertex y, Distance d) {
    if (d > 0) shells[d].push_back(y);
  });

  // Shell k can only improve on best if hi - k > best. Within a shell the
  // first unmatched vertex in decreasing value order is the shell maximum,
  // so matching verdicts are only needed for candidates that would improve.
  std::vector<std::pair<Rational, Vertex>> candidates;
  for (Distance k = 1; k <= s_radius_; ++k) {
    const Rational dk(k);
    if (hi - dk <= best) break;
    candidates.clear();
    for (Vertex y : shells[k]) {
      const Value fy = Lookup(y);
      if (fy && *fy - dk > best) candidates.emplace_back(*fy, y);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first
                                          : a.second < b.second;
              });
    for (const auto& [value, y] : candidates) {
      if (!MatchOf(y)) {
        best = value - dk;
        break;
      }
    }
  }
  return best;
}

void LocalFilterL0::ClearCache() {
  memo_->values.Clear();
  memo_->partners.Clear();
  matcher_->ClearCache();
}

std::size_t LocalFilterL0::cache_size() const {
  return memo_->values.size() + memo_->partners.size() +
         matcher_->cache_size();
}

std::vector<std::uint64_t> MatchedSet(LocalFilterL0& filter) {
  std::vector<std::uint64_t> out;
  const std::uint64_t n = filter.function().graph().vertex_count();
  for (std::uint64_t x = 0; x < n; ++x) {
    if (filter.MatchOf(Vertex{x})) out.push_back(x);
  }
  return out;
}

}  // namespace lipfilter
