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

#include "lipfilter/filter_l1.hpp"

#include <string>
#include <utility>

#include "lipfilter/errors.hpp"
#include "value_memo.hpp"

namespace lipfilter {
namespace {

constexpr int kMaxRounds = 4096;

void RequireTotal(const Value& v, const Graph& g, Vertex x) {
  if (!v) {
    throw Error(ErrorCode::kPartialFunction,
                "l1 filter needs a total function; ? at " +
                    g.CanonicalName(x));
  }
}

Rational Sign(const Rational& v) { return Rational(v.sign()); }

}  // namespace

Rational Schedule::Tau(int t) const {
  return r * Pow(Rational(2, 3), t - 1);
}

Rational Schedule::Delta(int t) const {
  return r / Rational(3) * Pow(Rational(2, 3), t - 2);
}

Schedule MakeSchedule(const Rational& r, const Rational& slack) {
  if (r.sign() <= 0) {
    throw Error(ErrorCode::kInvalidParam, "range diameter must be positive");
  }
  if (slack.sign() <= 0) {
    throw Error(ErrorCode::kInvalidParam, "slack must be positive");
  }
  const Rational target = r / slack;
  const Rational step(3, 2);
  Rational power(1);
  int k = 0;
  while (power < target) {
    power *= step;
    if (++k > kMaxRounds) {
      throw Error(ErrorCode::kInvalidParam, "slack too small for r");
    }
  }
  return Schedule{r, slack, 1 + k};
}

RoundKey L1RoundKey(const Seed& seed, int t) {
  return seed.DeriveRoundKey("l1-round", static_cast<std::uint64_t>(t));
}

std::vector<ValueTable> GlobalFilterL1Trace(const FunctionOracle& f,
                                            const Rational& slack,
                                            GlobalMatcher matcher,
                                            const Seed& seed,
                                            const FilterOptions& options) {
  const Graph& g = f.graph();
  const std::uint64_t n = g.vertex_count();
  const Schedule schedule = MakeSchedule(f.range_diameter(), slack);
  std::vector<ValueTable> trace;
  trace.push_back(Materialize(f));
  for (std::uint64_t i = 0; i < n; ++i) RequireTotal(trace[0][i], g, Vertex{i});

  for (int t = 2; t <= schedule.rounds; ++t) {
    const ValueTable& prev = trace.back();
    const Rational tau = schedule.Tau(t);
    const Rational delta = schedule.Delta(t);
    const ValueFn value = [&prev](Vertex v) { return prev[v.id]; };
    auto nbrs = [&](Vertex x) {
      return ViolNeighbors(g, value, f.range_lo(), f.range_hi(), tau, x,
                           options.ball_budget);
    };

    std::vector<std::optional<Vertex>> partner;
    if (matcher == GlobalMatcher::kLca) {
      MatchingLca lca(nbrs, L1RoundKey(seed, t), options.match_budget);
      partner.reserve(n);
      for (std::uint64_t x = 0; x < n; ++x) {
        partner.push_back(lca.MatchOf(Vertex{x}));
      }
    } else {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
      for (std::uint64_t x = 0; x < n; ++x) {
        for (Vertex y : nbrs(Vertex{x})) {
          if (y.id > x) edges.emplace_back(x, y.id);
        }
      }
      partner = matcher == GlobalMatcher::kCanonicalGreedy
                    ? CanonicalGreedyMatching(n, edges)
                    : GlobalGreedyMatching(n, edges, L1RoundKey(seed, t));
    }

    ValueTable next = prev;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (!partner[x]) continue;
      next[x] = *prev[x] + Sign(*prev[partner[x]->id] - *prev[x]) * delta;
    }
    trace.push_back(std::move(next));
  }
  return trace;
}

ValueTable GlobalFilterL1(const FunctionOracle& f, const Rational& slack,
                          GlobalMatcher matcher, const Seed& seed,
                          const FilterOptions& options) {
  return std::move(GlobalFilterL1Trace(f, slack, matcher, seed, options).back());
}

struct LocalFilterL1::Round {
  explicit Round(const Graph& g) : memo(g) {}
  internal::VertexMemo<Rational> memo;
  std::unique_ptr<MatchingLca> matcher;
  Rational tau;
  Rational delta;
};

LocalFilterL1::LocalFilterL1(OraclePtr f, const Rational& slack,
                             const Seed& seed, const FilterOptions& options)
    : f_(std::move(f)),
      schedule_(MakeSchedule(f_->range_diameter(), slack)),
      seed_(seed),
      options_(options) {
  const Graph& g = f_->graph();
  for (int t = 1; t <= schedule_.rounds; ++t) {
    auto round = std::make_unique<Round>(g);
    if (t >= 2) {
      round->tau = schedule_.Tau(t);
      round->delta = schedule_.Delta(t);
      const Rational tau = round->tau;
      auto nbrs = [this, &g, t, tau](Vertex x) {
        return ViolNeighbors(
            g, [this, t](Vertex v) { return Value(RoundValue(v, t - 1)); },
            f_->range_lo(), f_->range_hi(), tau, x, options_.ball_budget);
      };
      round->matcher = std::make_unique<MatchingLca>(
          nbrs, L1RoundKey(seed_, t), options_.match_budget);
    }
    rounds_.push_back(std::move(round));
  }
}

LocalFilterL1::~LocalFilterL1() = default;

Rational LocalFilterL1::Query(Vertex x) {
  return QueryRound(x, schedule_.rounds);
}

Rational LocalFilterL1::QueryRound(Vertex x, int t) {
  if (t < 1 || t > schedule_.rounds) {
    throw Error(ErrorCode::kInvalidParam,
                "round " + std::to_string(t) + " outside 1.." +
                    std::to_string(schedule_.rounds));
  }
  f_->graph().CheckVertex(x);
  return RoundValue(x, t);
}

Rational LocalFilterL1::RoundValue(Vertex x, int t) {
  Round& round = *rounds_[t - 1];
  if (const Rational* hit = round.memo.Find(x)) return *hit;
  if (t == 1) {
    Value v = f_->Lookup(x);
    RequireTotal(v, f_->graph(), x);
    return round.memo.Put(x, *v);
  }
  Rational fx = RoundValue(x, t - 1);
  if (std::optional<Vertex> y = round.matcher->MatchOf(x)) {
    const Rational fy = RoundValue(*y, t - 1);
    fx += Sign(fy - fx) * round.delta;
  }
  return round.memo.Put(x, std::move(fx));
}

void LocalFilterL1::ClearCache() {
  for (auto& round : rounds_) {
    round->memo.Clear();
    if (round->matcher) round->matcher->ClearCache();
  }
}

std::size_t LocalFilterL1::cache_size() const {
  std::size_t total = 0;
  for (const auto& round : rounds_) {
    total += round->memo.size();
    if (round->matcher) total += round->matcher->cache_size();
  }
  return total;
}

}  // namespace lipfilter
