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

#include "lipfilter/tester.hpp"

#include <cmath>
#include <string>

#include "lipfilter/errors.hpp"
#include "lipfilter/filter_l0.hpp"
#include "lipfilter/oracles.hpp"

namespace lipfilter {
namespace {

// Sessions are reset beyond this many cached entries; answers are unchanged.
constexpr std::size_t kMaxSessionCache = std::size_t{1} << 22;

Vertex SampleVertex(const Graph& g, std::mt19937_64& rng) {
  if (!g.vertex_count_fits()) return Vertex{rng()};
  std::uniform_int_distribution<std::uint64_t> dist(0, g.vertex_count() - 1);
  return Vertex{dist(rng)};
}

void CheckParams(const Graph& g, const TesterParams& params) {
  if (!(params.eps > 0 && params.eps < 1.0 / 3)) {
    throw Error(ErrorCode::kInvalidParam, "eps must be in (0, 1/3)");
  }
  if (g.dimension() < 4) {
    throw Error(ErrorCode::kInvalidParam, "tester needs dimension >= 4");
  }
  if (params.reps < 1 || params.reps % 2 == 0) {
    throw Error(ErrorCode::kInvalidParam, "repetitions must be odd");
  }
}

}  // namespace

double IntervalHalfWidth(int d, double eps) {
  return 2.0 * std::sqrt(d * (std::log(d / eps) / std::log(kTesterLogBase)));
}

std::uint64_t DefaultSampleCount(double eps) {
  const double m = std::ceil((1500.0 / eps) * (1500.0 / eps));
  return static_cast<std::uint64_t>(m);
}

TestRun TolerantTestOnce(const OraclePtr& f, const TesterParams& params,
                         std::mt19937_64& rng, const Seed& filter_seed) {
  const Graph& g = f->graph();
  CheckParams(g, params);
  const std::uint64_t m =
      params.samples > 0 ? params.samples : DefaultSampleCount(params.eps);
  const double theta = kTesterThresholdFactor * params.eps;
  const std::uint64_t before = f->lookups();

  TestRun run;
  run.pivot = SampleVertex(g, rng);
  const Value fp = f->Lookup(run.pivot);
  if (!fp) {
    throw Error(ErrorCode::kPartialFunction, "tester needs a total function");
  }
  const Rational t =
      Rational::FromDouble(IntervalHalfWidth(g.dimension(), params.eps));
  run.interval_lo = *fp - t;
  run.interval_hi = *fp + t;
  LocalFilterL0 filter(RestrictToInterval(f, run.interval_lo, run.interval_hi),
                       filter_seed, params.filter);

  // Smallest disagreement count that rejects: d / m >= theta.
  std::uint64_t reject_at = static_cast<std::uint64_t>(std::ceil(theta * m));
  while (reject_at > 0 && static_cast<double>(reject_at - 1) / m >= theta) {
    --reject_at;
  }
  while (static_cast<double>(reject_at) / m < theta) ++reject_at;

  for (std::uint64_t i = 0; i < m; ++i) {
    if (params.early_decision &&
        (run.disagreements >= reject_at ||
         run.disagreements + (m - i) < reject_at)) {
      break;
    }
    const Vertex x = SampleVertex(g, rng);
    const Value fx = f->Lookup(x);
    if (!fx) {
      throw Error(ErrorCode::kPartialFunction, "tester needs a total function");
    }
    ++run.samples;
    if (*fx < run.interval_lo || *fx > run.interval_hi) {
      ++run.disagreements;
      continue;
    }
    if (filter.Query(x) != fx) ++run.disagreements;
    if (filter.cache_size() > kMaxSessionCache) filter.ClearCache();
  }
  run.accept = run.disagreements < reject_at;
  run.omega_hat = run.samples == 0
                      ? 0.0
                      : static_cast<double>(run.disagreements) / run.samples;
  run.lookups = f->lookups() - before;
  return run;
}

TestResult TolerantTest(const OraclePtr& f, const TesterParams& params,
                        const Seed& seed) {
  CheckParams(f->graph(), params);
  TestResult result;
  int accepts = 0;
  int rejects = 0;
  const int majority = params.reps / 2 + 1;
  for (int k = 0; k < params.reps; ++k) {
    std::mt19937_64 rng(seed.DeriveU64("tester-samples", k));
    TestRun run =
        TolerantTestOnce(f, params, rng, seed.Derive("tester-filter", k));
    (run.accept ? accepts : rejects) += 1;
    result.lookups += run.lookups;
    result.runs.push_back(std::move(run));
    if (params.majority_early_stop &&
        (accepts >= majority || rejects >= majority)) {
      break;
    }
  }
  result.accept = accepts > rejects;
  return result;
}

Rational EpsOfInterval(const Graph& g, const ValueTable& f,
                       const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi) {
  const VertexCover cover = ViolationCover(g, f);
  std::int64_t count = 0;
  for (std::uint64_t x : cover.vertices) {
    if (!f[x]) continue;
    if (lo && *f[x] < *lo) continue;
    if (hi && *f[x] > *hi) continue;
    ++count;
  }
  return Rational(count, static_cast<std::int64_t>(g.vertex_count()));
}

Rational ExactDisagreementRate(const OraclePtr& f, const Rational& lo,
                               const Rational& hi, const Seed& filter_seed,
                               const FilterOptions& options) {
  const Graph& g = f->graph();
  LocalFilterL0 filter(RestrictToInterval(f, lo, hi), filter_seed, options);
  const std::uint64_t n = g.vertex_count();
  std::int64_t count = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    const Value fx = f->Lookup(Vertex{x});
    if (!fx || *fx < lo || *fx > hi) {
      ++count;
      continue;
    }
    if (filter.Query(Vertex{x}) != fx) ++count;
  }
  return Rational(count, static_cast<std::int64_t>(n));
}

}  // namespace lipfilter
