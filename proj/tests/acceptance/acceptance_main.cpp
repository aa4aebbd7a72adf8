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

// One PASS/FAIL line per acceptance criterion. Run with --criterion N, or
// without arguments to run all of them in order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common/corpus.hpp"
#include "json.hpp"
#include "lipfilter/bench.hpp"
#include "lipfilter/errors.hpp"
#include "lipfilter/filter_l0.hpp"
#include "lipfilter/filter_l1.hpp"
#include "lipfilter/function.hpp"
#include "lipfilter/function_io.hpp"
#include "lipfilter/hard_instances.hpp"
#include "lipfilter/oracles.hpp"
#include "lipfilter/privacy.hpp"
#include "lipfilter/tester.hpp"
#include "lipfilter/violation.hpp"

#ifndef LIPFILTER_SOURCE_DIR
#define LIPFILTER_SOURCE_DIR "."
#endif

namespace lipfilter {
namespace {

using testing::GraphPtr;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Fixed(double v, int digits = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

GraphPtr PickDomain(std::mt19937_64& rng, int max_cube_d, int max_n,
                    int max_grid_d, std::uint64_t max_vertices) {
  while (true) {
    GraphPtr g;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      g = testing::Cube(std::uniform_int_distribution<int>(1, max_cube_d)(rng));
    } else {
      g = testing::Grid(std::uniform_int_distribution<int>(2, max_n)(rng),
                        std::uniform_int_distribution<int>(1, max_grid_d)(rng));
    }
    if (g->vertex_count() <= max_vertices) return g;
  }
}

Rational PickRange(std::mt19937_64& rng, int max_r) {
  return Rational(std::uniform_int_distribution<int>(1, max_r)(rng));
}

// Uniform values, corrupted Lipschitz tables, and Lipschitz tables scaled
// into steep ones, in rotation.
ValueTable PickTable(const Graph& g, const Rational& r, int index,
                     std::mt19937_64& rng) {
  switch (index % 3) {
    case 0:
      return testing::RandomValues(
          g, r, std::uniform_int_distribution<int>(1, 3)(rng), rng);
    case 1: {
      const int changes = 1 + static_cast<int>(g.vertex_count() / 8);
      return testing::Corrupt(g, testing::RandomLipschitz(g, r, rng), r,
                              changes, 2, rng);
    }
    default: {
      ValueTable t = testing::RandomLipschitz(g, r, rng);
      for (Value& v : t) v = Min(r, *v * 3);
      return t;
    }
  }
}

ValueTable QueryAllL0(LocalFilterL0& filter, std::uint64_t n) {
  ValueTable out(n);
  for (std::uint64_t x = 0; x < n; ++x) out[x] = filter.Query(Vertex{x});
  return out;
}

ValueTable QueryAllL1(LocalFilterL1& filter, std::uint64_t n, int round = 0) {
  ValueTable out(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    out[x] = round == 0 ? filter.Query(Vertex{x})
                        : filter.QueryRound(Vertex{x}, round);
  }
  return out;
}

std::vector<ValueTable> LocalRounds(LocalFilterL1& filter, std::uint64_t n) {
  std::vector<ValueTable> rounds;
  for (int t = 1; t <= filter.schedule().rounds; ++t) {
    rounds.push_back(QueryAllL1(filter, n, t));
  }
  return rounds;
}

// Largest |g(x) - g(y)| over edges.
Rational MaxEdgeGap(const Graph& g, const ValueTable& t) {
  Rational worst;
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y : g.Neighbors(Vertex{x})) {
      if (y.id > x) worst = Max(worst, (*t[x] - *t[y.id]).Abs());
    }
  }
  return worst;
}

const Rational kSlack(1, 100);

bool g_verbose = false;

void Progress(const std::string& phase, int done, double seconds) {
  if (g_verbose) {
    std::fprintf(stderr, "  %s %d (%.0f s)\n", phase.c_str(), done, seconds);
  }
}

// 1. Identity on Lipschitz inputs.
Outcome Criterion1() {
  Outcome out;
  Stopwatch clock;
  std::mt19937_64 rng(1001);
  std::uint64_t queries = 0;
  for (int i = 0; i < 50; ++i) {
    GraphPtr g = i % 2 == 0
                     ? testing::Cube(std::uniform_int_distribution<int>(1, 10)(rng))
                     : PickDomain(rng, 1, 4, 4, 256);
    if (i % 2 == 1 && g->kind() == GraphKind::kHypercube) {
      g = testing::Grid(std::uniform_int_distribution<int>(2, 4)(rng),
                        std::uniform_int_distribution<int>(1, 4)(rng));
    }
    const Rational r = PickRange(rng, 4);
    const ValueTable table = testing::RandomLipschitz(*g, r, rng);
    if (!IsCLipschitz(*g, table, 1)) out.Fail("corpus function not Lipschitz");
    OraclePtr f = testing::Oracle(g, 0, r, table);
    const std::uint64_t n = g->vertex_count();
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Seed seed = Seed::FromInteger(1000 * i + s);
      LocalFilterL0 l0(f, seed);
      LocalFilterL1 l1(f, kSlack, seed);
      for (std::uint64_t x = 0; x < n; ++x) {
        if (l0.Query(Vertex{x}) != table[x]) {
          out.Fail("l0 changed a Lipschitz value on " + testing::DomainName(*g));
        }
        if (l1.Query(Vertex{x}) != *table[x]) {
          out.Fail("l1 changed a Lipschitz value on " + testing::DomainName(*g));
        }
        queries += 2;
      }
    }
  }
  const double seconds = clock.Seconds();
  if (seconds >= 60) out.Fail("runtime " + Fixed(seconds, 1) + " s >= 60 s");
  out.detail << "50 functions x 20 seeds, " << queries
             << " exhaustive queries, runtime " << Fixed(seconds, 1)
             << " s (limit 60 s)";
  return out;
}

// 2. Output Lipschitzness of both filters.
Outcome Criterion2() {
  Outcome out;
  Stopwatch clock;
  std::mt19937_64 rng(1002);
  Rational worst_l1;
  Rational worst_l0;
  for (int i = 0; i < 200; ++i) {
    GraphPtr g = PickDomain(rng, 10, 4, 5, 1024);
    const Rational r = PickRange(rng, 6);
    OraclePtr f = testing::Oracle(g, 0, r, PickTable(*g, r, i, rng));
    const Seed seed = Seed::FromInteger(2000 + i);
    const std::uint64_t n = g->vertex_count();
    LocalFilterL1 l1(f, kSlack, seed);
    const Rational gap1 = MaxEdgeGap(*g, QueryAllL1(l1, n));
    LocalFilterL0 l0(f, seed);
    const ValueTable out0 = QueryAllL0(l0, n);
    const Rational gap0 = MaxEdgeGap(*g, out0);
    worst_l1 = Max(worst_l1, gap1);
    worst_l0 = Max(worst_l0, gap0);
    if (gap1 > 1 + kSlack) out.Fail("l1 edge gap " + gap1.ToString());
    if (!IsCLipschitz(*g, out0, 1)) out.Fail("l0 edge gap " + gap0.ToString());
  }
  const double seconds = clock.Seconds();
  if (seconds >= 300) out.Fail("runtime " + Fixed(seconds, 1) + " s >= 300 s");
  out.detail << "200 functions; max l1 edge gap " << worst_l1
             << " (limit 101/100), max l0 edge gap " << worst_l0
             << " (limit 1), runtime " << Fixed(seconds, 1)
             << " s (limit 300 s)";
  return out;
}

// 3. Round invariant of the l1 filter.
Outcome Criterion3() {
  Outcome out;
  std::mt19937_64 rng(1003);
  std::uint64_t checks = 0;
  for (int i = 0; i < 100; ++i) {
    GraphPtr g = PickDomain(rng, 8, 4, 4, 256);
    const Rational r = PickRange(rng, 6);
    OraclePtr f = testing::Oracle(g, 0, r, PickTable(*g, r, i, rng));
    LocalFilterL1 filter(f, kSlack, Seed::FromInteger(3000 + i));
    const Schedule& s = filter.schedule();
    const auto rounds = LocalRounds(filter, g->vertex_count());
    for (int t = 1; t <= s.rounds; ++t) {
      const Rational bound = r * Pow(Rational(2, 3), t - 1);
      const Rational vs = MaxViolationScore(*g, rounds[t - 1]);
      ++checks;
      if (vs > bound) {
        out.Fail("round " + std::to_string(t) + " score " + vs.ToString() +
                 " > " + bound.ToString());
      }
      for (const Value& v : rounds[t - 1]) {
        if (*v < 0 || *v > r) out.Fail("value left [0, r]");
      }
    }
  }
  out.detail << "100 instances, " << checks
             << " (instance, round) pairs, exact rational comparison";
  return out;
}

// 4. l0 blowup at most 2.
Outcome Criterion4() {
  Outcome out;
  std::mt19937_64 rng(1004);
  double worst_ratio = 0;
  int instances = 0;
  for (int i = 0; instances < 100; ++i) {
    GraphPtr g = PickDomain(rng, 12, 8, 4, 4096);
    const Rational r = PickRange(rng, 6);
    const int changes = std::uniform_int_distribution<int>(1, 12)(rng);
    const ValueTable table = testing::Corrupt(
        *g, testing::RandomLipschitz(*g, r, rng), r, changes, 2, rng);
    const std::size_t min_vc = ViolationCover(*g, table, 12).size;
    if (min_vc == 0) continue;
    ++instances;
    OraclePtr f = testing::Oracle(g, 0, r, table);
    LocalFilterL0 filter(f, Seed::FromInteger(4000 + i));
    const std::uint64_t changed =
        HammingDistance(QueryAllL0(filter, g->vertex_count()), table);
    worst_ratio = std::max(worst_ratio, static_cast<double>(changed) / min_vc);
    if (changed > 2 * min_vc) {
      out.Fail(std::to_string(changed) + " changes > 2 * " +
               std::to_string(min_vc));
    }
  }
  out.detail << "100 instances with 1 <= minVC <= 12; max changed/minVC "
             << Fixed(worst_ratio, 3) << " (limit 2)";
  return out;
}

// 5. l1 blowup at most 2 and per-round monotonicity.
Outcome Criterion5() {
  Outcome out;
  std::mt19937_64 rng(1005);
  double worst_ratio = 0;
  int rounds_checked = 0;
  for (int i = 0; i < 50; ++i) {
    GraphPtr g = PickDomain(rng, 4, 4, 2, 16);
    const Rational r = PickRange(rng, 6);
    const ValueTable table = PickTable(*g, r, i, rng);
    OraclePtr f = testing::Oracle(g, 0, r, table);
    const L1Distance best = ExactL1Distance(*g, table);
    LocalFilterL1 filter(f, kSlack, Seed::FromInteger(5000 + i));
    const auto rounds = LocalRounds(filter, g->vertex_count());
    const Rational moved = L1Norm(rounds.back(), table);
    if (moved > 2 * best.distance) {
      out.Fail("||g - f|| = " + moved.ToString() + " > 2 * " +
               best.distance.ToString());
    }
    if (best.distance > 0) {
      worst_ratio = std::max(worst_ratio, (moved / best.distance).ToDouble());
    }
    for (std::size_t t = 0; t + 1 < rounds.size(); ++t) {
      ++rounds_checked;
      if (L1Norm(rounds[t + 1], best.witness) > L1Norm(rounds[t], best.witness)) {
        out.Fail("distance to the nearest Lipschitz function grew in round " +
                 std::to_string(t + 2));
      }
    }
  }
  out.detail << "50 instances (<= 16 vertices); max ||g-f||/l1 "
             << Fixed(worst_ratio, 3) << " (limit 2); " << rounds_checked
             << " monotone round steps";
  return out;
}

// 6. Order independence and local = global.
Outcome Criterion6() {
  Outcome out;
  std::mt19937_64 rng(1006);
  for (int i = 0; i < 30; ++i) {
    GraphPtr g = PickDomain(rng, 8, 4, 4, 256);
    const Rational r = PickRange(rng, 5);
    OraclePtr f = testing::Oracle(g, 0, r, PickTable(*g, r, i, rng));
    const Seed seed = Seed::FromInteger(6000 + i);
    const std::uint64_t n = g->vertex_count();
    std::vector<std::uint64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    ValueTable ref0;
    ValueTable ref1;
    for (int perm = 0; perm < 20; ++perm) {
      std::shuffle(order.begin(), order.end(), rng);
      LocalFilterL0 l0(f, seed);
      LocalFilterL1 l1(f, kSlack, seed);
      ValueTable a(n);
      ValueTable b(n);
      for (std::uint64_t x : order) {
        a[x] = l0.Query(Vertex{x});
        b[x] = l1.Query(Vertex{x});
      }
      if (perm == 0) {
        ref0 = a;
        ref1 = b;
      } else if (a != ref0 || b != ref1) {
        out.Fail("answers depend on query order on " + testing::DomainName(*g));
      }
    }
    LocalFilterL0 l0(f, seed);
    const std::vector<std::uint64_t> matched = MatchedSet(l0);
    if (GlobalFilterL0(*g, Materialize(*f), matched) != ref0) {
      out.Fail("l0 local != global");
    }
    if (GlobalFilterL1(*f, kSlack, GlobalMatcher::kLca, seed) != ref1 ||
        GlobalFilterL1(*f, kSlack, GlobalMatcher::kRankedGreedy, seed) != ref1) {
      out.Fail("l1 local != global");
    }
  }
  out.detail << "30 instances x 20 query permutations, both filters; local = "
                "global for l0 (matched-set cover) and l1 (LCA and ranked "
                "greedy matchings)";
  return out;
}

double KsDistance(std::vector<double> samples, double scale) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = LaplaceCdf(samples[i], scale);
    worst = std::max({worst, cdf - i / n, (i + 1) / n - cdf});
  }
  return worst;
}

// 7. Laplace noise of the mechanisms.
Outcome Criterion7() {
  Outcome out;
  const double eps = 1.0;
  const double scale = 2.0 / eps;
  auto g = testing::Cube(6);
  std::mt19937_64 rng(1007);
  const ValueTable table = testing::RandomLipschitz(*g, 3, rng);
  OraclePtr f = testing::Oracle(g, 0, 3, table);

  std::vector<double> plain;
  std::vector<double> filtered;
  LaplaceNoise noise_a(71);
  LaplaceNoise noise_b(72);
  for (int i = 0; i < 100000; ++i) {
    const Vertex x{static_cast<std::uint64_t>(i) % 64};
    const double fx = table[x.id]->ToDouble();
    plain.push_back(LaplaceMechanism(*f, x, eps, 2.0, noise_a) - fx);
    const MechanismResult m = FilterMechanism(
        f, x, 3, eps, 0.01, Seed::FromInteger(i % 97), noise_b);
    filtered.push_back(m.value - fx);
  }
  const char* names[] = {"Laplace mechanism", "filter mechanism"};
  int which = 0;
  for (const auto* samples : {&plain, &filtered}) {
    const double ks = KsDistance(*samples, scale);
    if (ks >= 0.02) out.Fail(std::string(names[which]) + " KS " + Fixed(ks));
    out.detail << (which == 0 ? "1e5 samples each; " : "; ") << names[which]
               << ": KS " << Fixed(ks) << " (limit 0.02), tail/bound at t=1,2,3:";
    for (int t = 1; t <= 3; ++t) {
      const double tail =
          std::count_if(samples->begin(), samples->end(),
                        [&](double z) { return std::fabs(z) >= t * scale; }) /
          static_cast<double>(samples->size());
      const double bound = std::exp(-t);
      out.detail << " " << Fixed(tail) << "/" << Fixed(bound);
      if (tail > 2 * bound || tail < bound / 2) {
        out.Fail("tail at t=" + std::to_string(t) + " is " + Fixed(tail));
      }
    }
    ++which;
  }
  return out;
}

// 8. Binary-search mechanism accuracy.
Outcome Criterion8() {
  Outcome out;
  auto g = testing::Cube(16);
  std::mt19937_64 rng(1008);
  const ValueTable table = testing::RandomLipschitz(*g, 4, rng);
  OraclePtr f = testing::Oracle(g, 0, 4, table);
  const double eps = 1.0;
  const double delta = 0.001;
  const BinarySearchParams p = MakeBinarySearchParams(*g, std::nullopt, eps, delta);
  int within = 0;
  int exact = 0;
  int max_iterations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vertex x{rng() & 0xFFFF};
    const double fx = table[x.id]->ToDouble();
    LaplaceNoise noise(8000 + i);
    const MechanismResult noisy = BinarySearchMechanism(
        f, x, std::nullopt, eps, delta, Seed::FromInteger(8000 + i), noise);
    if (std::fabs(noisy.value - fx) <= p.alpha) ++within;

    MechanismOptions quiet;
    quiet.add_noise = false;
    const MechanismResult clean = BinarySearchMechanism(
        f, x, std::nullopt, eps, delta, Seed::FromInteger(9000 + i), noise, quiet);
    max_iterations = std::max(max_iterations, clean.iterations);
    if (clean.filtered == *table[x.id] && clean.value == fx &&
        clean.iterations <= p.max_iteration - 1) {
      ++exact;
    }
  }
  if (within < 980) out.Fail(std::to_string(within) + "/1000 within alpha");
  if (exact < 1000) out.Fail(std::to_string(exact) + "/1000 exact without noise");
  out.detail << "d=16, r=" << p.r << ", alpha=" << Fixed(p.alpha, 3) << ": "
             << within << "/1000 within alpha (limit 980); noiseless exact "
             << exact << "/1000 with at most " << max_iterations
             << " iterations (limit " << p.max_iteration - 1 << ")";
  return out;
}

// Lipschitz functions on {0,1}^32 with values in [0, 2].
OraclePtr LipschitzTesterInstance(int i, std::mt19937_64& rng) {
  const int d = 32;
  auto g = testing::Cube(d);
  switch (i % 3) {
    case 0: {
      std::vector<int> coords(d);
      std::iota(coords.begin(), coords.end(), 1);
      std::shuffle(coords.begin(), coords.end(), rng);
      const int k = std::uniform_int_distribution<int>(1, 8)(rng);
      std::string text = "clip(" + Rational(std::uniform_int_distribution<int>(0, 4)(rng), 2).ToString();
      for (int j = 0; j < k; ++j) {
        text += (rng() % 2 ? " + x" : " - x") + std::to_string(coords[j]);
      }
      text += ", 0, 2)";
      return std::make_shared<ExpressionOracle>(g, 0, 2,
                                                ExprProgram::Parse(text, d));
    }
    case 1: {
      const std::uint64_t p = rng() & 0xFFFFFFFFull;
      const Rational shift(std::uniform_int_distribution<int>(0, 2)(rng), 2);
      return std::make_shared<CallbackOracle>(g, 0, 2, [p, shift](Vertex x) -> Value {
        return Min(Rational(2), shift + Rational(std::popcount(x.id ^ p)));
      });
    }
    default: {
      const int k = 6;
      auto small = testing::Cube(k);
      const ValueTable t = testing::RandomLipschitz(*small, 2, rng);
      std::vector<int> coords(d);
      std::iota(coords.begin(), coords.end(), 1);
      std::shuffle(coords.begin(), coords.end(), rng);
      coords.resize(k);
      return LiftJunta(t, d, coords, rng() & 0xFFFFFFFFull, 0, 2);
    }
  }
}

struct FarInstance {
  OraclePtr f;
  Rational l0;
};

FarInstance FarTesterInstance(int i, const Seed& seed) {
  const int d = 32;
  std::mt19937_64 rng(seed.DeriveU64("far-instance", i));
  const Rational r(14, 5);
  const FarTable far = SearchFarTable(4, r, Rational(201, 400), rng);
  std::vector<int> coords(d);
  std::iota(coords.begin(), coords.end(), 1);
  std::shuffle(coords.begin(), coords.end(), rng);
  coords.resize(4);
  FarInstance out;
  out.f = LiftJunta(far.table, d, coords, rng() & 0xFFFFFFFFull, 0, r);
  out.l0 = ExactL0Distance(*testing::Cube(4), far.table, 16);
  return out;
}

// 9. Tester dichotomy at d = 32 and estimator concentration.
Outcome Criterion9() {
  Outcome out;
  Stopwatch clock;
  const Seed seed = Seed::FromInteger(1009);
  TesterParams params;
  params.eps = 0.25;
  params.samples = 4000;
  params.reps = 9;
  params.majority_early_stop = true;
  params.early_decision = true;
  params.filter.memoize_lookups = false;
  const Rational far_bound = Rational(201, 100) * Rational(1, 4);

  int errors = 0;
  int lipschitz_rejected = 0;
  int far_accepted = 0;
  std::mt19937_64 rng(seed.DeriveU64("lipschitz-corpus", 0));
  for (int i = 0; i < 100; ++i) {
    OraclePtr f = LipschitzTesterInstance(i, rng);
    const TestResult result = TolerantTest(f, params, seed.Derive("lipschitz", i));
    if (!result.accept) {
      ++errors;
      ++lipschitz_rejected;
    }
    Progress("lipschitz", i + 1, clock.Seconds());
  }
  Rational min_far_l0(1);
  for (int i = 0; i < 100; ++i) {
    const FarInstance inst = FarTesterInstance(i, seed);
    min_far_l0 = Min(min_far_l0, inst.l0);
    if (inst.l0 < far_bound) out.Fail("far instance not certified");
    const TestResult result = TolerantTest(inst.f, params, seed.Derive("far", i));
    if (result.accept) {
      ++errors;
      ++far_accepted;
    }
    Progress("far", i + 1, clock.Seconds());
  }
  if (errors > 5) out.Fail(std::to_string(errors) + " errors > 5");
  const double dichotomy_seconds = clock.Seconds();

  // Concentration at m = (1500 / eps)^2 on {0,1}^8, against the exact rate
  // of the same run's filter session and interval.
  TesterParams full;
  full.eps = 0.25;
  full.samples = DefaultSampleCount(full.eps);
  const double band = full.eps / 300;
  int concentrated = 0;
  double worst_gap = 0;
  const int runs = 100;
  std::mt19937_64 crng(seed.DeriveU64("concentration-corpus", 0));
  for (int k = 0; k < runs; ++k) {
    OraclePtr f;
    if (k % 2 == 0) {
      std::mt19937_64 frng(seed.DeriveU64("concentration-far", k));
      const FarTable far = SearchFarTable(4, Rational(14, 5), Rational(1, 4), frng);
      std::vector<int> coords{1, 2, 3, 4, 5, 6, 7, 8};
      std::shuffle(coords.begin(), coords.end(), frng);
      coords.resize(4);
      f = LiftJunta(far.table, 8, coords, frng() & 0xFF, 0, Rational(14, 5));
    } else {
      auto g = testing::Cube(8);
      const int changes = std::uniform_int_distribution<int>(1, 60)(crng);
      f = testing::Oracle(g, 0, 3,
                          testing::Corrupt(*g, testing::RandomLipschitz(*g, 3, crng),
                                           3, changes, 2, crng));
    }
    std::mt19937_64 sampler(seed.DeriveU64("concentration-samples", k));
    const Seed filter_seed = seed.Derive("concentration-filter", k);
    const TestRun run = TolerantTestOnce(f, full, sampler, filter_seed);
    const Rational omega = ExactDisagreementRate(f, run.interval_lo,
                                                 run.interval_hi, filter_seed);
    const double gap = std::fabs(run.omega_hat - omega.ToDouble());
    worst_gap = std::max(worst_gap, gap);
    if (gap < band) ++concentrated;
    Progress("concentration", k + 1, clock.Seconds());
  }
  if (concentrated < 99) {
    out.Fail(std::to_string(concentrated) + "/100 runs within eps/300");
  }
  out.detail << "Lipschitz accepted " << 100 - lipschitz_rejected
             << "/100, far (min certified l0 " << min_far_l0 << " >= "
             << far_bound << ") rejected " << 100 - far_accepted
             << "/100, errors " << errors << " (limit 5), "
             << Fixed(dichotomy_seconds, 0) << " s; concentration at m="
             << full.samples << ": " << concentrated
             << "/100 runs with |omega_hat - omega| < " << Fixed(band, 6)
             << " (limit 99), max gap " << Fixed(worst_gap, 6) << ", total "
             << Fixed(clock.Seconds(), 0) << " s";
  return out;
}

// 10. Hard-instance dichotomy.
Outcome Criterion10() {
  Outcome out;
  std::mt19937_64 rng(1010);
  const int d = 12;
  const int r = 4;
  const int m = 4;
  int lipschitz = 0;
  for (int i = 0; i < 100; ++i) {
    const HardInstance inst = SampleHardInstance(d, r, 0, m, rng, true);
    if (IsCLipschitz(*inst.graph, *inst.Oracle(), 1)) {
      ++lipschitz;
    } else {
      out.Fail("separated b=0 instance is not Lipschitz");
    }
  }
  int exact_pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const HardInstance inst = SampleHardInstance(d, r, 1, m, rng, true);
    bool all = true;
    for (std::size_t j = 0; j < inst.a.size(); ++j) {
      const Rational vs = ViolationScore(*inst.Oracle(), inst.a[j], inst.a_prime[j]);
      all = all && vs == Rational(1);
    }
    if (all) {
      ++exact_pairs;
    } else {
      out.Fail("b=1 corresponding pair without score exactly 1");
    }
  }
  out.detail << "d=" << d << ", r=" << r << ", m=" << m << ": " << lipschitz
             << "/100 separated b=0 instances Lipschitz by exhaustive edge scan; "
             << exact_pairs << "/100 b=1 instances with every corresponding "
             << "pair at score exactly 1";
  return out;
}

// 11. Lookup scaling of the l0 filter.
Outcome Criterion11() {
  Outcome out;
  const std::string path =
      std::string(LIPFILTER_SOURCE_DIR) + "/benchmarks/results/l0_lookup_scaling.json";
  nlohmann::json artifact;
  try {
    artifact = nlohmann::json::parse(ReadFile(path));
  } catch (const std::exception& e) {
    out.Fail(std::string("cannot read committed table: ") + e.what());
    return out;
  }
  const FilterOptions options;
  const std::uint64_t queries = artifact.value("queries", 0);
  const Seed seed = Seed::FromHex(artifact.value("seed", std::string(64, '0')));
  std::vector<double> xs;
  std::vector<double> ys;
  std::uint64_t max_lookups = 0;
  std::ostringstream table;
  for (int d = 8; d <= 20; ++d) {
    LookupStats stats;
    try {
      stats = MeasureHardInstanceLookups(FilterKind::kL0, d, 2, queries, seed, options);
    } catch (const Error& e) {
      out.Fail("d=" + std::to_string(d) + ": " + e.what());
      continue;
    }
    xs.push_back(std::log(d));
    ys.push_back(std::log(stats.mean_lookups));
    max_lookups = std::max(max_lookups, stats.max_lookups);
    table << " " << d << ":" << Fixed(stats.mean_lookups, 2);
    bool found = false;
    for (const auto& row : artifact["rows"]) {
      if (row.value("d", 0) != d) continue;
      found = true;
      if (std::fabs(row.value("mean_lookups", -1.0) - stats.mean_lookups) > 1e-9 ||
          row.value("max_lookups", std::uint64_t{0}) != stats.max_lookups) {
        out.Fail("d=" + std::to_string(d) + " differs from the committed table");
      }
    }
    if (!found) out.Fail("committed table has no row for d=" + std::to_string(d));
  }
  double slope = 0;
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxy / sxx;
  }
  if (slope > 4) out.Fail("log-log slope " + Fixed(slope, 3) + " > 4");
  if (max_lookups > options.ball_budget) out.Fail("a query exceeded the budget");
  out.detail << "r=2, " << queries << " queries per d; mean lookups" << table.str()
             << "; log-log slope " << Fixed(slope, 3) << " (limit 4); max "
             << max_lookups << " lookups per query (budget " << options.ball_budget
             << "); matches committed table";
  return out;
}

int RunCriterion(int n) {
  static const std::vector<std::function<Outcome()>> kCriteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,  Criterion6,
      Criterion7, Criterion8, Criterion9, Criterion10, Criterion11};
  Outcome result;
  try {
    result = kCriteria.at(n - 1)();
  } catch (const std::exception& e) {
    result.Fail(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s: %s\n", n, result.pass ? "PASS" : "FAIL",
              result.detail.str().c_str());
  std::fflush(stdout);
  return result.pass ? 0 : 1;
}

}  // namespace
}  // namespace lipfilter

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for lipfilter"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion number (1-11); 0 runs all")
      ->check(CLI::Range(0, 11));
  app.add_flag("--verbose", lipfilter::g_verbose, "progress on stderr");
  CLI11_PARSE(app, argc, argv);
  if (criterion != 0) return lipfilter::RunCriterion(criterion);
  int status = 0;
  for (int n = 1; n <= 11; ++n) status |= lipfilter::RunCriterion(n);
  return status;
}
