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

#include "lipfilter/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "common/corpus.hpp"
#include "lipfilter/errors.hpp"
#include "lipfilter/violation.hpp"

namespace lipfilter {
namespace {

using testing::Grid;
using testing::Table;

std::size_t BruteForceCover(std::uint64_t n, const EdgeList& edges) {
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

bool IsCover(const EdgeList& edges, const std::vector<std::uint64_t>& cover) {
  for (auto [u, v] : edges) {
    if (!std::binary_search(cover.begin(), cover.end(), u) &&
        !std::binary_search(cover.begin(), cover.end(), v)) {
      return false;
    }
  }
  return true;
}

TEST(MinVertexCoverTest, SmallGraphs) {
  EXPECT_EQ(MinVertexCover({{0, 1}}, 10).size, 1u);
  EXPECT_EQ(MinVertexCover({{0, 1}, {1, 2}, {0, 2}}, 10).size, 2u);
  EXPECT_EQ(MinVertexCover({}, 10).size, 0u);
}

TEST(MinVertexCoverTest, CapExceeded) {
  EdgeList matching;
  for (std::uint64_t i = 0; i < 6; ++i) matching.push_back({2 * i, 2 * i + 1});
  try {
    MinVertexCover(matching, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_EQ(MinVertexCover(matching, 6).size, 6u);
}

TEST(MinVertexCoverTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t n = 1 + rng() % 20;
    std::bernoulli_distribution coin(0.05 + 0.3 * (trial % 4) / 4.0);
    EdgeList edges;
    for (std::uint64_t u = 0; u < n; ++u) {
      for (std::uint64_t v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    const VertexCover vc = MinVertexCover(edges, 20);
    EXPECT_EQ(vc.size, BruteForceCover(n, edges));
    EXPECT_EQ(vc.vertices.size(), vc.size);
    EXPECT_TRUE(std::is_sorted(vc.vertices.begin(), vc.vertices.end()));
    EXPECT_TRUE(IsCover(edges, vc.vertices));
    EXPECT_EQ(MinVertexCover(edges, 20).vertices, vc.vertices);
  }
}

TEST(ExactL0Test, Examples) {
  auto line2 = Grid(2, 1);
  EXPECT_EQ(ViolationCover(*line2, Table({"0", "4"})).size, 1u);
  EXPECT_EQ(ExactL0Distance(*line2, Table({"0", "4"})), Rational(1, 2));
  auto line3 = Grid(3, 1);
  EXPECT_EQ(ExactL0Distance(*line3, Table({"0", "3", "0"})), Rational(1, 3));
  EXPECT_EQ(ViolationCover(*line3, Table({"0", "3", "0"})).vertices,
            std::vector<std::uint64_t>{1});
  EXPECT_EQ(ExactL0Distance(*line3, Table({"0", "1", "2"})), Rational(0));
}

TEST(ExactL0Test, SizeLimit) {
  auto g = testing::Cube(13);
  try {
    ExactL0Distance(*g, ValueTable(g->vertex_count(), Rational(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeExceeded);
  }
}

TEST(ExactL1Test, ZeroFour) {
  const L1Distance d = ExactL1Distance(*Grid(2, 1), Table({"0", "4"}));
  EXPECT_EQ(d.distance, Rational(3, 2));
  EXPECT_TRUE(IsCLipschitz(*Grid(2, 1), d.witness, 1));
}

TEST(ExactL1Test, ZeroThreeZero) {
  auto g = Grid(3, 1);
  const ValueTable f = Table({"0", "3", "0"});
  const L1Distance d = ExactL1Distance(*g, f);
  EXPECT_EQ(d.distance, Rational(2, 3));
  EXPECT_EQ(L1Norm(d.witness, f), d.distance);
  // Grid search over half-integers in [0, 3].
  Rational best(100);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        const ValueTable h{Rational(a, 2), Rational(b, 2), Rational(c, 2)};
        if (IsCLipschitz(*g, h, 1)) best = Min(best, L1Norm(h, f));
      }
    }
  }
  EXPECT_EQ(best, Rational(2, 3));
}

TEST(ExactL1Test, LipschitzIsZero) {
  std::mt19937_64 rng(62);
  auto g = Grid(4, 2);
  const ValueTable f = testing::RandomLipschitz(*g, 3, rng);
  const L1Distance d = ExactL1Distance(*g, f);
  EXPECT_EQ(d.distance, Rational(0));
  EXPECT_EQ(d.witness, f);
}

TEST(ExactL1Test, WitnessAndBounds) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::RandomDomain(rng, 6, 3, 64);
    const Rational r(std::uniform_int_distribution<int>(1, 5)(rng));
    const ValueTable f = testing::RandomValues(*g, r, 3, rng);
    const L1Distance d = ExactL1Distance(*g, f);
    ASSERT_TRUE(IsCLipschitz(*g, d.witness, 1)) << testing::DomainName(*g);
    EXPECT_EQ(L1Norm(d.witness, f), d.distance);
    EXPECT_LE(d.distance, r * ExactL0Distance(*g, f));
    // The Lipschitz extension of f off a minimum cover is a feasible point.
    const ValueTable ext = [&] {
      ValueTable t = f;
      const auto cover = ViolationCover(*g, f).vertices;
      for (auto c : cover) t[c] = std::nullopt;
      ValueTable out = t;
      for (auto c : cover) {
        Rational v(0);
        for (std::uint64_t y = 0; y < t.size(); ++y) {
          if (t[y]) v = Max(v, *t[y] - Rational(g->Dist(Vertex{c}, Vertex{y})));
        }
        out[c] = v;
      }
      return out;
    }();
    EXPECT_LE(d.distance, L1Norm(ext, f));
  }
}

TEST(ExactL1Test, SizeLimit) {
  auto g = testing::Cube(7);
  try {
    ExactL1Distance(*g, ValueTable(g->vertex_count(), Rational(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeExceeded);
  }
}

TEST(NormsTest, L1AndHamming) {
  EXPECT_EQ(L1Norm(Table({"0", "1"}), Table({"1", "1/2"})), Rational(3, 4));
  EXPECT_EQ(HammingDistance(Table({"0", "?", "2"}), Table({"0", "1", "3"})), 2u);
}

}  // namespace
}  // namespace lipfilter
