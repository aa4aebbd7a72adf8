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

#include "lipfilter/graph.hpp"

#include <cstdint>
#include <deque>
#include <vector>

#include <gtest/gtest.h>

#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

Vertex CubeVertex(const Graph& g, std::vector<int> coords) {
  return g.FromCoords(coords);
}

std::vector<Distance> Bfs(const Graph& g, Vertex s) {
  std::vector<Distance> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{s};
  dist[s.id] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.Neighbors(v)) {
      if (dist[w.id] < 0) {
        dist[w.id] = dist[v.id] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint64_t Binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

TEST(GraphTest, SizesAndDegrees) {
  const Graph grid = Graph::Hypergrid(3, 4);
  EXPECT_EQ(grid.vertex_count(), 81u);
  EXPECT_EQ(grid.max_degree(), 8);
  const Graph cube = Graph::Hypercube(5);
  EXPECT_EQ(cube.vertex_count(), 32u);
  EXPECT_EQ(cube.max_degree(), 5);
  EXPECT_EQ(cube.diameter(), 5);
  EXPECT_EQ(grid.diameter(), 8);
}

TEST(GraphTest, HypercubeNeighborsCanonical) {
  const Graph g = Graph::Hypercube(2);
  const auto n = g.Neighbors(CubeVertex(g, {0, 0}));
  ASSERT_EQ(n.size(), 2u);
  EXPECT_EQ(n[0], CubeVertex(g, {0, 1}));
  EXPECT_EQ(n[1], CubeVertex(g, {1, 0}));
}

TEST(GraphTest, HypergridBoundaryAndInterior) {
  const Graph line = Graph::Hypergrid(3, 1);
  const auto n = line.Neighbors(line.FromCoords(std::vector<int>{1}));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(line.Coords(n[0]), std::vector<int>{2});
  const Graph g = Graph::Hypergrid(3, 2);
  EXPECT_EQ(g.Neighbors(g.FromCoords(std::vector<int>{2, 2})).size(), 4u);
}

TEST(GraphTest, AnalyticDistances) {
  const Graph cube = Graph::Hypercube(3);
  EXPECT_EQ(cube.Dist(CubeVertex(cube, {0, 0, 0}), CubeVertex(cube, {1, 1, 0})),
            2);
  const Graph grid = Graph::Hypergrid(5, 2);
  EXPECT_EQ(grid.Dist(grid.FromCoords(std::vector<int>{1, 1}),
                      grid.FromCoords(std::vector<int>{4, 2})),
            4);
  EXPECT_EQ(grid.Dist(Vertex{7}, Vertex{7}), 0);
}

TEST(GraphTest, Balls) {
  const Graph cube = Graph::Hypercube(3);
  const Vertex o = CubeVertex(cube, {0, 0, 0});
  const auto b1 = cube.Ball(o, 1, /*open=*/true);
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0].vertex, o);
  EXPECT_EQ(b1[0].distance, 0);
  EXPECT_EQ(cube.Ball(o, 2, true).size(), 4u);
  const Graph grid = Graph::Hypergrid(3, 2);
  EXPECT_EQ(grid.Ball(grid.FromCoords(std::vector<int>{2, 2}), 1, false).size(),
            5u);
}

TEST(GraphTest, BallBudget) {
  const Graph cube = Graph::Hypercube(10);
  try {
    cube.Ball(Vertex{0}, 3, false, 100);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(GraphTest, HypercubeBallSizeIsBinomialSum) {
  for (int d = 1; d <= 10; ++d) {
    const Graph cube = Graph::Hypercube(d);
    std::uint64_t expected = 0;
    for (int radius = 0; radius <= d; ++radius) {
      expected += Binomial(d, radius);
      EXPECT_EQ(cube.Ball(Vertex{3 % cube.vertex_count()}, radius, false).size(),
                expected);
      EXPECT_EQ(cube.BallSize(Vertex{0}, radius), expected);
    }
  }
}

TEST(GraphTest, AnalyticDistanceMatchesBfs) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const Graph g = Graph::Hypergrid(n, d);
      for (std::uint64_t s = 0; s < g.vertex_count(); ++s) {
        const auto bfs = Bfs(g, Vertex{s});
        for (std::uint64_t t = 0; t < g.vertex_count(); ++t) {
          ASSERT_EQ(g.Dist(Vertex{s}, Vertex{t}), bfs[t]);
        }
      }
    }
  }
}

TEST(GraphTest, BallEnumerationMatchesDistances) {
  const Graph g = Graph::Hypergrid(4, 3);
  for (std::uint64_t s = 0; s < g.vertex_count(); s += 5) {
    for (Distance radius = 0; radius <= 4; ++radius) {
      std::uint64_t count = 0;
      for (std::uint64_t t = 0; t < g.vertex_count(); ++t) {
        if (g.Dist(Vertex{s}, Vertex{t}) <= radius) ++count;
      }
      const auto ball = g.Ball(Vertex{s}, radius, false);
      EXPECT_EQ(ball.size(), count);
      for (const BallEntry& e : ball) {
        EXPECT_EQ(e.distance, g.Dist(Vertex{s}, e.vertex));
      }
    }
  }
}

TEST(GraphTest, ExplicitMetricAxioms) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t i = 0; i + 1 < 40; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, 20});
  edges.push_back({5, 33});
  edges.push_back({5, 33});
  const Graph g = Graph::Explicit(48, edges);  // 40..47 isolated
  const std::uint64_t n = g.vertex_count();
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const Distance dxy = g.Dist(Vertex{x}, Vertex{y});
      ASSERT_EQ(dxy, g.Dist(Vertex{y}, Vertex{x}));
      ASSERT_EQ(dxy == 0, x == y);
      if (dxy == kInfiniteDistance) continue;
      for (std::uint64_t z = 0; z < n; ++z) {
        const Distance dyz = g.Dist(Vertex{y}, Vertex{z});
        if (dyz == kInfiniteDistance) continue;
        ASSERT_LE(g.Dist(Vertex{x}, Vertex{z}), dxy + dyz);
      }
    }
  }
  EXPECT_EQ(g.Dist(Vertex{0}, Vertex{45}), kInfiniteDistance);
  EXPECT_EQ(g.Neighbors(Vertex{5}).size(), 3u);
}

TEST(GraphTest, ExplicitRejectsSelfLoops) {
  EXPECT_THROW(Graph::Explicit(3, {{1, 1}}), Error);
}

TEST(GraphTest, OutOfDomain) {
  const Graph g = Graph::Hypercube(3);
  try {
    g.Neighbors(Vertex{8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfDomain);
  }
}

TEST(GraphTest, CanonicalNamesRoundTrip) {
  const Graph grid = Graph::Hypergrid(12, 2);
  const Vertex v = grid.FromCoords(std::vector<int>{3, 11});
  EXPECT_EQ(grid.CanonicalName(v), "0311");
  EXPECT_EQ(grid.ParseCanonicalName("0311"), v);
  const Graph cube = Graph::Hypercube(4);
  EXPECT_EQ(cube.CanonicalName(Vertex{5}), "0101");
  EXPECT_EQ(cube.ParseCanonicalName("0101"), Vertex{5});
}

TEST(GraphTest, LargestCubeReportsSize) {
  const Graph g = Graph::Hypercube(64);
  EXPECT_FALSE(g.vertex_count_fits());
  EXPECT_THROW(g.vertex_count(), Error);
  EXPECT_EQ(g.Dist(Vertex{0}, Vertex{~std::uint64_t{0}}), 64);
}

}  // namespace
}  // namespace lipfilter
