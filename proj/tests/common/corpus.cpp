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

#include "common/corpus.hpp"

#include <algorithm>

namespace lipfilter::testing {

GraphPtr Cube(int d) { return std::make_shared<const Graph>(Graph::Hypercube(d)); }

GraphPtr Grid(int n, int d) {
  return std::make_shared<const Graph>(Graph::Hypergrid(n, d));
}

GraphPtr Line(int n) { return Grid(n, 1); }

ValueTable Table(const std::vector<std::string>& values) {
  ValueTable out;
  out.reserve(values.size());
  for (const std::string& v : values) out.push_back(ParseValue(v));
  return out;
}

OraclePtr Oracle(GraphPtr g, const Rational& lo, const Rational& hi,
                 ValueTable table) {
  return std::make_shared<DenseTableOracle>(std::move(g), lo, hi,
                                            std::move(table));
}

ValueTable RandomLipschitz(const Graph& g, const Rational& r,
                           std::mt19937_64& rng) {
  const std::uint64_t n = g.vertex_count();
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::uniform_int_distribution<int> anchors(1, 4);
  std::uniform_int_distribution<int> slope(1, 3);
  const std::int64_t top = r.Floor().ToInt64();
  std::uniform_int_distribution<std::int64_t> base(0, std::max<std::int64_t>(top, 0));
  struct Anchor {
    Vertex at;
    Rational value;
    Rational slope;
  };
  std::vector<Anchor> list;
  const int k = anchors(rng);
  for (int i = 0; i < k; ++i) {
    list.push_back({Vertex{pick(rng)}, Rational(base(rng)),
                    Rational(1, slope(rng))});
  }
  ValueTable out(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    Rational best = r;
    for (const Anchor& a : list) {
      best = Min(best, a.value + a.slope * Rational(g.Dist(Vertex{x}, a.at)));
    }
    out[x] = Max(Rational(0), Min(best, r));
  }
  return out;
}

ValueTable RandomValues(const Graph& g, const Rational& r, int denominator,
                        std::mt19937_64& rng) {
  const std::int64_t steps = (r * Rational(denominator)).Floor().ToInt64();
  std::uniform_int_distribution<std::int64_t> pick(0, steps);
  ValueTable out(g.vertex_count());
  for (Value& v : out) v = Rational(pick(rng), denominator);
  return out;
}

ValueTable Corrupt(const Graph& g, ValueTable base, const Rational& r,
                   int changes, int denominator, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, g.vertex_count() - 1);
  const std::int64_t steps = (r * Rational(denominator)).Floor().ToInt64();
  std::uniform_int_distribution<std::int64_t> value(0, steps);
  for (int i = 0; i < changes; ++i) {
    base[pick(rng)] = Rational(value(rng), denominator);
  }
  return base;
}

GraphPtr RandomDomain(std::mt19937_64& rng, int max_cube_d, int max_grid_d,
                      std::uint64_t max_vertices) {
  while (true) {
    GraphPtr g;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      g = Cube(std::uniform_int_distribution<int>(1, max_cube_d)(rng));
    } else {
      g = Grid(std::uniform_int_distribution<int>(2, 4)(rng),
               std::uniform_int_distribution<int>(1, max_grid_d)(rng));
    }
    if (g->vertex_count() <= max_vertices) return g;
  }
}

std::string DomainName(const Graph& g) {
  if (g.kind() == GraphKind::kHypercube) {
    return "cube(d=" + std::to_string(g.dimension()) + ")";
  }
  return "grid(n=" + std::to_string(g.side()) +
         ",d=" + std::to_string(g.dimension()) + ")";
}

}  // namespace lipfilter::testing
