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

#ifndef LIPFILTER_GRAPH_HPP_
#define LIPFILTER_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lipfilter/errors.hpp"

namespace lipfilter {

// A vertex is identified by its index in the canonical vertex order.
//
// Hypergrid [n]^d: index = sum_i (x_i - 1) * n^(d-i), so coordinate 1 is the
// most significant digit and index order is lexicographic order on coords.
// Hypercube {0,1}^d: coordinate i is bit (d - i) of the index. Explicit graphs
// use the vertex id directly.
struct Vertex {
  std::uint64_t id = 0;

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

using Distance = std::int64_t;
inline constexpr Distance kInfiniteDistance =
    std::numeric_limits<Distance>::max();

enum class GraphKind { kHypergrid, kHypercube, kExplicit };

struct BallEntry {
  Vertex vertex;
  Distance distance;
};

// Undirected unweighted graph with shortest-path metric. Immutable after
// construction and safe to share between threads.
class Graph {
 public:
  static Graph Hypergrid(int n, int d);
  static Graph Hypercube(int d);
  // Vertices are 0..vertex_count-1. Self-loops are rejected; duplicate edges
  // are merged.
  static Graph Explicit(
      std::uint64_t vertex_count,
      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

  GraphKind kind() const { return kind_; }
  // Side length n (2 for the hypercube, 0 for explicit graphs).
  int side() const { return side_; }
  // Dimension d (0 for explicit graphs).
  int dimension() const { return dim_; }
  int max_degree() const { return max_degree_; }
  // Throws kSizeExceeded when the count does not fit in 64 bits
  // (the 64-dimensional hypercube).
  std::uint64_t vertex_count() const;
  bool vertex_count_fits() const { return count_ <= kMaxU64; }
  // Largest finite distance between two vertices (kInfiniteDistance for
  // disconnected explicit graphs).
  Distance diameter() const { return diameter_; }

  bool Contains(Vertex x) const { return x.id <= max_id_; }
  void CheckVertex(Vertex x) const;

  // Coordinates: 1..n for hypergrids, 0/1 for hypercubes. Not available for
  // explicit graphs.
  std::vector<int> Coords(Vertex x) const;
  Vertex FromCoords(std::span<const int> coords) const;

  // Fixed-width big-endian digit string. Hypercube: d characters of 0/1.
  // Hypergrid: d coordinates, each zero-padded to the width of n. Explicit:
  // the decimal id.
  std::string CanonicalName(Vertex x) const;
  Vertex ParseCanonicalName(std::string_view name) const;

  // Neighbors in ascending canonical order.
  std::vector<Vertex> Neighbors(Vertex x) const;

  // Shortest-path distance; analytic for hypergrid and hypercube.
  Distance Dist(Vertex x, Vertex y) const;

  // Number of vertices at distance <= radius from x (saturating).
  std::uint64_t BallSize(Vertex x, Distance radius) const;

  // Calls visit(vertex, distance) once for every vertex at distance <= radius
  // from x. Enumeration order is deterministic but unspecified.
  template <typename Visit>
  void ForEachInBall(Vertex x, Distance radius, Visit&& visit) const;

  // All vertices at distance < radius (open) or <= radius (closed), sorted
  // by (distance, vertex). Throws kBudgetExceeded if more than vertex_budget
  // vertices would be returned.
  std::vector<BallEntry> Ball(Vertex x, Distance radius, bool open,
                              std::uint64_t vertex_budget =
                                  std::numeric_limits<std::uint64_t>::max())
      const;

 private:
  static constexpr unsigned __int128 kMaxU64 =
      std::numeric_limits<std::uint64_t>::max();

  Graph() = default;

  template <typename Visit>
  void HypercubeBall(std::uint64_t center, int first_bit, Distance remaining,
                     Distance used, Visit& visit) const;
  template <typename Visit>
  void HypergridBall(std::uint64_t center, std::uint64_t current, int coord,
                     Distance remaining, Distance used, Visit& visit) const;
  void ExplicitBall(Vertex x, Distance radius,
                    const std::function<void(Vertex, Distance)>& visit) const;
  int Digit(std::uint64_t id, int coord) const;

  GraphKind kind_ = GraphKind::kHypercube;
  int side_ = 2;
  int dim_ = 0;
  int max_degree_ = 0;
  unsigned __int128 count_ = 1;
  std::uint64_t max_id_ = 0;
  Distance diameter_ = 0;
  // stride_[i] = n^(d-1-i) for 0-based coordinate i.
  std::vector<std::uint64_t> stride_;
  // Explicit graphs.
  std::vector<std::vector<std::uint64_t>> adjacency_;
  // All-pairs distances for small explicit graphs (row-major, -1 = infinite).
  std::vector<std::int32_t> apsp_;
};

template <typename Visit>
void Graph::HypercubeBall(std::uint64_t center, int first_bit,
                          Distance remaining, Distance used,
                          Visit& visit) const {
  visit(Vertex{center}, used);
  if (remaining == 0) return;
  for (int bit = first_bit; bit < dim_; ++bit) {
    HypercubeBall(center ^ (std::uint64_t{1} << bit), bit + 1, remaining - 1,
                  used + 1, visit);
  }
}

template <typename Visit>
void Graph::HypergridBall(std::uint64_t center, std::uint64_t current,
                          int coord, Distance remaining, Distance used,
                          Visit& visit) const {
  if (coord == dim_) {
    visit(Vertex{current}, used);
    return;
  }
  const int digit = Digit(center, coord);  // 0-based digit value
  const std::uint64_t stride = stride_[coord];
  const Distance lo = std::max<Distance>(-digit, -remaining);
  const Distance hi = std::min<Distance>(side_ - 1 - digit, remaining);
  for (Distance delta = lo; delta <= hi; ++delta) {
    const Distance step = delta < 0 ? -delta : delta;
    const std::uint64_t next =
        delta < 0 ? current - static_cast<std::uint64_t>(-delta) * stride
                  : current + static_cast<std::uint64_t>(delta) * stride;
    HypergridBall(center, next, coord + 1, remaining - step, used + step,
                  visit);
  }
}

template <typename Visit>
void Graph::ForEachInBall(Vertex x, Distance radius, Visit&& visit) const {
  CheckVertex(x);
  if (radius < 0) return;
  switch (kind_) {
    case GraphKind::kHypercube:
      HypercubeBall(x.id, 0, std::min<Distance>(radius, dim_), 0, visit);
      return;
    case GraphKind::kHypergrid:
      HypergridBall(x.id, x.id, 0, std::min<Distance>(radius, diameter_), 0,
                    visit);
      return;
    case GraphKind::kExplicit:
      ExplicitBall(x, radius,
                   [&visit](Vertex v, Distance dist) { visit(v, dist); });
      return;
  }
}

}  // namespace lipfilter

template <>
struct std::hash<lipfilter::Vertex> {
  std::size_t operator()(lipfilter::Vertex v) const noexcept {
    std::uint64_t h = v.id * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

#endif  // LIPFILTER_GRAPH_HPP_
