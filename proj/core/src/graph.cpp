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

#include <algorithm>
#include <deque>
#include <string>

namespace lipfilter {
namespace {

constexpr std::uint64_t kApspLimit = 2048;

int DecimalWidth(std::uint64_t v) {
  int width = 1;
  while (v >= 10) {
    v /= 10;
    ++width;
  }
  return width;
}

std::uint64_t Saturate(unsigned __int128 v) {
  constexpr unsigned __int128 kMax = std::numeric_limits<std::uint64_t>::max();
  return v > kMax ? std::numeric_limits<std::uint64_t>::max()
                  : static_cast<std::uint64_t>(v);
}

}  // namespace

Graph Graph::Hypergrid(int n, int d) {
  if (n < 1 || d < 1) {
    throw Error(ErrorCode::kInvalidParam, "hypergrid needs n >= 1 and d >= 1");
  }
  Graph g;
  g.kind_ = GraphKind::kHypergrid;
  g.side_ = n;
  g.dim_ = d;
  unsigned __int128 count = 1;
  for (int i = 0; i < d; ++i) {
    count *= static_cast<unsigned>(n);
    if (count > kMaxU64 + 1) {
      throw Error(ErrorCode::kSizeExceeded,
                  "hypergrid has more than 2^64 vertices");
    }
  }
  g.count_ = count;
  g.max_id_ = static_cast<std::uint64_t>(count - 1);
  g.diameter_ = static_cast<Distance>(n - 1) * d;
  g.max_degree_ = n == 1 ? 0 : (n == 2 ? d : 2 * d);
  g.stride_.assign(d, 1);
  for (int i = d - 2; i >= 0; --i) {
    g.stride_[i] = g.stride_[i + 1] * static_cast<std::uint64_t>(n);
  }
  return g;
}

Graph Graph::Hypercube(int d) {
  if (d < 1 || d > 64) {
    throw Error(ErrorCode::kInvalidParam, "hypercube dimension must be 1..64");
  }
  Graph g;
  g.kind_ = GraphKind::kHypercube;
  g.side_ = 2;
  g.dim_ = d;
  g.count_ = static_cast<unsigned __int128>(1) << d;
  g.max_id_ = static_cast<std::uint64_t>(g.count_ - 1);
  g.diameter_ = d;
  g.max_degree_ = d;
  return g;
}

Graph Graph::Explicit(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  if (vertex_count == 0) {
    throw Error(ErrorCode::kInvalidParam, "explicit graph needs vertices");
  }
  if (vertex_count > (std::uint64_t{1} << 24)) {
    throw Error(ErrorCode::kSizeExceeded, "explicit graph too large");
  }
  Graph g;
  g.kind_ = GraphKind::kExplicit;
  g.side_ = 0;
  g.dim_ = 0;
  g.count_ = vertex_count;
  g.max_id_ = vertex_count - 1;
  g.adjacency_.assign(vertex_count, {});
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kOutOfDomain,
                  "edge endpoint " + std::to_string(std::max(u, v)) +
                      " out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidParam, "self-loops are not allowed");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.max_degree_ = std::max<int>(g.max_degree_, static_cast<int>(list.size()));
  }

  if (vertex_count <= kApspLimit) {
    const std::uint64_t n = vertex_count;
    g.apsp_.assign(n * n, -1);
    Distance diameter = 0;
    bool connected = true;
    std::vector<std::uint64_t> queue;
    for (std::uint64_t s = 0; s < n; ++s) {
      std::int32_t* row = &g.apsp_[s * n];
      row[s] = 0;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t u = queue[head];
        for (std::uint64_t v : g.adjacency_[u]) {
          if (row[v] < 0) {
            row[v] = row[u] + 1;
            diameter = std::max<Distance>(diameter, row[v]);
            queue.push_back(v);
          }
        }
      }
      if (queue.size() != n) connected = false;
    }
    g.diameter_ = connected ? diameter : kInfiniteDistance;
  } else {
    g.diameter_ = kInfiniteDistance;
  }
  return g;
}

std::uint64_t Graph::vertex_count() const {
  if (count_ > kMaxU64) {
    throw Error(ErrorCode::kSizeExceeded,
                "vertex count does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(count_);
}

void Graph::CheckVertex(Vertex x) const {
  if (!Contains(x)) {
    throw Error(ErrorCode::kOutOfDomain,
                "vertex id " + std::to_string(x.id) + " is not in the graph");
  }
}

int Graph::Digit(std::uint64_t id, int coord) const {
  return static_cast<int>((id / stride_[coord]) %
                          static_cast<std::uint64_t>(side_));
}

std::vector<int> Graph::Coords(Vertex x) const {
  CheckVertex(x);
  std::vector<int> coords(dim_);
  switch (kind_) {
    case GraphKind::kHypercube:
      for (int i = 0; i < dim_; ++i) {
        coords[i] = static_cast<int>((x.id >> (dim_ - 1 - i)) & 1U);
      }
      break;
    case GraphKind::kHypergrid:
      for (int i = 0; i < dim_; ++i) coords[i] = Digit(x.id, i) + 1;
      break;
    case GraphKind::kExplicit:
      throw Error(ErrorCode::kInvalidParam,
                  "explicit graph vertices have no coordinates");
  }
  return coords;
}

Vertex Graph::FromCoords(std::span<const int> coords) const {
  if (kind_ == GraphKind::kExplicit) {
    throw Error(ErrorCode::kInvalidParam,
                "explicit graph vertices have no coordinates");
  }
  if (static_cast<int>(coords.size()) != dim_) {
    throw Error(ErrorCode::kOutOfDomain,
                "expected " + std::to_string(dim_) + " coordinates, got " +
                    std::to_string(coords.size()));
  }
  std::uint64_t id = 0;
  for (int i = 0; i < dim_; ++i) {
    const int c = coords[i];
    if (kind_ == GraphKind::kHypercube) {
      if (c != 0 && c != 1) {
        throw Error(ErrorCode::kOutOfDomain, "hypercube coordinate must be 0/1");
      }
      id = (id << 1) | static_cast<std::uint64_t>(c);
    } else {
      if (c < 1 || c > side_) {
        throw Error(ErrorCode::kOutOfDomain,
                    "hypergrid coordinate " + std::to_string(c) +
                        " outside [1.." + std::to_string(side_) + "]");
      }
      id += static_cast<std::uint64_t>(c - 1) * stride_[i];
    }
  }
  return Vertex{id};
}

std::string Graph::CanonicalName(Vertex x) const {
  CheckVertex(x);
  if (kind_ == GraphKind::kExplicit) return std::to_string(x.id);
  const std::vector<int> coords = Coords(x);
  std::string out;
  if (kind_ == GraphKind::kHypercube) {
    out.reserve(dim_);
    for (int c : coords) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  const int width = DecimalWidth(static_cast<std::uint64_t>(side_));
  out.reserve(static_cast<std::size_t>(width) * dim_);
  for (int c : coords) {
    std::string digits = std::to_string(c);
    out.append(width - digits.size(), '0');
    out += digits;
  }
  return out;
}

Vertex Graph::ParseCanonicalName(std::string_view name) const {
  auto fail = [&]() {
    return Error(ErrorCode::kOutOfDomain,
                 "malformed vertex name '" + std::string(name) + "'");
  };
  for (char ch : name) {
    if (ch < '0' || ch > '9') throw fail();
  }
  if (name.empty()) throw fail();
  if (kind_ == GraphKind::kExplicit) {
    std::uint64_t id = 0;
    for (char ch : name) {
      if (id > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
        throw fail();
      }
      id = id * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    Vertex v{id};
    CheckVertex(v);
    return v;
  }
  const int width = kind_ == GraphKind::kHypercube
                        ? 1
                        : DecimalWidth(static_cast<std::uint64_t>(side_));
  if (name.size() != static_cast<std::size_t>(width) * dim_) throw fail();
  std::vector<int> coords(dim_);
  for (int i = 0; i < dim_; ++i) {
    int c = 0;
    for (int k = 0; k < width; ++k) c = c * 10 + (name[i * width + k] - '0');
    coords[i] = c;
  }
  return FromCoords(coords);
}

std::vector<Vertex> Graph::Neighbors(Vertex x) const {
  CheckVertex(x);
  std::vector<Vertex> out;
  switch (kind_) {
    case GraphKind::kHypercube:
      out.reserve(dim_);
      for (int b = 0; b < dim_; ++b) {
        out.push_back(Vertex{x.id ^ (std::uint64_t{1} << b)});
      }
      break;
    case GraphKind::kHypergrid:
      out.reserve(2 * dim_);
      for (int i = 0; i < dim_; ++i) {
        const int digit = Digit(x.id, i);
        if (digit > 0) out.push_back(Vertex{x.id - stride_[i]});
        if (digit < side_ - 1) out.push_back(Vertex{x.id + stride_[i]});
      }
      break;
    case GraphKind::kExplicit:
      for (std::uint64_t v : adjacency_[x.id]) out.push_back(Vertex{v});
      return out;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Distance Graph::Dist(Vertex x, Vertex y) const {
  CheckVertex(x);
  CheckVertex(y);
  switch (kind_) {
    case GraphKind::kHypercube:
      return std::popcount(x.id ^ y.id);
    case GraphKind::kHypergrid: {
      Distance total = 0;
      std::uint64_t a = x.id;
      std::uint64_t b = y.id;
      const auto n = static_cast<std::uint64_t>(side_);
      for (int i = 0; i < dim_; ++i) {
        const auto da = static_cast<Distance>(a % n);
        const auto db = static_cast<Distance>(b % n);
        total += da > db ? da - db : db - da;
        a /= n;
        b /= n;
      }
      return total;
    }
    case GraphKind::kExplicit: {
      if (x == y) return 0;
      if (!apsp_.empty()) {
        const std::int32_t d = apsp_[x.id * (max_id_ + 1) + y.id];
        return d < 0 ? kInfiniteDistance : d;
      }
      Distance found = kInfiniteDistance;
      ExplicitBall(x, kInfiniteDistance - 1, [&](Vertex v, Distance dist) {
        if (v == y) found = dist;
      });
      return found;
    }
  }
  return kInfiniteDistance;
}

void Graph::ExplicitBall(
    Vertex x, Distance radius,
    const std::function<void(Vertex, Distance)>& visit) const {
  std::vector<std::uint64_t> frontier{x.id};
  std::vector<std::uint64_t> next;
  std::vector<char> seen(adjacency_.size(), 0);
  seen[x.id] = 1;
  visit(x, 0);
  for (Distance dist = 1; dist <= radius && !frontier.empty(); ++dist) {
    next.clear();
    for (std::uint64_t u : frontier) {
      for (std::uint64_t v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          next.push_back(v);
          visit(Vertex{v}, dist);
        }
      }
    }
    frontier.swap(next);
  }
}

std::uint64_t Graph::BallSize(Vertex x, Distance radius) const {
  CheckVertex(x);
  if (radius < 0) return 0;
  switch (kind_) {
    case GraphKind::kHypercube: {
      const Distance r = std::min<Distance>(radius, dim_);
      unsigned __int128 total = 0;
      unsigned __int128 binom = 1;
      for (Distance i = 0; i <= r; ++i) {
        total += binom;
        binom = binom * static_cast<unsigned>(dim_ - i) /
                static_cast<unsigned>(i + 1);
      }
      return Saturate(total);
    }
    case GraphKind::kHypergrid: {
      const Distance r = std::min<Distance>(radius, diameter_);
      std::vector<unsigned __int128> ways(r + 1, 0);
      ways[0] = 1;
      constexpr unsigned __int128 kCap = static_cast<unsigned __int128>(1)
                                         << 100;
      for (int i = 0; i < dim_; ++i) {
        const int digit = Digit(x.id, i);
        std::vector<unsigned __int128> next(r + 1, 0);
        for (Distance used = 0; used <= r; ++used) {
          if (ways[used] == 0) continue;
          for (Distance s = 0; used + s <= r; ++s) {
            unsigned mult = s == 0 ? 1U
                                   : static_cast<unsigned>(s <= digit) +
                                         static_cast<unsigned>(
                                             s <= side_ - 1 - digit);
            if (mult == 0) break;
            next[used + s] = std::min(kCap, next[used + s] + ways[used] * mult);
          }
        }
        ways.swap(next);
      }
      unsigned __int128 total = 0;
      for (auto w : ways) total = std::min(kCap, total + w);
      return Saturate(total);
    }
    case GraphKind::kExplicit: {
      std::uint64_t count = 0;
      ExplicitBall(x, radius, [&](Vertex, Distance) { ++count; });
      return count;
    }
  }
  return 0;
}

std::vector<BallEntry> Graph::Ball(Vertex x, Distance radius, bool open,
                                   std::uint64_t vertex_budget) const {
  CheckVertex(x);
  if (radius < 0) {
    throw Error(ErrorCode::kInvalidParam, "ball radius must be nonnegative");
  }
  const Distance closed = open ? radius - 1 : radius;
  std::vector<BallEntry> out;
  if (closed < 0) return out;
  const std::uint64_t size = BallSize(x, closed);
  if (size > vertex_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "ball of " + std::to_string(size) +
                    " vertices exceeds budget " +
                    std::to_string(vertex_budget));
  }
  out.reserve(size);
  ForEachInBall(x, closed, [&](Vertex v, Distance dist) {
    out.push_back(BallEntry{v, dist});
  });
  std::sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) {
    return a.distance != b.distance ? a.distance < b.distance
                                    : a.vertex < b.vertex;
  });
  return out;
}

}  // namespace lipfilter
