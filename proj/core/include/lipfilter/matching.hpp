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

#ifndef LIPFILTER_MATCHING_HPP_
#define LIPFILTER_MATCHING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lipfilter/graph.hpp"
#include "lipfilter/seed.hpp"

namespace lipfilter {

// Adjacency-list access to a graph. Must be symmetric:
// y in nbrs(x) iff x in nbrs(y).
using NeighborFn = std::function<std::vector<Vertex>(Vertex)>;

inline constexpr std::uint64_t kDefaultMatchBudget = std::uint64_t{1} << 22;

// Local access to the random-greedy maximal matching: edges are processed in
// increasing RankEdge order and an edge is matched iff no adjacent edge of
// lower rank is matched.
//
// Answers depend only on (graph, key). Verdicts and neighbor lists are
// memoized; the cache is transparent. Not thread-safe: use one instance per
// thread, all built from the same key.
class MatchingLca {
 public:
  MatchingLca(NeighborFn nbrs, RoundKey key,
              std::uint64_t budget = kDefaultMatchBudget);

  // The partner of x, or nullopt. Throws kBudgetExceeded if more than
  // budget previously unseen edges have to be resolved for this query.
  std::optional<Vertex> MatchOf(Vertex x);

  // Whether the edge (u, v), which must exist, is in the matching.
  bool IsMatched(Vertex u, Vertex v);

  // Edges resolved since construction (cache misses).
  std::uint64_t resolved_edges() const { return resolved_; }
  std::uint64_t budget() const { return budget_; }
  void ClearCache();
  std::size_t cache_size() const { return status_.size() + incident_.size(); }

 private:
  struct Incident {
    EdgeRank rank;
    std::uint64_t other;
  };
  const std::vector<Incident>& IncidentOf(std::uint64_t v);
  bool Resolve(const EdgeRank& target);

  NeighborFn nbrs_;
  RoundKey key_;
  std::uint64_t budget_;
  std::uint64_t resolved_ = 0;
  std::uint64_t query_resolved_ = 0;
  std::unordered_map<std::uint64_t, std::vector<Incident>> incident_;
  std::unordered_map<EdgeId, bool> status_;
};

// Reference: the same greedy process run globally over an explicit edge list.
// Returns partner[v] for v in 0..vertex_count-1.
std::vector<std::optional<Vertex>> GlobalGreedyMatching(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
    const RoundKey& key);

// Greedy matching in canonical edge order (no randomness).
std::vector<std::optional<Vertex>> CanonicalGreedyMatching(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

}  // namespace lipfilter

#endif  // LIPFILTER_MATCHING_HPP_
