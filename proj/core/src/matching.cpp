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

#include "lipfilter/matching.hpp"

#include <algorithm>
#include <string>

#include "lipfilter/errors.hpp"

namespace lipfilter {

MatchingLca::MatchingLca(NeighborFn nbrs, RoundKey key, std::uint64_t budget)
    : nbrs_(std::move(nbrs)), key_(key), budget_(budget) {
  if (budget_ == 0) {
    throw Error(ErrorCode::kInvalidParam, "matching budget must be positive");
  }
}

void MatchingLca::ClearCache() {
  incident_.clear();
  status_.clear();
}

const std::vector<MatchingLca::Incident>& MatchingLca::IncidentOf(
    std::uint64_t v) {
  auto it = incident_.find(v);
  if (it != incident_.end()) return it->second;
  std::vector<Incident> list;
  for (Vertex w : nbrs_(Vertex{v})) {
    list.push_back(Incident{RankEdge(key_, EdgeId::Of(Vertex{v}, w)), w.id});
  }
  std::sort(list.begin(), list.end(),
            [](const Incident& a, const Incident& b) { return a.rank < b.rank; });
  return incident_.emplace(v, std::move(list)).first->second;
}

// Iterative evaluation of "matched iff every lower-ranked adjacent edge is
// unmatched". Adjacent edges are visited in increasing rank order, merging
// the sorted incident lists of both endpoints, and the scan stops at the
// first matched one.
bool MatchingLca::Resolve(const EdgeRank& target) {
  if (auto it = status_.find(target.edge); it != status_.end()) {
    return it->second;
  }
  struct Frame {
    EdgeRank rank;
    const std::vector<Incident>* a;
    const std::vector<Incident>* b;
    std::size_t ia = 0;
    std::size_t ib = 0;
  };
  auto make_frame = [&](const EdgeRank& rank) {
    if (++query_resolved_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "matching exploration exceeded " + std::to_string(budget_) +
                      " edges");
    }
    ++resolved_;
    // Both lists are fetched before either pointer is kept; unordered_map
    // references stay valid across insertions.
    const auto* a = &IncidentOf(rank.edge.lo);
    const auto* b = &IncidentOf(rank.edge.hi);
    return Frame{rank, a, b};
  };

  std::vector<Frame> stack;
  stack.push_back(make_frame(target));
  while (!stack.empty()) {
    Frame& f = stack.back();
    // Next lower-ranked adjacent edge, skipping the frame edge itself.
    const Incident* next = nullptr;
    while (true) {
      const Incident* ca = f.ia < f.a->size() ? &(*f.a)[f.ia] : nullptr;
      const Incident* cb = f.ib < f.b->size() ? &(*f.b)[f.ib] : nullptr;
      if (ca && !(ca->rank < f.rank)) ca = nullptr;
      if (cb && !(cb->rank < f.rank)) cb = nullptr;
      if (!ca && !cb) break;
      if (ca && (!cb || ca->rank < cb->rank)) {
        next = ca;
        ++f.ia;
      } else {
        next = cb;
        ++f.ib;
      }
      break;
    }
    if (next == nullptr) {
      status_.emplace(f.rank.edge, true);
      stack.pop_back();
      continue;
    }
    auto it = status_.find(next->rank.edge);
    if (it == status_.end()) {
      // Revisit this candidate after it is resolved.
      if (next == &(*f.a)[f.ia - 1]) {
        --f.ia;
      } else {
        --f.ib;
      }
      const EdgeRank child = next->rank;
      stack.push_back(make_frame(child));
      continue;
    }
    if (it->second) {
      status_.emplace(f.rank.edge, false);
      stack.pop_back();
    }
  }
  return status_.at(target.edge);
}

std::optional<Vertex> MatchingLca::MatchOf(Vertex x) {
  query_resolved_ = 0;
  const auto& list = IncidentOf(x.id);
  for (const Incident& inc : list) {
    if (Resolve(inc.rank)) return Vertex{inc.other};
  }
  return std::nullopt;
}

bool MatchingLca::IsMatched(Vertex u, Vertex v) {
  query_resolved_ = 0;
  return Resolve(RankEdge(key_, EdgeId::Of(u, v)));
}

namespace {

std::vector<std::optional<Vertex>> GreedyInOrder(
    std::uint64_t vertex_count, const std::vector<EdgeId>& order) {
  std::vector<std::optional<Vertex>> partner(vertex_count);
  for (const EdgeId& e : order) {
    if (!partner[e.lo] && !partner[e.hi]) {
      partner[e.lo] = Vertex{e.hi};
      partner[e.hi] = Vertex{e.lo};
    }
  }
  return partner;
}

std::vector<EdgeId> CanonicalEdges(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count || u == v) {
      throw Error(ErrorCode::kInvalidParam, "invalid edge in matching input");
    }
    out.push_back(EdgeId::Of(Vertex{u}, Vertex{v}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::optional<Vertex>> GlobalGreedyMatching(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
    const RoundKey& key) {
  std::vector<EdgeId> canonical = CanonicalEdges(vertex_count, edges);
  std::vector<EdgeRank> ranks;
  ranks.reserve(canonical.size());
  for (const EdgeId& e : canonical) ranks.push_back(RankEdge(key, e));
  std::sort(ranks.begin(), ranks.end());
  std::vector<EdgeId> order;
  order.reserve(ranks.size());
  for (const EdgeRank& r : ranks) order.push_back(r.edge);
  return GreedyInOrder(vertex_count, order);
}

std::vector<std::optional<Vertex>> CanonicalGreedyMatching(
    std::uint64_t vertex_count,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  return GreedyInOrder(vertex_count, CanonicalEdges(vertex_count, edges));
}

}  // namespace lipfilter
