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

#include <algorithm>
#include <numeric>
#include <string>

#include "lipfilter/errors.hpp"
#include "lipfilter/oracles.hpp"
#include "lipfilter/violation.hpp"

namespace lipfilter {
namespace {

class CoverSearch {
 public:
  CoverSearch(std::size_t vertex_count,
              std::vector<std::pair<std::size_t, std::size_t>> edges,
              std::size_t cap)
      : edges_(std::move(edges)),
        in_cover_(vertex_count, 0),
        best_size_(cap + 1) {}

  bool Run() {
    Search();
    return found_;
  }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  // Size of a greedy maximal matching among uncovered edges: a lower bound on
  // the number of vertices still needed.
  std::size_t MatchingBound() {
    used_.assign(in_cover_.size(), 0);
    std::size_t bound = 0;
    for (const auto& [u, v] : edges_) {
      if (in_cover_[u] || in_cover_[v] || used_[u] || used_[v]) continue;
      used_[u] = used_[v] = 1;
      ++bound;
    }
    return bound;
  }

  void Search() {
    if (chosen_.size() + MatchingBound() >= best_size_) return;
    const std::pair<std::size_t, std::size_t>* open = nullptr;
    for (const auto& e : edges_) {
      if (!in_cover_[e.first] && !in_cover_[e.second]) {
        open = &e;
        break;
      }
    }
    if (open == nullptr) {
      best_size_ = chosen_.size();
      best_ = chosen_;
      found_ = true;
      return;
    }
    for (std::size_t v : {open->first, open->second}) {
      in_cover_[v] = 1;
      chosen_.push_back(v);
      Search();
      chosen_.pop_back();
      in_cover_[v] = 0;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<char> in_cover_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::size_t best_size_;
  bool found_ = false;
};

}  // namespace

VertexCover MinVertexCover(const EdgeList& edges, std::size_t cap) {
  // Compact ids in increasing vertex order, edges as sorted (min, max).
  std::vector<std::uint64_t> ids;
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::kInvalidParam, "self-loop in edge list");
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto index = [&](std::uint64_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> local;
  for (const auto& [u, v] : edges) {
    const std::size_t a = index(u);
    const std::size_t b = index(v);
    local.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());

  // Connected components are independent; the first optimum of the whole
  // search is the union of the first optima of the components.
  std::vector<std::size_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : local) parent[find(a)] = find(b);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parts(
      ids.size());
  for (const auto& e : local) parts[find(e.first)].push_back(e);

  VertexCover out;
  for (auto& part : parts) {
    if (part.empty()) continue;
    // Renumber within the component; order is preserved.
    std::vector<std::size_t> members;
    for (const auto& [a, b] : part) {
      members.push_back(a);
      members.push_back(b);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto member = [&](std::size_t v) {
      return static_cast<std::size_t>(
          std::lower_bound(members.begin(), members.end(), v) -
          members.begin());
    };
    for (auto& [a, b] : part) {
      a = member(a);
      b = member(b);
    }
    const std::size_t left = cap - std::min(cap, out.vertices.size());
    CoverSearch search(members.size(), std::move(part), left);
    if (!search.Run()) {
      throw Error(ErrorCode::kCapExceeded,
                  "minimum vertex cover exceeds cap " + std::to_string(cap));
    }
    for (std::size_t i : search.best()) out.vertices.push_back(ids[members[i]]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.size = out.vertices.size();
  return out;
}

VertexCover ViolationCover(const Graph& g, const ValueTable& f,
                           std::size_t cap) {
  if (!g.vertex_count_fits() || g.vertex_count() > kMaxL0OracleVertices) {
    throw Error(ErrorCode::kSizeExceeded,
                "exact l0 oracle supports at most 4096 vertices");
  }
  if (f.size() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidParam, "table size does not match domain");
  }
  return MinVertexCover(ViolationEdges(g, f, Rational()), cap);
}

Rational ExactL0Distance(const Graph& g, const ValueTable& f,
                         std::size_t cap) {
  const VertexCover cover = ViolationCover(g, f, cap);
  return Rational(static_cast<std::int64_t>(cover.size),
                  static_cast<std::int64_t>(g.vertex_count()));
}

Rational L1Norm(const ValueTable& a, const ValueTable& b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kInvalidParam, "tables must have equal size");
  }
  Rational total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i] || !b[i]) {
      throw Error(ErrorCode::kPartialFunction, "l1 norm needs total tables");
    }
    total += (*a[i] - *b[i]).Abs();
  }
  return total / Rational(static_cast<std::int64_t>(a.size()));
}

std::uint64_t HammingDistance(const ValueTable& a, const ValueTable& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidParam, "tables must have equal size");
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i] ? 1 : 0;
  return count;
}

}  // namespace lipfilter
