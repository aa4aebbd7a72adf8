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

#ifndef LIPFILTER_ORACLES_HPP_
#define LIPFILTER_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lipfilter/function.hpp"
#include "lipfilter/graph.hpp"
#include "lipfilter/rational.hpp"

namespace lipfilter {

using EdgeList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

struct VertexCover {
  std::size_t size = 0;
  std::vector<std::uint64_t> vertices;  // sorted
};

// Exact minimum vertex cover by branch and bound: take the first uncovered
// edge (u, v) in sorted order, try u in the cover, then v. The returned cover
// is the first optimum in that search order, so it is canonical. Throws
// kCapExceeded if the optimum exceeds cap.
VertexCover MinVertexCover(const EdgeList& edges, std::size_t cap);

inline constexpr std::size_t kDefaultCoverCap = 64;
inline constexpr std::uint64_t kMaxL0OracleVertices = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kMaxL1OracleVertices = 64;

// minVC(violation graph) / N. Throws kSizeExceeded above 2^12 vertices.
Rational ExactL0Distance(const Graph& g, const ValueTable& f,
                         std::size_t cap = kDefaultCoverCap);
// The canonical minimum cover of the violation graph.
VertexCover ViolationCover(const Graph& g, const ValueTable& f,
                           std::size_t cap = kDefaultCoverCap);

struct L1Distance {
  Rational distance;  // (1/N) * sum |h - f|
  ValueTable witness;  // a nearest 1-Lipschitz h
};

// Exact l1 distance to the 1-Lipschitz functions, by a rational simplex on
// the edge-constrained linear program. f must be total. Throws kSizeExceeded
// above 64 vertices.
L1Distance ExactL1Distance(const Graph& g, const ValueTable& f);

// (1/N) * sum |a - b| over total tables.
Rational L1Norm(const ValueTable& a, const ValueTable& b);
// Number of vertices where a and b differ.
std::uint64_t HammingDistance(const ValueTable& a, const ValueTable& b);

}  // namespace lipfilter

#endif  // LIPFILTER_ORACLES_HPP_
