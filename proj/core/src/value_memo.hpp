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

#ifndef LIPFILTER_SRC_VALUE_MEMO_HPP_
#define LIPFILTER_SRC_VALUE_MEMO_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "lipfilter/graph.hpp"

namespace lipfilter::internal {

// Per-vertex memo: dense for small graphs, hashed otherwise.
template <typename T>
class VertexMemo {
 public:
  // Starts sparse; small domains switch to a dense vector once the memo
  // holds 1/32 of the vertices, so short sessions stay cheap.
  explicit VertexMemo(const Graph& g) {
    if (g.vertex_count_fits() && g.vertex_count() <= kDenseLimit) {
      dense_count_ = g.vertex_count();
    }
  }

  const T* Find(Vertex x) const {
    if (use_dense_) {
      const auto& slot = dense_[x.id];
      return slot ? &*slot : nullptr;
    }
    auto it = sparse_.find(x.id);
    return it == sparse_.end() ? nullptr : &it->second;
  }

  const T& Put(Vertex x, T value) {
    if (use_dense_) {
      if (!dense_[x.id]) ++size_;
      dense_[x.id] = std::move(value);
      return *dense_[x.id];
    }
    if (dense_count_ != 0 && sparse_.size() >= dense_count_ / 32) {
      dense_.resize(dense_count_);
      for (auto& [id, v] : sparse_) dense_[id] = std::move(v);
      sparse_.clear();
      use_dense_ = true;
      return Put(x, std::move(value));
    }
    // The returned reference is invalidated by the next Put.
    auto [it, inserted] = sparse_.insert_or_assign(x.id, std::move(value));
    if (inserted) ++size_;
    return it->second;
  }

  void Clear() {
    if (use_dense_) {
      for (auto& slot : dense_) slot.reset();
    } else {
      sparse_.clear();
    }
    size_ = 0;
  }

  std::size_t size() const { return size_; }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;
  std::uint64_t dense_count_ = 0;
  bool use_dense_ = false;
  std::vector<std::optional<T>> dense_;
  absl::flat_hash_map<std::uint64_t, T> sparse_;
  std::size_t size_ = 0;
};

}  // namespace lipfilter::internal

#endif  // LIPFILTER_SRC_VALUE_MEMO_HPP_
