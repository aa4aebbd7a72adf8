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

#include "lipfilter/function.hpp"

#include <utility>

#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

void CheckRange(const Value& v, const Rational& lo, const Rational& hi,
                const Graph& g, Vertex x) {
  if (v && (*v < lo || *v > hi)) {
    throw Error(ErrorCode::kRangeViolation,
                "value " + v->ToString() + " at vertex " + g.CanonicalName(x) +
                    " outside [" + lo.ToString() + ", " + hi.ToString() + "]");
  }
}

Rational Clamp(const Rational& v, const Rational& l, const Rational& u) {
  return v < l ? l : (v > u ? u : v);
}

}  // namespace

std::string ValueToString(const Value& v) {
  return v ? v->ToString() : std::string("?");
}

Value ParseValue(std::string_view text) {
  if (text == "?") return std::nullopt;
  return Rational::Parse(text);
}

FunctionOracle::FunctionOracle(std::shared_ptr<const Graph> graph, Rational lo,
                               Rational hi)
    : graph_(std::move(graph)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (graph_ == nullptr) {
    throw Error(ErrorCode::kInvalidParam, "function oracle needs a graph");
  }
  if (lo_ > hi_) {
    throw Error(ErrorCode::kInvalidInterval,
                "range [" + lo_.ToString() + ", " + hi_.ToString() +
                    "] is empty");
  }
}

Value FunctionOracle::Lookup(Vertex x) const {
  graph_->CheckVertex(x);
  lookups_.fetch_add(1, std::memory_order_relaxed);
  Value v = Evaluate(x);
  CheckRange(v, lo_, hi_, *graph_, x);
  return v;
}

DenseTableOracle::DenseTableOracle(std::shared_ptr<const Graph> graph,
                                   Rational lo, Rational hi, ValueTable values)
    : FunctionOracle(std::move(graph), std::move(lo), std::move(hi)),
      values_(std::move(values)) {
  if (values_.size() != this->graph().vertex_count()) {
    throw Error(ErrorCode::kInvalidParam,
                "table has " + std::to_string(values_.size()) +
                    " values for " +
                    std::to_string(this->graph().vertex_count()) +
                    " vertices");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    CheckRange(values_[i], range_lo(), range_hi(), this->graph(), Vertex{i});
  }
}

Value DenseTableOracle::Evaluate(Vertex x) const { return values_[x.id]; }

SparseTableOracle::SparseTableOracle(
    std::shared_ptr<const Graph> graph, Rational lo, Rational hi,
    std::unordered_map<std::uint64_t, Value> values, Value default_value)
    : FunctionOracle(std::move(graph), std::move(lo), std::move(hi)),
      values_(std::move(values)),
      default_(std::move(default_value)) {
  for (const auto& [id, v] : values_) {
    this->graph().CheckVertex(Vertex{id});
    CheckRange(v, range_lo(), range_hi(), this->graph(), Vertex{id});
  }
  if (default_ && (*default_ < range_lo() || *default_ > range_hi())) {
    throw Error(ErrorCode::kRangeViolation,
                "default value " + default_->ToString() + " outside range");
  }
}

Value SparseTableOracle::Evaluate(Vertex x) const {
  auto it = values_.find(x.id);
  return it == values_.end() ? default_ : it->second;
}

ExpressionOracle::ExpressionOracle(std::shared_ptr<const Graph> graph,
                                   Rational lo, Rational hi,
                                   ExprProgram program)
    : FunctionOracle(std::move(graph), std::move(lo), std::move(hi)),
      program_(std::move(program)) {
  const int expected = this->graph().kind() == GraphKind::kExplicit
                           ? 1
                           : this->graph().dimension();
  if (program_.dimension() != expected) {
    throw Error(ErrorCode::kDimensionError,
                "program dimension " + std::to_string(program_.dimension()) +
                    " does not match domain dimension " +
                    std::to_string(expected));
  }
}

Value ExpressionOracle::Evaluate(Vertex x) const {
  if (graph().kind() == GraphKind::kExplicit) {
    const int id = static_cast<int>(x.id);
    return program_.Evaluate(std::span<const int>(&id, 1));
  }
  const std::vector<int> coords = graph().Coords(x);
  return program_.Evaluate(coords);
}

CallbackOracle::CallbackOracle(std::shared_ptr<const Graph> graph, Rational lo,
                               Rational hi, Fn fn)
    : FunctionOracle(std::move(graph), std::move(lo), std::move(hi)),
      fn_(std::move(fn)) {}

Value CallbackOracle::Evaluate(Vertex x) const { return fn_(x); }

ClipOracle::ClipOracle(OraclePtr inner, Rational l, Rational u)
    : FunctionOracle(inner->shared_graph(),
                     l <= u ? Clamp(inner->range_lo(), l, u) : l,
                     l <= u ? Clamp(inner->range_hi(), l, u) : l),
      inner_(std::move(inner)),
      l_(std::move(l)),
      u_(std::move(u)) {
  if (l_ > u_) {
    throw Error(ErrorCode::kInvalidInterval,
                "clip interval [" + l_.ToString() + ", " + u_.ToString() +
                    "] is empty");
  }
}

Value ClipOracle::Evaluate(Vertex x) const {
  Value v = inner_->Lookup(x);
  if (!v) return v;
  return Clamp(*v, l_, u_);
}

namespace {

std::pair<Rational, Rational> IntersectRange(const FunctionOracle& inner,
                                             const Rational& a,
                                             const Rational& b) {
  if (a > b) {
    throw Error(ErrorCode::kInvalidInterval,
                "interval [" + a.ToString() + ", " + b.ToString() +
                    "] is empty");
  }
  Rational lo = Max(a, inner.range_lo());
  Rational hi = Min(b, inner.range_hi());
  if (lo > hi) return {a, b};  // every value is ?
  return {lo, hi};
}

}  // namespace

RestrictOracle::RestrictOracle(OraclePtr inner, Rational a, Rational b)
    : FunctionOracle(inner->shared_graph(), IntersectRange(*inner, a, b).first,
                     IntersectRange(*inner, a, b).second),
      inner_(std::move(inner)),
      a_(std::move(a)),
      b_(std::move(b)) {}

Value RestrictOracle::Evaluate(Vertex x) const {
  Value v = inner_->Lookup(x);
  if (!v || *v < a_ || *v > b_) return std::nullopt;
  return v;
}

OraclePtr Clip(OraclePtr f, const Rational& lo, const Rational& hi) {
  return std::make_shared<ClipOracle>(std::move(f), lo, hi);
}

OraclePtr RestrictToInterval(OraclePtr f, const Rational& lo,
                             const Rational& hi) {
  return std::make_shared<RestrictOracle>(std::move(f), lo, hi);
}

ValueTable Materialize(const FunctionOracle& f) {
  const std::uint64_t n = f.graph().vertex_count();
  ValueTable out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(f.Lookup(Vertex{i}));
  return out;
}

bool IsCLipschitz(const Graph& g, const FunctionOracle& f, const Rational& c) {
  return IsCLipschitz(g, Materialize(f), c);
}

bool IsCLipschitz(const Graph& g, const ValueTable& values,
                  const Rational& c) {
  const std::uint64_t n = g.vertex_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!values[i]) {
      throw Error(ErrorCode::kPartialFunction,
                  "value at " + g.CanonicalName(Vertex{i}) + " is ?");
    }
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    for (Vertex y : g.Neighbors(Vertex{i})) {
      if (y.id <= i) continue;
      if ((*values[i] - *values[y.id]).Abs() > c) return false;
    }
  }
  return true;
}

bool IsCLipschitzOnDefined(const Graph& g, const ValueTable& values,
                           const Rational& c) {
  const std::uint64_t n = g.vertex_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!values[i]) continue;
    for (std::uint64_t j = i + 1; j < n; ++j) {
      if (!values[j]) continue;
      const Distance d = g.Dist(Vertex{i}, Vertex{j});
      if (d == kInfiniteDistance) continue;
      if ((*values[i] - *values[j]).Abs() > c * Rational(d)) return false;
    }
  }
  return true;
}

}  // namespace lipfilter
