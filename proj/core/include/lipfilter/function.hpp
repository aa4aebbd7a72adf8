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

#ifndef LIPFILTER_FUNCTION_HPP_
#define LIPFILTER_FUNCTION_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lipfilter/expr.hpp"
#include "lipfilter/graph.hpp"
#include "lipfilter/rational.hpp"

namespace lipfilter {

// A function value: a rational, or nullopt for the undefined marker "?".
using Value = std::optional<Rational>;
// Values indexed by vertex id.
using ValueTable = std::vector<Value>;

std::string ValueToString(const Value& v);
Value ParseValue(std::string_view text);

// Lookup access to f: V -> [lo, hi] u {?}.
//
// Every call to Lookup() counts as one lookup. Wrappers count their own
// lookups and forward to the wrapped oracle, which counts again. Lookup() is
// pure and thread-safe; the counter is atomic.
class FunctionOracle {
 public:
  FunctionOracle(std::shared_ptr<const Graph> graph, Rational lo, Rational hi);
  virtual ~FunctionOracle() = default;

  FunctionOracle(const FunctionOracle&) = delete;
  FunctionOracle& operator=(const FunctionOracle&) = delete;

  // Throws kOutOfDomain for vertices outside the graph and kRangeViolation
  // for defined values outside [range_lo, range_hi].
  Value Lookup(Vertex x) const;

  std::uint64_t lookups() const {
    return lookups_.load(std::memory_order_relaxed);
  }
  void ResetLookups() const { lookups_.store(0, std::memory_order_relaxed); }

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }
  const Rational& range_lo() const { return lo_; }
  const Rational& range_hi() const { return hi_; }
  Rational range_diameter() const { return hi_ - lo_; }

 protected:
  virtual Value Evaluate(Vertex x) const = 0;

 private:
  std::shared_ptr<const Graph> graph_;
  Rational lo_;
  Rational hi_;
  mutable std::atomic<std::uint64_t> lookups_{0};
};

using OraclePtr = std::shared_ptr<const FunctionOracle>;

// One value per vertex. Values are range-checked at construction.
class DenseTableOracle final : public FunctionOracle {
 public:
  DenseTableOracle(std::shared_ptr<const Graph> graph, Rational lo,
                   Rational hi, ValueTable values);
  const ValueTable& values() const { return values_; }

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  ValueTable values_;
};

// Explicit values for some vertices and a default for the rest.
class SparseTableOracle final : public FunctionOracle {
 public:
  SparseTableOracle(std::shared_ptr<const Graph> graph, Rational lo,
                    Rational hi, std::unordered_map<std::uint64_t, Value> values,
                    Value default_value);

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  std::unordered_map<std::uint64_t, Value> values_;
  Value default_;
};

// Evaluates an expression program on the vertex coordinates. On explicit
// graphs the only coordinate x1 is the vertex id.
class ExpressionOracle final : public FunctionOracle {
 public:
  ExpressionOracle(std::shared_ptr<const Graph> graph, Rational lo,
                   Rational hi, ExprProgram program);
  const ExprProgram& program() const { return program_; }

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  ExprProgram program_;
};

// Wraps an arbitrary callable.
class CallbackOracle final : public FunctionOracle {
 public:
  using Fn = std::function<Value(Vertex)>;
  CallbackOracle(std::shared_ptr<const Graph> graph, Rational lo, Rational hi,
                 Fn fn);

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  Fn fn_;
};

// f[l, u]: values below l become l, values above u become u, ? stays ?.
// The declared range is the clamp of the inner range.
class ClipOracle final : public FunctionOracle {
 public:
  ClipOracle(OraclePtr inner, Rational l, Rational u);
  const Rational& lower() const { return l_; }
  const Rational& upper() const { return u_; }

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  OraclePtr inner_;
  Rational l_;
  Rational u_;
};

// f_I: f(x) when f(x) lies in the closed interval [a, b], otherwise ?.
// The declared range is [a, b] intersected with the inner range.
class RestrictOracle final : public FunctionOracle {
 public:
  RestrictOracle(OraclePtr inner, Rational a, Rational b);
  const Rational& interval_lo() const { return a_; }
  const Rational& interval_hi() const { return b_; }

 protected:
  Value Evaluate(Vertex x) const override;

 private:
  OraclePtr inner_;
  Rational a_;
  Rational b_;
};

OraclePtr Clip(OraclePtr f, const Rational& lo, const Rational& hi);
OraclePtr RestrictToInterval(OraclePtr f, const Rational& lo,
                             const Rational& hi);

// Reads every vertex (counts one lookup per vertex).
ValueTable Materialize(const FunctionOracle& f);

// True iff |f(x) - f(y)| <= c on every edge. Throws kPartialFunction if some
// value is ?.
bool IsCLipschitz(const Graph& g, const FunctionOracle& f, const Rational& c);
bool IsCLipschitz(const Graph& g, const ValueTable& values, const Rational& c);
// Pairwise check over the defined points of a possibly partial table:
// |f(x) - f(y)| <= c * dist(x, y) for all defined x, y.
bool IsCLipschitzOnDefined(const Graph& g, const ValueTable& values,
                           const Rational& c);

}  // namespace lipfilter

#endif  // LIPFILTER_FUNCTION_HPP_
