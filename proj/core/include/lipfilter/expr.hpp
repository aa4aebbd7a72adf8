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

#ifndef LIPFILTER_EXPR_HPP_
#define LIPFILTER_EXPR_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lipfilter/rational.hpp"

namespace lipfilter {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'x' INT | 'sum()' | fn '(' expr (',' expr)* ')'
//           | '(' expr ')'
//   fn     := min | max | abs | floor | clip
// Rational literals are "p", "p/q" or decimals, optionally signed.
struct ExprNode {
  enum class Kind {
    kLiteral,
    kCoord,
    kSum,
    kAdd,
    kSub,
    kMul,
    kMin,
    kMax,
    kAbs,
    kFloor,
    kClip,
  };

  Kind kind = Kind::kLiteral;
  Rational literal;
  int coord = 0;  // 1-based
  std::vector<ExprNode> children;

  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

class ExprProgram {
 public:
  // Throws ParseError with the byte offset, or kDimensionError for xk with
  // k outside 1..dimension.
  static ExprProgram Parse(std::string_view text, int dimension);

  const ExprNode& root() const { return root_; }
  int dimension() const { return dimension_; }

  // Fully parenthesized; Parse(ToString()) reproduces the same tree.
  std::string ToString() const;

  // coords[i] is coordinate i+1.
  Rational Evaluate(std::span<const int> coords) const;

  friend bool operator==(const ExprProgram&, const ExprProgram&) = default;

 private:
  ExprNode root_;
  int dimension_ = 0;
};

}  // namespace lipfilter

#endif  // LIPFILTER_EXPR_HPP_
