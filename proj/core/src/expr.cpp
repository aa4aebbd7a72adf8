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

#include "lipfilter/expr.hpp"

#include <cctype>
#include <string>

#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

using Kind = ExprNode::Kind;

class Parser {
 public:
  Parser(std::string_view text, int dimension)
      : text_(text), dimension_(dimension) {}

  ExprNode ParseAll() {
    ExprNode node = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected input");
    return node;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void Expect(char c) {
    if (!Peek(c)) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool IsDigitAt(std::size_t p) const {
    return p < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  ExprNode ParseExpr() {
    ExprNode left = ParseTerm();
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      ExprNode node;
      node.kind = c == '+' ? Kind::kAdd : Kind::kSub;
      node.children.push_back(std::move(left));
      node.children.push_back(ParseTerm());
      left = std::move(node);
    }
    return left;
  }

  ExprNode ParseTerm() {
    ExprNode left = ParseFactor();
    while (Peek('*')) {
      ++pos_;
      ExprNode node;
      node.kind = Kind::kMul;
      node.children.push_back(std::move(left));
      node.children.push_back(ParseFactor());
      left = std::move(node);
    }
    return left;
  }

  ExprNode ParseLiteral() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    if (!IsDigitAt(p)) throw ParseError(start, "expected a number");
    while (IsDigitAt(p)) ++p;
    if (p < text_.size() && (text_[p] == '/' || text_[p] == '.')) {
      if (!IsDigitAt(p + 1)) throw ParseError(p + 1, "expected digits");
      ++p;
      while (IsDigitAt(p)) ++p;
    }
    ExprNode node;
    node.kind = Kind::kLiteral;
    try {
      node.literal = Rational::Parse(text_.substr(start, p - start));
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
    pos_ = p;
    return node;
  }

  ExprNode ParseFactor() {
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprNode inner = ParseExpr();
      Expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      return ParseLiteral();
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = pos_;
    std::size_t p = pos_;
    while (p < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[p]))) {
      ++p;
    }
    const std::string_view word = text_.substr(start, p - start);
    if (word == "x" && IsDigitAt(p)) {
      int k = 0;
      while (IsDigitAt(p)) {
        if (k > 100000000) throw ParseError(start, "coordinate index too large");
        k = k * 10 + (text_[p] - '0');
        ++p;
      }
      pos_ = p;
      if (k < 1 || k > dimension_) {
        throw Error(ErrorCode::kDimensionError,
                    "coordinate x" + std::to_string(k) + " outside 1.." +
                        std::to_string(dimension_));
      }
      ExprNode node;
      node.kind = Kind::kCoord;
      node.coord = k;
      return node;
    }
    pos_ = p;
    if (word == "sum") {
      Expect('(');
      Expect(')');
      ExprNode node;
      node.kind = Kind::kSum;
      return node;
    }
    ExprNode node;
    std::size_t min_args = 1;
    std::size_t max_args = 1;
    if (word == "min" || word == "max") {
      node.kind = word == "min" ? Kind::kMin : Kind::kMax;
      max_args = static_cast<std::size_t>(-1);
    } else if (word == "abs") {
      node.kind = Kind::kAbs;
    } else if (word == "floor") {
      node.kind = Kind::kFloor;
    } else if (word == "clip") {
      node.kind = Kind::kClip;
      min_args = max_args = 3;
    } else {
      throw ParseError(start, "unknown identifier '" + std::string(word) + "'");
    }
    Expect('(');
    node.children.push_back(ParseExpr());
    while (Peek(',')) {
      ++pos_;
      node.children.push_back(ParseExpr());
    }
    const std::size_t close = pos_;
    Expect(')');
    if (node.children.size() < min_args || node.children.size() > max_args) {
      throw ParseError(close, "wrong number of arguments to " +
                                  std::string(word));
    }
    return node;
  }

  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
};

void Print(const ExprNode& node, std::string& out) {
  switch (node.kind) {
    case Kind::kLiteral:
      out += node.literal.ToString();
      return;
    case Kind::kCoord:
      out += 'x';
      out += std::to_string(node.coord);
      return;
    case Kind::kSum:
      out += "sum()";
      return;
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul: {
      const char* op =
          node.kind == Kind::kAdd ? " + " : (node.kind == Kind::kSub ? " - "
                                                                     : " * ");
      out += '(';
      Print(node.children[0], out);
      out += op;
      Print(node.children[1], out);
      out += ')';
      return;
    }
    default:
      break;
  }
  switch (node.kind) {
    case Kind::kMin: out += "min("; break;
    case Kind::kMax: out += "max("; break;
    case Kind::kAbs: out += "abs("; break;
    case Kind::kFloor: out += "floor("; break;
    default: out += "clip("; break;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ", ";
    Print(node.children[i], out);
  }
  out += ')';
}

Rational Eval(const ExprNode& node, std::span<const int> coords) {
  switch (node.kind) {
    case Kind::kLiteral:
      return node.literal;
    case Kind::kCoord:
      return Rational(coords[node.coord - 1]);
    case Kind::kSum: {
      std::int64_t total = 0;
      for (int c : coords) total += c;
      return Rational(total);
    }
    case Kind::kAdd:
      return Eval(node.children[0], coords) + Eval(node.children[1], coords);
    case Kind::kSub:
      return Eval(node.children[0], coords) - Eval(node.children[1], coords);
    case Kind::kMul:
      return Eval(node.children[0], coords) * Eval(node.children[1], coords);
    case Kind::kMin:
    case Kind::kMax: {
      Rational best = Eval(node.children[0], coords);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        Rational v = Eval(node.children[i], coords);
        best = node.kind == Kind::kMin ? Min(best, v) : Max(best, v);
      }
      return best;
    }
    case Kind::kAbs:
      return Eval(node.children[0], coords).Abs();
    case Kind::kFloor:
      return Eval(node.children[0], coords).Floor();
    case Kind::kClip: {
      const Rational v = Eval(node.children[0], coords);
      const Rational lo = Eval(node.children[1], coords);
      const Rational hi = Eval(node.children[2], coords);
      if (lo > hi) {
        throw Error(ErrorCode::kInvalidInterval,
                    "clip bounds " + lo.ToString() + " > " + hi.ToString());
      }
      return Min(Max(v, lo), hi);
    }
  }
  return Rational();
}

}  // namespace

ExprProgram ExprProgram::Parse(std::string_view text, int dimension) {
  ExprProgram program;
  program.dimension_ = dimension;
  program.root_ = Parser(text, dimension).ParseAll();
  return program;
}

std::string ExprProgram::ToString() const {
  std::string out;
  Print(root_, out);
  return out;
}

Rational ExprProgram::Evaluate(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != dimension_) {
    throw Error(ErrorCode::kDimensionError,
                "program expects " + std::to_string(dimension_) +
                    " coordinates, got " + std::to_string(coords.size()));
  }
  return Eval(root_, coords);
}

}  // namespace lipfilter
