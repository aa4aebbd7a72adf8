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

#ifndef LIPFILTER_RATIONAL_HPP_
#define LIPFILTER_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lipfilter {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in 64 bits are stored
// inline; anything larger is promoted to a GMP rational. The representation is
// canonical (a value is stored inline iff it fits), so equality and hashing are
// exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  static Rational FromMpq(const mpq_class& value);
  // Exact conversion of a finite double (every double is a dyadic rational).
  static Rational FromDouble(double value);
  // Accepts "p", "-p", "p/q" and plain decimals such as "1.25" or "-0.5".
  static Rational Parse(std::string_view text);

  bool is_inline() const { return big_ == nullptr; }
  int sign() const;
  bool is_integer() const;

  mpq_class ToMpq() const;
  double ToDouble() const;
  // "p/q", or "p" when the denominator is one.
  std::string ToString() const;

  Rational Abs() const { return sign() < 0 ? -*this : *this; }
  Rational Floor() const;
  Rational Ceil() const;
  // Throws if the value does not fit.
  std::int64_t ToInt64() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_inline() && b.is_inline()) {
      return a.num_ == b.num_ && a.den_ == b.den_;
    }
    return EqualSlow(a, b);
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.is_inline() && b.is_inline()) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      return static_cast<__int128>(a.num_) * b.den_ <=>
             static_cast<__int128>(b.num_) * a.den_;
    }
    return CompareSlow(a, b);
  }

  std::size_t Hash() const;

  // Inline fields; meaningful only when is_inline().
  std::int64_t inline_numerator() const { return num_; }
  std::int64_t inline_denominator() const { return den_; }

 private:
  static Rational FromWide(__int128 numerator, __int128 denominator);
  static bool EqualSlow(const Rational& a, const Rational& b);
  static std::strong_ordering CompareSlow(const Rational& a,
                                          const Rational& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);
// Exact integer power; exponent may be negative for nonzero bases.
Rational Pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace lipfilter

template <>
struct std::hash<lipfilter::Rational> {
  std::size_t operator()(const lipfilter::Rational& r) const {
    return r.Hash();
  }
};

#endif  // LIPFILTER_RATIONAL_HPP_
