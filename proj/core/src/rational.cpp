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

#include "lipfilter/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lipfilter/errors.hpp"

namespace lipfilter {
namespace {

using Wide = __int128;
using UWide = unsigned __int128;

constexpr Wide kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr Wide kInt64Min = std::numeric_limits<std::int64_t>::min();

UWide Gcd(UWide a, UWide b) {
  while (b != 0) {
    UWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

UWide AbsWide(Wide v) { return v < 0 ? UWide(0) - UWide(v) : UWide(v); }

mpz_class MpzFromWide(Wide v) {
  const bool negative = v < 0;
  UWide mag = AbsWide(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class result = (hi << 64) + lo;
  return negative ? mpz_class(-result) : result;
}

bool FitsInt64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()); }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidParam, "rational with zero denominator");
  }
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(Wide numerator, Wide denominator) {
  if (numerator > kInt64Min && numerator <= kInt64Max && denominator > 0 &&
      denominator <= kInt64Max) {
    // 64-bit fast path; 128-bit division is several times slower.
    const auto n = static_cast<std::int64_t>(numerator);
    const auto d = static_cast<std::int64_t>(denominator);
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    Rational r;
    r.num_ = n / g;
    r.den_ = d / g;
    return r;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  UWide g = Gcd(AbsWide(numerator), UWide(denominator));
  if (g > 1) {
    numerator /= Wide(g);
    denominator /= Wide(g);
  }
  Rational r;
  if (numerator >= kInt64Min && numerator <= kInt64Max &&
      denominator <= kInt64Max) {
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
  }
  mpq_class q(MpzFromWide(numerator), MpzFromWide(denominator));
  q.canonicalize();
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  r.num_ = 0;
  r.den_ = 1;
  return r;
}

Rational Rational::FromMpq(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  Rational r;
  if (FitsInt64(q.get_num()) && FitsInt64(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::FromDouble(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidParam, "cannot convert non-finite double");
  }
  mpq_class q(value);  // GMP converts doubles exactly.
  return FromMpq(q);
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kParseError,
                 "malformed rational '" + std::string(text) + "'");
  };
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw fail();

  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    ++i;
  }
  auto digits_from = [&](std::size_t start) {
    std::size_t j = start;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t int_end = digits_from(i);
  if (int_end == i) throw fail();
  mpz_class numerator(std::string(s.substr(i, int_end - i)), 10);
  mpz_class denominator(1);

  if (int_end < s.size()) {
    if (s[int_end] == '/') {
      std::size_t den_end = digits_from(int_end + 1);
      if (den_end == int_end + 1 || den_end != s.size()) throw fail();
      denominator =
          mpz_class(std::string(s.substr(int_end + 1, den_end - int_end - 1)),
                    10);
      if (denominator == 0) {
        throw Error(ErrorCode::kParseError, "rational with zero denominator");
      }
    } else if (s[int_end] == '.') {
      std::size_t frac_end = digits_from(int_end + 1);
      if (frac_end == int_end + 1 || frac_end != s.size()) throw fail();
      std::string frac(s.substr(int_end + 1, frac_end - int_end - 1));
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      numerator = numerator * scale + mpz_class(frac, 10);
      denominator = scale;
    } else {
      throw fail();
    }
  }
  if (negative) numerator = -numerator;
  return FromMpq(mpq_class(numerator, denominator));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::ToMpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

double Rational::ToDouble() const {
  if (big_) return big_->get_d();
  if (den_ == 1) return static_cast<double>(num_);
  return ToMpq().get_d();
}

std::string Rational::ToString() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Floor() const {
  if (big_) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return FromMpq(mpq_class(q));
  }
  std::int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ < 0)) --q;
  return Rational(q);
}

Rational Rational::Ceil() const { return -((-*this).Floor()); }

std::int64_t Rational::ToInt64() const {
  if (!is_integer() || big_) {
    throw Error(ErrorCode::kInvalidParam,
                "rational " + ToString() + " is not a 64-bit integer");
  }
  return num_;
}

Rational Rational::operator-() const {
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) {
    return FromMpq(-ToMpq());
  }
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_inline() && b.is_inline()) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(a.num_, b.num_, &sum)) return Rational(sum);
    }
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    Wide numerator;
    if (!__builtin_add_overflow(lhs, rhs, &numerator)) {
      return Rational::FromWide(numerator, Wide(a.den_) * b.den_);
    }
  }
  return Rational::FromMpq(a.ToMpq() + b.ToMpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_inline() && b.is_inline()) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t diff;
      if (!__builtin_sub_overflow(a.num_, b.num_, &diff)) return Rational(diff);
    }
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    Wide numerator;
    if (!__builtin_sub_overflow(lhs, rhs, &numerator)) {
      return Rational::FromWide(numerator, Wide(a.den_) * b.den_);
    }
  }
  return Rational::FromMpq(a.ToMpq() - b.ToMpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_inline() && b.is_inline()) {
    return Rational::FromWide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  return Rational::FromMpq(a.ToMpq() * b.ToMpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) {
    throw Error(ErrorCode::kInvalidParam, "division by zero");
  }
  if (a.is_inline() && b.is_inline()) {
    return Rational::FromWide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }
  return Rational::FromMpq(a.ToMpq() / b.ToMpq());
}

bool Rational::EqualSlow(const Rational& a, const Rational& b) {
  if (a.is_inline() != b.is_inline()) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering Rational::CompareSlow(const Rational& a,
                                           const Rational& b) {
  int c = cmp(a.ToMpq(), b.ToMpq());
  return c <=> 0;
}

std::size_t Rational::Hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) +
       (h >> 2);
  return static_cast<std::size_t>(h);
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational Pow(const Rational& base, int exponent) {
  if (exponent < 0) return Pow(Rational(1) / base, -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

}  // namespace lipfilter
