// Copyright 2026 The Budget Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BUDGET_GAMES_RATIONAL_H_
#define BUDGET_GAMES_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace budget_games {

// Exact rational number in canonical form (gcd 1, positive denominator).
// Every budget, demand, utility and welfare value in the library is one of
// these; there is no floating point on any decision path.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit on purpose
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" in canonical form only: no leading '+', no leading
  // zeros, q > 1, gcd(p, q) = 1, and no "-0". Throws ParseError otherwise.
  static Rational Parse(std::string_view text);

  // Canonical text: "p" when the denominator is 1, otherwise "p/q".
  std::string ToString() const;
  // Nearest double (ties beyond 40 significant digits aside).
  double ToDouble() const;

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  bool IsInteger() const { return value_.get_den() == 1; }

  // Numerator/denominator as decimal strings (arbitrary precision).
  std::string NumeratorString() const { return value_.get_num().get_str(); }
  std::string DenominatorString() const { return value_.get_den().get_str(); }

  // Largest integer <= value.
  Rational Floor() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace budget_games

#endif  // BUDGET_GAMES_RATIONAL_H_
