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

#include "budget_games/rational.h"

#include <cctype>
#include <cstdlib>
#include <string>
#include <utility>

#include "budget_games/errors.h"

namespace budget_games {
namespace {

// Digits only, no leading zeros unless the string is exactly "0".
bool IsCanonicalDigits(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return digits.size() == 1 || digits.front() != '0';
}

}  // namespace

Rational::Rational(std::int64_t value) {
  value_ = mpz_class(std::to_string(value));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const char* why) -> Rational {
    throw ParseError("invalid rational '" + original + "': " + why);
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos
                                   ? std::string_view()
                                   : text.substr(slash + 1);
  if (!IsCanonicalDigits(num)) return fail("expected digits");
  if (slash != std::string_view::npos && !IsCanonicalDigits(den)) {
    return fail("expected digits after '/'");
  }
  mpz_class n{std::string(num)};
  if (negative && n == 0) return fail("negative zero");
  if (negative) n = -n;
  if (slash == std::string_view::npos) return Rational(mpq_class(n));
  mpz_class d{std::string(den)};
  if (d == 0) return fail("zero denominator");
  if (d == 1) return fail("denominator 1 must be omitted");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return fail("not in lowest terms");
  return Rational(mpq_class(n, d));
}

double Rational::ToDouble() const {
  // mpq_get_d truncates; go through a long decimal expansion and let strtod
  // round.
  const mpf_class wide(value_, 160);
  mp_exp_t exponent;
  std::string digits = wide.get_str(exponent, 10, 40);
  if (digits.empty()) return 0.0;
  const bool negative = digits[0] == '-';
  if (negative) digits.erase(0, 1);
  const std::string text = std::string(negative ? "-" : "") + "0." + digits +
                           "e" + std::to_string(exponent);
  return std::strtod(text.c_str(), nullptr);
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

}  // namespace budget_games
