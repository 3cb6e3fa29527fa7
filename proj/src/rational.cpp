// Copyright 2026 The isalloc Authors
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

#include "isalloc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace isalloc {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Optional leading sign followed by at least one digit.
bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_signed_integer(num) || !all_digits(den)) return std::nullopt;
    Integer d = to_integer(den);
    if (d == 0) return std::nullopt;
    Rational r(to_integer(num), d);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (!frac.empty() && !all_digits(frac)) return std::nullopt;

  std::string digits(whole);
  digits += frac;
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string render_decimal(const Rational& value, int precision) {
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");

  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  Integer num = value.get_num() * scale;
  const Integer& den = value.get_den();

  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // 0 <= r < den; compare the remainder against one half.
  Integer twice = r * 2;
  int half = cmp(twice, den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) ++q;

  bool negative = q < 0;
  std::string digits = Integer(abs(q)).get_str();
  if (digits.size() <= static_cast<std::size_t>(precision)) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  if (precision == 0) return out + digits;
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(precision));
  out += '.';
  out += digits.substr(digits.size() - static_cast<std::size_t>(precision));
  return out;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

Integer factorial(std::uint32_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace isalloc
