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

#ifndef ISALLOC_RATIONAL_HPP
#define ISALLOC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace isalloc {

// Every value in the library (weights, centralities, game values, shares) is
// an exact rational. Decimals only exist as rendered strings.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a plain decimal such as "-0.25" exactly.
/// Exponent notation and whitespace are rejected.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p/q" form, always with an explicit denominator ("50/1").
std::string to_fraction_string(const Rational& value);

/// Rounds half-to-even at `precision` fractional digits and renders the
/// result in fixed notation ("19.06", "12.70", "-0.5").
std::string render_decimal(const Rational& value, int precision);

Rational sum(std::span<const Rational> values);

Integer factorial(std::uint32_t n);

}  // namespace isalloc

#endif  // ISALLOC_RATIONAL_HPP
