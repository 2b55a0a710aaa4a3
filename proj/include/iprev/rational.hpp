// Copyright 2026 The iprev Authors
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

#ifndef IPREV_RATIONAL_HPP
#define IPREV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace iprev {

/// Exact rational number. Every quantity in the library is a Rat; the
/// classification tests are exact equality tests and must never round.
using Rat = mpq_class;

/// Rational from a numerator/denominator pair, canonicalized. Prefer this
/// over the raw two-argument mpq_class constructor, which does not reduce
/// the fraction and leaves later GMP arithmetic undefined.
Rat make_rat(long num, long den = 1);

/// Parses "p/q", an integer, or a decimal string ("3/5", "-2", "0.75")
/// into an exact rational. Throws Error on anything else.
Rat rat_from_string(const std::string& text);

/// Canonical exact rendering: "3/5", "-2", "0".
std::string rat_to_string(const Rat& q);

/// Decimal rendering rounded to `significant_digits` significant digits,
/// trailing zeros stripped ("-2/5" -> "-0.4", "1/3" -> "0.333333").
std::string rat_to_decimal(const Rat& q, int significant_digits = 6);

/// Exact value followed by its decimal reading, e.g. "-2/5 (-0.4)".
std::string rat_display(const Rat& q);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace iprev

#endif  // IPREV_RATIONAL_HPP
