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

#include "iprev/rational.hpp"

#include <cctype>
#include <cstddef>

#include "iprev/error.hpp"

namespace iprev {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw Error("empty number string");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw Error("bare sign in number string '" + text + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error("malformed fraction '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) throw Error("zero denominator in '" + text + "'");
    value = Rat(mpz_class(num), d);
  } else if (auto point = s.find('.'); point != std::string::npos) {
    std::string whole = s.substr(0, point);
    std::string frac = s.substr(point + 1);
    if (whole.empty() && frac.empty()) throw Error("malformed decimal '" + text + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw Error("malformed decimal '" + text + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits(whole.empty() ? std::string("0") : whole);
    digits *= scale;
    if (!frac.empty()) digits += mpz_class(frac);
    value = Rat(digits, scale);
  } else {
    if (!all_digits(s)) throw Error("malformed number '" + text + "'");
    value = Rat(mpz_class(s));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rat_to_decimal(const Rat& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";

  const bool negative = q < 0;
  mpz_class a = abs(q.get_num());
  mpz_class b = abs(q.get_den());

  // Find e with 10^e <= a/b < 10^(e+1).
  long e = static_cast<long>(a.get_str().size()) - static_cast<long>(b.get_str().size());
  auto cmp_pow = [&](long k) {
    // compares a with b*10^k (k may be negative)
    mpz_class lhs = a, rhs = b;
    if (k >= 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= p;
    } else {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= p;
    }
    return cmp(lhs, rhs);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;

  // Round a/b to significant_digits digits: round(a * 10^(sd-1-e) / b).
  long shift = significant_digits - 1 - e;
  mpz_class num = a, den = b;
  mpz_class p;
  if (shift >= 0) {
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= p;
  } else {
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    den *= p;
  }
  mpz_class rounded = (2 * num + den) / (2 * den);  // round half up
  std::string digits = rounded.get_str();
  if (digits.size() > static_cast<std::size_t>(significant_digits)) {
    // rounding carried into an extra digit (e.g. 999999.5 -> 1000000)
    digits = digits.substr(0, static_cast<std::size_t>(significant_digits));
    ++e;
  }

  long point = e + 1;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits;
    out.append(static_cast<std::size_t>(point) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point)) + "." +
          digits.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

std::string rat_display(const Rat& q) {
  std::string exact = rat_to_string(q);
  std::string dec = rat_to_decimal(q);
  if (exact == dec) return exact;
  return exact + " (" + dec + ")";
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace iprev
