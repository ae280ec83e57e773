// Copyright 2026 The Authors.
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

#include "lorentz/rational.hpp"

#include <cctype>

namespace lorentz {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw InputError("not an integer literal: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

// Exact b-th root of a nonnegative integer, if one exists.
std::optional<Integer> exact_root(const Integer& x, unsigned long b) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), b) == 0) return std::nullopt;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(text, "1");
  return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

Rational make_rational(std::string_view num, std::string_view den) {
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& q, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (q == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_pow(const Rational& q, const Rational& p) {
  if (q <= 0) throw std::domain_error("exact_pow needs a positive base");
  // q^(a/b) = (q^(1/b))^a
  const Integer& a = p.get_num();
  const Integer& b = p.get_den();
  if (!b.fits_ulong_p() || !a.fits_slong_p()) return std::nullopt;
  auto rn = exact_root(q.get_num(), b.get_ui());
  auto rd = exact_root(q.get_den(), b.get_ui());
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  root.canonicalize();
  return pow(root, a.get_si());
}

}  // namespace lorentz
