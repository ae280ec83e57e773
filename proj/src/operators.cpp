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

#include "lorentz/operators.hpp"

#include <mpfr.h>

#include <functional>
#include <numeric>

namespace lorentz {

namespace {

void check_kappa(const std::vector<int>& kappa) {
  for (int k : kappa)
    if (k < 0) throw InputError("negative degree cap");
}

void check_caps(const HomogPoly& f, const std::vector<int>& kappa) {
  if (static_cast<std::size_t>(f.nvars()) != kappa.size())
    throw InputError("cap vector has " + std::to_string(kappa.size()) +
                     " entries for " + std::to_string(f.nvars()) + " variables");
  for (const auto& [a, c] : f.terms())
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > kappa[i])
        throw InputError("monomial " + format_exponent(a) + " exceeds degree cap " +
                         format_exponent(kappa));
}

// Calls fn on every zero-one vector of length `size` with `ones` ones.
void for_each_subset(int size, int ones,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> bits(static_cast<std::size_t>(size), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (left == 0) {
      fn(bits);
      return;
    }
    for (int s = pos; s <= size - left; ++s) {
      bits[s] = 1;
      rec(s + 1, left - 1);
      bits[s] = 0;
    }
  };
  rec(0, ones);
}

}  // namespace

std::vector<ExponentVector> box_points(const std::vector<int>& kappa) {
  check_kappa(kappa);
  std::vector<ExponentVector> out;
  ExponentVector a(kappa.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == kappa.size()) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= kappa[pos]; ++v) {
      a[pos] = v;
      rec(pos + 1);
    }
    a[pos] = 0;
  };
  rec(0);
  return out;
}

Polarization polarize(const HomogPoly& f, const std::vector<int>& kappa) {
  check_kappa(kappa);
  check_caps(f, kappa);
  const int n = f.nvars();
  std::vector<int> offset(kappa.size(), 0);
  for (std::size_t i = 1; i < kappa.size(); ++i) offset[i] = offset[i - 1] + kappa[i - 1];
  const int total = std::accumulate(kappa.begin(), kappa.end(), 0);
  HomogPoly out(total, f.degree());
  for (const auto& [a, c] : f.terms()) {
    Integer norm = 1;
    for (int i = 0; i < n; ++i) norm *= binomial(kappa[i], a[i]);
    const Rational scaled = c / Rational(norm);
    // Product of elementary symmetric polynomials, one subset per group.
    ExponentVector beta(static_cast<std::size_t>(total), 0);
    std::function<void(int)> rec = [&](int group) {
      if (group == n) {
        out.add_term(beta, scaled);
        return;
      }
      for_each_subset(kappa[group], a[group], [&](const std::vector<int>& bits) {
        for (int s = 0; s < kappa[group]; ++s) beta[offset[group] + s] = bits[s];
        rec(group + 1);
      });
      for (int s = 0; s < kappa[group]; ++s) beta[offset[group] + s] = 0;
    };
    rec(0);
  }
  return Polarization{std::move(out), kappa, std::move(offset)};
}

HomogPoly project(const HomogPoly& g, const std::vector<int>& kappa) {
  check_kappa(kappa);
  const int total = std::accumulate(kappa.begin(), kappa.end(), 0);
  if (g.nvars() != total)
    throw InputError("polynomial has " + std::to_string(g.nvars()) +
                     " variables, grouping expects " + std::to_string(total));
  if (!is_multi_affine(g)) throw InputError("projection needs a multi-affine polynomial");
  std::vector<int> group;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    for (int s = 0; s < kappa[i]; ++s) group.push_back(static_cast<int>(i));
  HomogPoly out(static_cast<int>(kappa.size()), g.degree());
  for (const auto& [b, c] : g.terms()) {
    ExponentVector a(kappa.size(), 0);
    for (int k = 0; k < total; ++k) a[group[k]] += b[k];
    out.add_term(a, c);
  }
  return out;
}

HomogPoly normalize(const HomogPoly& f) {
  HomogPoly out(f.nvars(), f.degree());
  for (const auto& [a, c] : f.terms()) out.add_term(a, c / Rational(exponent_factorial(a)));
  return out;
}

HomogPoly multi_affine_part(const HomogPoly& f) {
  HomogPoly out(f.nvars(), f.degree());
  for (const auto& [a, c] : f.terms())
    if (is_zero_one(a)) out.add_term(a, c);
  return out;
}

namespace {

Rational numeric_pow(const Rational& c, const Rational& p) {
  mpfr_t base, expo, res;
  mpfr_inits2(kNumericPrecisionBits, base, expo, res, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(base, c.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(expo, p.get_mpq_t(), MPFR_RNDN);
  mpfr_pow(res, base, expo, MPFR_RNDN);
  Rational out;
  mpfr_get_q(out.get_mpq_t(), res);
  mpfr_clears(base, expo, res, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

CoefficientPower coefficient_power(const HomogPoly& f, const Rational& p,
                                   bool allow_numeric) {
  if (p < 0 || p > 1) throw InputError("power must lie in [0, 1]");
  CoefficientPower out{HomogPoly(f.nvars(), f.degree()), false};
  for (const auto& [a, c] : f.terms()) {
    if (c < 0) throw InputError("coefficient power needs nonnegative coefficients");
    const Integer fact = exponent_factorial(a);
    const Rational normalized = c * Rational(fact);
    std::optional<Rational> r = p == 0 ? Rational(1) : exact_pow(normalized, p);
    if (!r) {
      if (!allow_numeric)
        throw InputError("coefficient " + normalized.get_str() + " has no rational power " +
                         p.get_str());
      r = numeric_pow(normalized, p);
      out.numeric = true;
    }
    out.poly.add_term(a, *r / Rational(fact));
  }
  return out;
}

HomogPoly exclusion_step(const HomogPoly& f, int i, int j, const Rational& theta) {
  if (!is_multi_affine(f)) throw InputError("exclusion step needs a multi-affine polynomial");
  if (i == j) throw InputError("exclusion step needs two distinct variables");
  if (i < 0 || j < 0 || i >= f.nvars() || j >= f.nvars())
    throw InputError("variable index out of range");
  if (theta < 0 || theta > 1) throw InputError("theta must lie in [0, 1]");
  return (Rational(1) - theta) * f + theta * swap_variables(f, i, j);
}

HomogPoly nuij_transform(const HomogPoly& f, const Rational& theta) {
  if (theta <= 0) throw InputError("theta must be positive");
  const int n = f.nvars();
  const int d = f.degree();
  if (n == 0 || d == 0) return f;
  HomogPoly g = f;
  for (int i = 0; i + 1 < n; ++i) {
    const HomogPoly wi = HomogPoly::monomial(unit_vector(n, i));
    for (int r = 0; r < d; ++r) g = g + theta * (wi * derive_var(g, n - 1));
  }
  return g;
}

HomogPoly OperatorTable::image(const ExponentVector& a) const {
  if (a.size() != kappa.size() || !dominated_by(a, kappa))
    throw InputError("monomial " + format_exponent(a) + " is not below the cap " +
                     format_exponent(kappa));
  auto it = images.find(a);
  if (it != images.end()) return it->second;
  const int deg = degree(a) + ell;
  if (deg < 0) return HomogPoly(m, 0);
  return HomogPoly(m, deg);
}

std::optional<std::string> validate(const OperatorTable& t) {
  if (t.m < 0) return "negative target variable count";
  for (int k : t.kappa)
    if (k < 0) return "negative degree cap";
  for (const auto& [a, img] : t.images) {
    if (a.size() != t.kappa.size()) return "image key " + format_exponent(a) + " has wrong length";
    for (int x : a)
      if (x < 0) return "image key " + format_exponent(a) + " is negative";
    if (!dominated_by(a, t.kappa))
      return "image key " + format_exponent(a) + " exceeds the cap " + format_exponent(t.kappa);
    if (img.nvars() != t.m)
      return "image of " + format_exponent(a) + " has " + std::to_string(img.nvars()) +
             " variables, expected " + std::to_string(t.m);
    if (!img.is_zero() && img.degree() != degree(a) + t.ell)
      return "image of " + format_exponent(a) + " has degree " + std::to_string(img.degree()) +
             ", expected " + std::to_string(degree(a) + t.ell);
  }
  return std::nullopt;
}

HomogPoly symbol(const OperatorTable& t) {
  if (auto err = validate(t)) throw InputError(*err);
  const int n = t.n();
  const int m = t.m;
  const int kappa_total = std::accumulate(t.kappa.begin(), t.kappa.end(), 0);
  const int deg = kappa_total + t.ell;
  if (deg < 0) throw InputError("symbol has negative degree");
  std::vector<int> vmap(static_cast<std::size_t>(m));
  std::iota(vmap.begin(), vmap.end(), 0);
  HomogPoly sym(m + n, deg);
  for (const auto& [a, img] : t.images) {
    if (img.is_zero()) continue;
    Integer coef = 1;
    ExponentVector u(static_cast<std::size_t>(m + n), 0);
    for (int i = 0; i < n; ++i) {
      coef *= binomial(t.kappa[i], a[i]);
      u[m + i] = t.kappa[i] - a[i];
    }
    HomogPoly lifted = embed(img, m + n, vmap);
    sym = sym + Rational(coef) * (lifted * HomogPoly::monomial(u));
  }
  return sym;
}

HomogPoly apply_operator(const OperatorTable& t, const HomogPoly& f) {
  if (auto err = validate(t)) throw InputError(*err);
  check_caps(f, t.kappa);
  const int deg = f.degree() + t.ell;
  if (deg < 0) throw InputError("operator lowers the degree below zero");
  HomogPoly out(t.m, deg);
  for (const auto& [a, c] : f.terms()) {
    auto it = t.images.find(a);
    if (it == t.images.end() || it->second.is_zero()) continue;
    out = out + c * it->second;
  }
  return out;
}

OperatorTable identity_table(const std::vector<int>& kappa) {
  OperatorTable t{kappa, 0, static_cast<int>(kappa.size()), {}};
  for (const auto& a : box_points(kappa)) t.images.emplace(a, HomogPoly::monomial(a));
  return t;
}

OperatorTable derivative_table(const std::vector<int>& kappa, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= kappa.size())
    throw InputError("derivative variable out of range");
  OperatorTable t{kappa, -1, static_cast<int>(kappa.size()), {}};
  for (const auto& a : box_points(kappa)) {
    if (a[i] == 0) continue;
    ExponentVector b = a;
    b[i] -= 1;
    t.images.emplace(a, HomogPoly::monomial(b, a[i]));
  }
  return t;
}

OperatorTable normalization_table(const std::vector<int>& kappa) {
  OperatorTable t{kappa, 0, static_cast<int>(kappa.size()), {}};
  for (const auto& a : box_points(kappa))
    t.images.emplace(a, HomogPoly::monomial(a, Rational(1) / Rational(exponent_factorial(a))));
  return t;
}

}  // namespace lorentz
