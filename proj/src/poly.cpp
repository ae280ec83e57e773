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

#include "lorentz/poly.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace lorentz {

int degree(const ExponentVector& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

Integer exponent_factorial(const ExponentVector& a) {
  Integer r = 1;
  for (int x : a) r *= factorial(static_cast<unsigned>(x));
  return r;
}

bool is_zero_one(const ExponentVector& a) {
  for (int x : a)
    if (x != 0 && x != 1) return false;
  return true;
}

ExponentVector unit_vector(int n, int i) {
  ExponentVector e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

std::optional<ExponentVector> checked_sub(const ExponentVector& a,
                                          const ExponentVector& b) {
  ExponentVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] -= b[i];
    if (c[i] < 0) return std::nullopt;
  }
  return c;
}

bool dominated_by(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int l1_distance(const ExponentVector& a, const ExponentVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

std::string format_exponent(const ExponentVector& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

void for_each_simplex_point(
    int n, int d, const std::function<void(const ExponentVector&)>& fn) {
  if (n < 0 || d < 0) return;
  if (n == 0) {
    if (d == 0) fn(ExponentVector{});
    return;
  }
  ExponentVector a(static_cast<std::size_t>(n), 0);
  // Lexicographic order: the last coordinate absorbs the remainder.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      fn(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
}

std::vector<ExponentVector> simplex_points(int n, int d) {
  std::vector<ExponentVector> out;
  for_each_simplex_point(n, d, [&](const ExponentVector& a) { out.push_back(a); });
  return out;
}

std::optional<std::string> validate(const RawPoly& raw) {
  if (raw.nvars < 0) return "negative variable count";
  if (raw.degree < 0) return "negative degree";
  std::set<ExponentVector> seen;
  for (std::size_t t = 0; t < raw.terms.size(); ++t) {
    const auto& [a, c] = raw.terms[t];
    const std::string where = "term " + std::to_string(t) + " ";
    if (a.size() != static_cast<std::size_t>(raw.nvars))
      return where + "has " + std::to_string(a.size()) +
             " exponents, expected " + std::to_string(raw.nvars);
    for (int x : a)
      if (x < 0) return where + "has a negative exponent";
    if (degree(a) != raw.degree)
      return where + format_exponent(a) + " has degree " +
             std::to_string(degree(a)) + ", declared " +
             std::to_string(raw.degree);
    if (c == 0) return where + format_exponent(a) + " stores a zero coefficient";
    if (!seen.insert(a).second)
      return where + format_exponent(a) + " is repeated";
  }
  return std::nullopt;
}

HomogPoly::HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || degree < 0) throw InputError("negative polynomial shape");
}

HomogPoly HomogPoly::from_raw(const RawPoly& raw) {
  if (auto err = validate(raw)) throw InputError(*err);
  HomogPoly p(raw.nvars, raw.degree);
  for (const auto& [a, c] : raw.terms) p.terms_.emplace(a, c);
  return p;
}

HomogPoly HomogPoly::from_terms(int nvars, int degree, const Terms& terms) {
  HomogPoly p(nvars, degree);
  for (const auto& [a, c] : terms) p.add_term(a, c);
  return p;
}

HomogPoly HomogPoly::monomial(const ExponentVector& a, const Rational& c) {
  HomogPoly p(static_cast<int>(a.size()), lorentz::degree(a));
  p.add_term(a, c);
  return p;
}

HomogPoly HomogPoly::constant(int nvars, const Rational& c) {
  HomogPoly p(nvars, 0);
  p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

HomogPoly HomogPoly::linear_form(std::span<const Rational> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  HomogPoly p(n, 1);
  for (int i = 0; i < n; ++i) p.add_term(unit_vector(n, i), coeffs[i]);
  return p;
}

Rational HomogPoly::coefficient(const ExponentVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational HomogPoly::normalized_coefficient(const ExponentVector& a) const {
  auto it = terms_.find(a);
  if (it == terms_.end()) return 0;
  return it->second * Rational(exponent_factorial(a));
}

void HomogPoly::add_term(const ExponentVector& a, const Rational& c) {
  if (a.size() != static_cast<std::size_t>(nvars_))
    throw InputError("exponent length " + std::to_string(a.size()) +
                     " does not match " + std::to_string(nvars_) + " variables");
  if (lorentz::degree(a) != degree_)
    throw InputError("monomial " + format_exponent(a) + " is not of degree " +
                     std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RawPoly HomogPoly::to_raw() const {
  RawPoly raw{nvars_, degree_, {}};
  raw.terms.assign(terms_.begin(), terms_.end());
  return raw;
}

std::vector<ExponentVector> HomogPoly::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& kv : terms_) s.push_back(kv.first);
  return s;
}

namespace {

void require_same_shape(const HomogPoly& a, const HomogPoly& b) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree())
    throw InputError("polynomial shapes differ");
}

// Falling factorial b (b-1) ... (b-k+1).
Integer falling(int b, int k) {
  Integer r = 1;
  for (int t = 0; t < k; ++t) r *= (b - t);
  return r;
}

}  // namespace

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
  require_same_shape(a, b);
  HomogPoly c = a;
  for (const auto& [e, v] : b.terms()) c.add_term(e, v);
  return c;
}

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) {
  return a + Rational(-1) * b;
}

HomogPoly operator*(const Rational& s, const HomogPoly& p) {
  HomogPoly c(p.nvars(), p.degree());
  if (s == 0) return c;
  for (const auto& [e, v] : p.terms()) c.add_term(e, s * v);
  return c;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (a.nvars() != b.nvars())
    throw InputError("product of polynomials in different variable counts");
  HomogPoly c(a.nvars(), a.degree() + b.degree());
  for (const auto& [ea, va] : a.terms())
    for (const auto& [eb, vb] : b.terms()) c.add_term(ea + eb, va * vb);
  return c;
}

HomogPoly pow(const HomogPoly& p, int k) {
  if (k < 0) throw InputError("negative polynomial power");
  HomogPoly r = HomogPoly::constant(p.nvars(), 1);
  HomogPoly base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

std::string to_string(const HomogPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order, so w1^d comes first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool unit = a == 1;
    bool any_var = false;
    if (!unit) os << a.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (unit && !any_var ? "" : "*") << "w" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      any_var = true;
    }
    if (unit && !any_var) os << "1";
  }
  return os.str();
}

Rational eval(const HomogPoly& p, std::span<const Rational> w) {
  if (w.size() != static_cast<std::size_t>(p.nvars()))
    throw InputError("evaluation point has " + std::to_string(w.size()) +
                     " coordinates, expected " + std::to_string(p.nvars()));
  const std::size_t n = w.size();
  const int d = p.degree();
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].resize(static_cast<std::size_t>(d) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * w[i];
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) term *= powers[i][static_cast<std::size_t>(e[i])];
    sum += term;
  }
  return sum;
}

HomogPoly derive(const HomogPoly& p, const ExponentVector& a) {
  if (a.size() != static_cast<std::size_t>(p.nvars()))
    throw InputError("derivative multi-index has wrong length");
  for (int x : a)
    if (x < 0) throw InputError("negative derivative order");
  const int k = degree(a);
  if (k > p.degree())
    throw InputError("derivative order " + std::to_string(k) +
                     " exceeds degree " + std::to_string(p.degree()));
  HomogPoly r(p.nvars(), p.degree() - k);
  for (const auto& [e, c] : p.terms()) {
    auto rest = checked_sub(e, a);
    if (!rest) continue;
    Integer f = 1;
    for (std::size_t i = 0; i < e.size(); ++i) f *= falling(e[i], a[i]);
    r.add_term(*rest, c * Rational(f));
  }
  return r;
}

HomogPoly derive_var(const HomogPoly& p, int i) {
  return derive(p, unit_vector(p.nvars(), i));
}

HomogPoly directional_derive(const HomogPoly& p, std::span<const Rational> a) {
  if (a.size() != static_cast<std::size_t>(p.nvars()))
    throw InputError("direction has wrong length");
  for (const auto& x : a)
    if (x < 0) throw InputError("direction has a negative entry");
  if (p.degree() == 0) throw InputError("derivative of a constant form");
  HomogPoly r(p.nvars(), p.degree() - 1);
  for (int i = 0; i < p.nvars(); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    r = r + a[static_cast<std::size_t>(i)] * derive_var(p, i);
  }
  return r;
}

HomogPoly substitute_any(const HomogPoly& p, const Matrix& a) {
  if (a.rows() != static_cast<std::size_t>(p.nvars()))
    throw InputError("substitution matrix has " + std::to_string(a.rows()) +
                     " rows, expected " + std::to_string(p.nvars()));
  const int m = static_cast<int>(a.cols());
  std::vector<HomogPoly> forms;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rational> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    forms.push_back(HomogPoly::linear_form(row));
  }
  // powers[i][k] = (row i form)^k, built lazily
  std::vector<std::vector<HomogPoly>> powers(forms.size());
  auto power_of = [&](std::size_t i, int k) -> const HomogPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(HomogPoly::constant(m, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * forms[i]);
    return v[static_cast<std::size_t>(k)];
  };
  HomogPoly r(m, p.degree());
  for (const auto& [e, c] : p.terms()) {
    HomogPoly t = HomogPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * power_of(i, e[i]);
    r = r + t;
  }
  return r;
}

HomogPoly substitute(const HomogPoly& p, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) < 0) throw InputError("substitution matrix has a negative entry");
  return substitute_any(p, a);
}

SymMatrix hessian(const HomogPoly& p,
                  std::optional<std::span<const Rational>> at) {
  if (p.degree() < 2) throw InputError("Hessian needs degree at least 2");
  const int n = p.nvars();
  SymMatrix h(static_cast<std::size_t>(n));
  if (p.degree() == 2) {
    ExponentVector zero(static_cast<std::size_t>(n), 0);
    return quadratic_hessian(p, zero);
  }
  if (!at) throw InputError("Hessian of degree > 2 needs an evaluation point");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ExponentVector a(static_cast<std::size_t>(n), 0);
      a[static_cast<std::size_t>(i)] += 1;
      a[static_cast<std::size_t>(j)] += 1;
      h.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
            eval(derive(p, a), *at));
    }
  return h;
}

SymMatrix quadratic_hessian(const HomogPoly& p, const ExponentVector& a) {
  const int n = p.nvars();
  if (degree(a) + 2 != p.degree())
    throw InputError("quadratic_hessian needs |a| = degree - 2");
  SymMatrix h(static_cast<std::size_t>(n));
  ExponentVector b = a;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      b[static_cast<std::size_t>(i)] += 1;
      b[static_cast<std::size_t>(j)] += 1;
      Rational c = p.normalized_coefficient(b);
      if (c != 0) h.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), c);
      b[static_cast<std::size_t>(i)] -= 1;
      b[static_cast<std::size_t>(j)] -= 1;
    }
  return h;
}

HomogPoly swap_variables(const HomogPoly& p, int i, int j) {
  HomogPoly r(p.nvars(), p.degree());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    r.add_term(f, c);
  }
  return r;
}

HomogPoly embed(const HomogPoly& p, int nvars, const std::vector<int>& map) {
  if (map.size() != static_cast<std::size_t>(p.nvars()))
    throw InputError("embedding map has wrong length");
  HomogPoly r(nvars, p.degree());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f(static_cast<std::size_t>(nvars), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      f[static_cast<std::size_t>(map[i])] += e[i];
    r.add_term(f, c);
  }
  return r;
}

bool has_nonnegative_coefficients(const HomogPoly& p) {
  for (const auto& kv : p.terms())
    if (kv.second < 0) return false;
  return true;
}

bool is_multi_affine(const HomogPoly& p) {
  for (const auto& kv : p.terms())
    if (!is_zero_one(kv.first)) return false;
  return true;
}

std::vector<int> degree_caps(const HomogPoly& p) {
  std::vector<int> caps(static_cast<std::size_t>(p.nvars()), 0);
  for (const auto& kv : p.terms())
    for (std::size_t i = 0; i < caps.size(); ++i)
      caps[i] = std::max(caps[i], kv.first[i]);
  return caps;
}

}  // namespace lorentz
