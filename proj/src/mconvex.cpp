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

#include "lorentz/mconvex.hpp"

#include <functional>

#include "lorentz/parallel.hpp"

namespace lorentz {

PointSet PointSet::from_points(int nvars,
                               const std::vector<ExponentVector>& pts) {
  if (pts.empty()) return PointSet(nvars, 0);
  if (pts.front().size() != static_cast<std::size_t>(nvars))
    throw InputError("point has wrong length");
  return from_points(nvars, lorentz::degree(pts.front()), pts);
}

PointSet PointSet::from_points(int nvars, int degree,
                               const std::vector<ExponentVector>& pts) {
  PointSet s(nvars, degree);
  for (const auto& p : pts) s.insert(p);
  return s;
}

PointSet PointSet::full_simplex(int nvars, int degree) {
  return from_points(nvars, degree, simplex_points(nvars, degree));
}

void PointSet::insert(const ExponentVector& a) {
  if (a.size() != static_cast<std::size_t>(nvars_))
    throw InputError("point " + format_exponent(a) + " has wrong length");
  for (int x : a)
    if (x < 0) throw InputError("point " + format_exponent(a) + " is negative");
  if (lorentz::degree(a) != degree_)
    throw InputError("mixed degrees: " + format_exponent(a) +
                     " is not of degree " + std::to_string(degree_));
  points_.insert(a);
}

SetCheck is_m_convex_set(const PointSet& j) {
  const std::vector<ExponentVector> pts(j.points().begin(), j.points().end());
  const int n = j.nvars();
  std::vector<std::optional<ExchangeWitness>> found(pts.size());
  auto first = find_first(pts.size(), [&](std::size_t ia) {
    const auto& a = pts[ia];
    for (const auto& b : pts) {
      for (int i = 0; i < n; ++i) {
        if (a[i] <= b[i]) continue;
        bool ok = false;
        ExponentVector c = a;
        c[i] -= 1;
        for (int jj = 0; jj < n && !ok; ++jj) {
          if (a[jj] >= b[jj]) continue;
          c[jj] += 1;
          ok = j.contains(c);
          c[jj] -= 1;
        }
        if (!ok) {
          found[ia] = ExchangeWitness{a, b, i};
          return true;
        }
      }
    }
    return false;
  });
  if (!first) return {};
  return SetCheck{false, found[*first]};
}

SetCheck is_matroid_basis_family(const PointSet& b) {
  for (const auto& p : b.points())
    if (!is_zero_one(p))
      throw InputError("point " + format_exponent(p) + " is not zero-one");
  if (b.empty()) return SetCheck{false, std::nullopt};
  return is_m_convex_set(b);
}

DiscreteFunction DiscreteFunction::indicator(const PointSet& j) {
  DiscreteFunction f(j.nvars(), j.degree());
  for (const auto& p : j.points()) f.set(p, 0);
  return f;
}

void DiscreteFunction::set(const ExponentVector& a, const Rational& v) {
  if (a.size() != static_cast<std::size_t>(nvars_))
    throw InputError("point " + format_exponent(a) + " has wrong length");
  for (int x : a)
    if (x < 0) throw InputError("point " + format_exponent(a) + " is negative");
  if (lorentz::degree(a) != degree_)
    throw InputError("point " + format_exponent(a) + " is not of degree " +
                     std::to_string(degree_));
  values_[a] = v;
}

std::optional<Rational> DiscreteFunction::at(const ExponentVector& a) const {
  auto it = values_.find(a);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

PointSet DiscreteFunction::domain() const {
  PointSet s(nvars_, degree_);
  for (const auto& kv : values_) s.insert(kv.first);
  return s;
}

bool DiscreteFunction::is_integer_valued() const {
  for (const auto& kv : values_)
    if (kv.second.get_den() != 1) return false;
  return true;
}

FunctionCheck is_m_convex_function(const DiscreteFunction& nu) {
  SetCheck dom = is_m_convex_set(nu.domain());
  if (!dom) return FunctionCheck{false, FunctionCheck::Failure::domain, dom.witness};

  const int n = nu.nvars();
  const std::vector<std::pair<ExponentVector, Rational>> pts(
      nu.values().begin(), nu.values().end());
  std::vector<std::optional<ExchangeWitness>> found(pts.size());
  auto first = find_first(pts.size(), [&](std::size_t ia) {
    const auto& [a, va] = pts[ia];
    for (const auto& [b, vb] : pts) {
      if (l1_distance(a, b) != 4) continue;
      bool ok = false;
      for (int i = 0; i < n && !ok; ++i) {
        if (a[i] <= b[i]) continue;
        for (int j = 0; j < n && !ok; ++j) {
          if (a[j] >= b[j]) continue;
          ExponentVector a2 = a, b2 = b;
          a2[i] -= 1;
          a2[j] += 1;
          b2[j] -= 1;
          b2[i] += 1;
          auto va2 = nu.at(a2);
          auto vb2 = nu.at(b2);
          ok = va2 && vb2 && va + vb >= *va2 + *vb2;
        }
      }
      if (!ok) {
        found[ia] = ExchangeWitness{a, b, 0};
        return true;
      }
    }
    return false;
  });
  if (!first) return {};
  return FunctionCheck{false, FunctionCheck::Failure::local_exchange,
                       found[*first]};
}

namespace {

Rational power_or_throw(const Rational& q, const Rational& e) {
  if (q <= 0) throw InputError("q must be positive");
  if (e.get_den() == 1) return pow(q, e.get_num().get_si());
  auto r = exact_pow(q, e);
  if (!r)
    throw InputError("q^" + e.get_str() +
                     " is irrational; pass q as a perfect power s^m");
  return *r;
}

}  // namespace

HomogPoly generating_poly_f(const DiscreteFunction& nu, const Rational& q) {
  if (q <= 0) throw InputError("q must be positive");
  HomogPoly f(nu.nvars(), nu.degree());
  for (const auto& [a, v] : nu.values())
    f.add_term(a, power_or_throw(q, v) / Rational(exponent_factorial(a)));
  return f;
}

HomogPoly generating_poly_g(const DiscreteFunction& nu, const Rational& q) {
  if (q <= 0) throw InputError("q must be positive");
  HomogPoly g(nu.nvars(), nu.degree());
  const int d = nu.degree();
  for (const auto& [a, v] : nu.values()) {
    Integer w = 1;
    for (int x : a) w *= binomial(d, x);
    g.add_term(a, Rational(w) * power_or_throw(q, v));
  }
  return g;
}

DiscreteFunction polarize_fn(const DiscreteFunction& nu) {
  const int n = nu.nvars();
  const int d = nu.degree();
  const int m = n * d;
  DiscreteFunction out(m, d);
  for (const auto& [a, v] : nu.values()) {
    // Choose a_i of the d slots in every group i.
    ExponentVector beta(static_cast<std::size_t>(m), 0);
    std::function<void(int, int, int)> rec = [&](int group, int slot, int left) {
      if (group == n) {
        out.set(beta, v);
        return;
      }
      if (left == 0) {
        if (group + 1 < n) rec(group + 1, 0, a[group + 1]);
        else rec(n, 0, 0);
        return;
      }
      for (int s = slot; s <= d - left; ++s) {
        beta[group * d + s] = 1;
        rec(group, s + 1, left - 1);
        beta[group * d + s] = 0;
      }
    };
    if (n == 0) out.set(beta, v);
    else rec(0, 0, a[0]);
  }
  return out;
}

DiscreteFunction project_fn(const DiscreteFunction& mu, int nvars) {
  const int d = mu.degree();
  if (nvars <= 0 || mu.nvars() != nvars * d)
    throw InputError("function has " + std::to_string(mu.nvars()) +
                     " variables, grouping expects " +
                     std::to_string(nvars * d));
  DiscreteFunction out(nvars, d);
  std::map<ExponentVector, Rational> best;
  for (const auto& [b, v] : mu.values()) {
    ExponentVector a(static_cast<std::size_t>(nvars), 0);
    for (int k = 0; k < mu.nvars(); ++k) a[k / d] += b[k];
    auto [it, inserted] = best.emplace(a, v);
    if (!inserted && v < it->second) it->second = v;
  }
  for (const auto& [a, v] : best) out.set(a, v);
  return out;
}

DiscreteFunction regularize(const DiscreteFunction& nu, long k) {
  if (nu.is_infinite()) throw InputError("function is identically infinite");
  if (k < 0) throw InputError("regularization parameter must be nonnegative");
  FunctionCheck c = is_m_convex_function(nu);
  if (!c) throw InputError("regularize needs an M-convex function");
  DiscreteFunction out(nu.nvars(), nu.degree());
  // A transport plan with row sums g and column sums a keeps at most
  // sum_i min(g_i, a_i) on the diagonal, so the cheapest fiber point costs
  // k (d - sum min) = k |g - a|_1 / 2.
  for_each_simplex_point(nu.nvars(), nu.degree(), [&](const ExponentVector& a) {
    std::optional<Rational> best;
    for (const auto& [g, v] : nu.values()) {
      Rational cand = v + Rational(k * (l1_distance(g, a) / 2));
      if (!best || cand < *best) best = cand;
    }
    out.set(a, *best);
  });
  return out;
}

}  // namespace lorentz
