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

#include "lorentz/certifier.hpp"

#include <cmath>
#include <map>
#include <set>

#include "lorentz/parallel.hpp"

namespace lorentz {

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::none: return "none";
    case FailureKind::negative_coefficient: return "negative_coefficient";
    case FailureKind::nonpositive_coefficient: return "nonpositive_coefficient";
    case FailureKind::support_not_m_convex: return "support_not_m_convex";
    case FailureKind::inertia_violation: return "inertia_violation";
  }
  return "unknown";
}

namespace {

// Derivative indices a of degree d - 2 for which d^a f is nonzero, sorted.
std::vector<ExponentVector> live_quadratic_indices(const HomogPoly& f) {
  std::set<ExponentVector> out;
  const int n = f.nvars();
  for (const auto& [b, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (b[i] == 0) continue;
      for (int j = i; j < n; ++j) {
        if (b[j] - (i == j ? 1 : 0) <= 0) continue;
        ExponentVector a = b;
        a[i] -= 1;
        a[j] -= 1;
        out.insert(std::move(a));
      }
    }
  }
  return {out.begin(), out.end()};
}

// Runs `bad` over the quadratic indices, recording the first or every
// failure into `cert`.
template <typename Bad>
void scan_quadratics(const HomogPoly& f, const std::vector<ExponentVector>& idx,
                     const CertifyOptions& opts, Certificate& cert, Bad bad) {
  cert.quadratics_checked = idx.size();
  std::vector<std::optional<InertiaFailure>> slot(idx.size());
  auto probe = [&](std::size_t k) {
    SymMatrix h = quadratic_hessian(f, idx[k]);
    Inertia in = inertia(h);
    if (bad(in, h.size())) {
      slot[k] = InertiaFailure{idx[k], std::move(h), in};
      return true;
    }
    return false;
  };
  std::optional<std::size_t> first;
  if (opts.exhaustive) {
    for_each_index(idx.size(), [&](std::size_t k) { probe(k); });
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (slot[k]) {
        if (!first) first = k;
        cert.all_inertia_failures.push_back(*slot[k]);
      }
  } else {
    first = find_first(idx.size(), probe);
  }
  if (first) {
    cert.verdict = false;
    cert.failing_kind = FailureKind::inertia_violation;
    cert.failing_alpha = idx[*first];
    cert.inertia = slot[*first];
  }
}

}  // namespace

Certificate is_lorentzian(const HomogPoly& f, CertifyOptions opts) {
  Certificate cert;
  if (f.is_zero()) {
    cert.zero = true;
    return cert;
  }
  for (const auto& [a, c] : f.terms()) {
    if (c < 0) {
      cert.verdict = false;
      cert.failing_kind = FailureKind::negative_coefficient;
      cert.failing_alpha = a;
      return cert;
    }
  }
  if (f.degree() <= 1) return cert;

  PointSet supp = PointSet::from_points(f.nvars(), f.degree(), f.support());
  SetCheck mc = is_m_convex_set(supp);
  if (!mc) {
    cert.verdict = false;
    cert.failing_kind = FailureKind::support_not_m_convex;
    cert.exchange = mc.witness;
    return cert;
  }
  scan_quadratics(f, live_quadratic_indices(f), opts, cert,
                  [](const Inertia& in, std::size_t) { return in.n_plus > 1; });
  return cert;
}

Certificate is_strictly_lorentzian(const HomogPoly& f, CertifyOptions opts) {
  Certificate cert;
  const int n = f.nvars();
  const int d = f.degree();
  // Every monomial of the simplex must carry a positive coefficient.
  std::optional<ExponentVector> missing;
  for_each_simplex_point(n, d, [&](const ExponentVector& a) {
    if (!missing && f.coefficient(a) <= 0) missing = a;
  });
  if (missing) {
    cert.verdict = false;
    cert.failing_kind = FailureKind::nonpositive_coefficient;
    cert.failing_alpha = missing;
    return cert;
  }
  if (d <= 1) return cert;
  scan_quadratics(f, simplex_points(n, d - 2), opts, cert,
                  [](const Inertia& in, std::size_t size) {
                    return !(in.n_plus == 1 && in.n_zero == 0 &&
                             in.n_minus + 1 == size);
                  });
  return cert;
}

Inertia hodge_riemann_at(const HomogPoly& f, std::span<const Rational> w) {
  if (f.degree() < 2) throw InputError("Hodge-Riemann check needs degree >= 2");
  if (w.size() != static_cast<std::size_t>(f.nvars()))
    throw InputError("point has wrong dimension");
  for (const auto& x : w)
    if (x <= 0) throw InputError("point must be strictly positive");
  return inertia(hessian(f, w));
}

namespace {

// All derivative indices of order <= d that can be nonzero, with the
// derivative polynomials.
class DerivativeTable {
 public:
  explicit DerivativeTable(const HomogPoly& f) : n_(f.nvars()), d_(f.degree()) {
    std::set<ExponentVector> idx;
    for (const auto& [b, c] : f.terms()) {
      // Every a <= b.
      ExponentVector a(static_cast<std::size_t>(n_), 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n_) {
          idx.insert(a);
          return;
        }
        for (int v = 0; v <= b[pos]; ++v) {
          a[pos] = v;
          rec(pos + 1);
        }
        a[pos] = 0;
      };
      rec(0);
    }
    for (const auto& a : idx) polys_.emplace(a, derive(f, a));
  }

  std::map<ExponentVector, Rational> eval_all(std::span<const Rational> w) const {
    std::map<ExponentVector, Rational> v;
    for (const auto& [a, p] : polys_) v.emplace(a, eval(p, w));
    return v;
  }

  int nvars() const { return n_; }
  int degree() const { return d_; }

 private:
  int n_;
  int d_;
  std::map<ExponentVector, HomogPoly> polys_;
};

std::optional<RayleighViolation> check_values(
    const DerivativeTable& table, const std::map<ExponentVector, Rational>& v,
    const Rational& c, std::span<const Rational> w) {
  const int n = table.nvars();
  auto value = [&](const ExponentVector& a) -> Rational {
    auto it = v.find(a);
    return it == v.end() ? Rational(0) : it->second;
  };
  for (int k = 0; k + 2 <= table.degree(); ++k) {
    for (const auto& a : simplex_points(n, k)) {
      auto base = v.find(a);
      if (base == v.end()) continue;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          ExponentVector ai = a, aj = a, aij = a;
          ai[i] += 1;
          aj[j] += 1;
          aij[i] += 1;
          aij[j] += 1;
          Rational lhs = base->second * value(aij);
          Rational rhs = c * value(ai) * value(aj);
          if (lhs > rhs) {
            return RayleighViolation{a, i, j, {w.begin(), w.end()}, lhs, rhs};
          }
        }
    }
  }
  return std::nullopt;
}

void require_nonnegative(const HomogPoly& f) {
  if (!has_nonnegative_coefficients(f))
    throw InputError("Rayleigh check needs nonnegative coefficients");
}

}  // namespace

std::optional<RayleighViolation> rayleigh_check_at(const HomogPoly& f,
                                                   const Rational& c,
                                                   std::span<const Rational> w) {
  require_nonnegative(f);
  if (w.size() != static_cast<std::size_t>(f.nvars()))
    throw InputError("point has wrong dimension");
  for (const auto& x : w)
    if (x < 0) throw InputError("point must be nonnegative");
  DerivativeTable table(f);
  return check_values(table, table.eval_all(w), c, w);
}

std::vector<Rational> random_orthant_point(int n, std::uint64_t zero_mask,
                                           std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 16);
  std::vector<Rational> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int num = dist(rng);
    int den = dist(rng);
    if (i < 64 && ((zero_mask >> i) & 1u)) continue;
    w[i] = Rational(num, den);
    w[i].canonicalize();
  }
  return w;
}

std::optional<RayleighViolation> rayleigh_falsify(const HomogPoly& f,
                                                  const Rational& c,
                                                  std::size_t trials,
                                                  std::uint64_t seed) {
  require_nonnegative(f);
  if (c <= 0) throw InputError("Rayleigh constant must be positive");
  const int n = f.nvars();
  if (f.degree() < 2 || n == 0) return std::nullopt;
  DerivativeTable table(f);
  const std::uint64_t faces = n >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  // Points are drawn up front so the result does not depend on the worker
  // count.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> points;
  points.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t)
    points.push_back(random_orthant_point(n, static_cast<std::uint64_t>(t) % faces, rng));
  std::vector<std::optional<RayleighViolation>> found(trials);
  auto first = find_first(trials, [&](std::size_t t) {
    found[t] = check_values(table, table.eval_all(points[t]), c, points[t]);
    return found[t].has_value();
  });
  if (!first) return std::nullopt;
  return found[*first];
}

LogConcavityProbe log_concavity_probe(const HomogPoly& f,
                                      std::span<const Rational> w,
                                      std::span<const Rational> v, int steps) {
  const std::size_t n = static_cast<std::size_t>(f.nvars());
  if (w.size() != n || v.size() != n) throw InputError("dimension mismatch");
  const Rational f0 = eval(f, w);
  if (f0 <= 0) throw InputError("f(w) must be positive");
  LogConcavityProbe out;
  const double log0 = std::log(f0.get_d());
  bool first = true;
  Rational h = 1;
  for (int s = 0; s < steps; ++s, h /= 2) {
    std::vector<Rational> plus(n), minus(n);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = w[i] + h * v[i];
      minus[i] = w[i] - h * v[i];
      if (plus[i] <= 0 || minus[i] <= 0) inside = false;
    }
    if (!inside) continue;
    Rational fp = eval(f, plus);
    Rational fm = eval(f, minus);
    if (fp <= 0 || fm <= 0) continue;
    double hd = h.get_d();
    double second = (std::log(fp.get_d()) + std::log(fm.get_d()) - 2 * log0) / (hd * hd);
    if (first || second > out.worst_second_difference) out.worst_second_difference = second;
    first = false;
    if (fp * fm > f0 * f0 && out.concave) {
      out.concave = false;
      out.failing_step = h;
    }
  }
  return out;
}

}  // namespace lorentz
