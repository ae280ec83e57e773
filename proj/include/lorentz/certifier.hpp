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

// Decision procedures for Lorentzian polynomials.
//
// A homogeneous polynomial f of degree d is Lorentzian iff its coefficients
// are nonnegative, its support is M-convex, and for every a of degree d - 2
// the quadratic form d^a f has at most one positive eigenvalue. The quadratic
// d^a f has Hessian (c_{a+e_i+e_j}(f))_{ij} in normalized coefficients, so no
// derivative is ever materialized.

#ifndef LORENTZ_CERTIFIER_HPP_
#define LORENTZ_CERTIFIER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lorentz/inertia.hpp"
#include "lorentz/mconvex.hpp"
#include "lorentz/poly.hpp"

namespace lorentz {

enum class FailureKind {
  none,
  negative_coefficient,
  nonpositive_coefficient,  // strict mode: a coefficient is zero or negative
  support_not_m_convex,
  inertia_violation,
};

std::string to_string(FailureKind k);

struct InertiaFailure {
  ExponentVector alpha;  // derivative multi-index of the failing quadratic
  SymMatrix hessian;
  Inertia inertia;
};

struct Certificate {
  bool verdict = true;
  bool zero = false;  // f is the zero polynomial
  FailureKind failing_kind = FailureKind::none;
  // Monomial with a bad coefficient, or the derivative index of the failing
  // quadratic.
  std::optional<ExponentVector> failing_alpha;
  std::optional<ExchangeWitness> exchange;
  std::optional<InertiaFailure> inertia;
  // Exhaustive mode only: every failing quadratic, in canonical order.
  std::vector<InertiaFailure> all_inertia_failures;
  // Number of quadratic forms examined.
  std::size_t quadratics_checked = 0;

  explicit operator bool() const { return verdict; }
};

struct CertifyOptions {
  // Examine every quadratic instead of stopping at the first failure.
  bool exhaustive = false;
};

Certificate is_lorentzian(const HomogPoly& f, CertifyOptions opts = {});
Certificate is_strictly_lorentzian(const HomogPoly& f, CertifyOptions opts = {});

// Exact inertia of the Hessian at a strictly positive point.
Inertia hodge_riemann_at(const HomogPoly& f, std::span<const Rational> w);

struct RayleighViolation {
  ExponentVector alpha;
  int i = 0;
  int j = 0;
  std::vector<Rational> point;
  Rational lhs;  // d^a f * d^(a+e_i+e_j) f
  Rational rhs;  // c * d^(a+e_i) f * d^(a+e_j) f
};

// Checks d^a f(w) d^(a+e_i+e_j) f(w) <= c d^(a+e_i) f(w) d^(a+e_j) f(w) for
// every a with |a| <= d - 2 and i <= j at one point. Returns the first
// violation in canonical order.
std::optional<RayleighViolation> rayleigh_check_at(const HomogPoly& f,
                                                   const Rational& c,
                                                   std::span<const Rational> w);

// Seeded search for a c-Rayleigh violation over the nonnegative orthant.
// Trial t zeroes the coordinates in the bit pattern t mod 2^n, so every
// boundary face is visited once trials >= 2^n; the remaining coordinates are
// random positive rationals. Only refutes, never certifies.
std::optional<RayleighViolation> rayleigh_falsify(const HomogPoly& f,
                                                  const Rational& c,
                                                  std::size_t trials,
                                                  std::uint64_t seed);

// Random point with positive rational coordinates, zeroing coordinates in
// `zero_mask`. Numerators and denominators are drawn from [1, 16].
std::vector<Rational> random_orthant_point(int n, std::uint64_t zero_mask,
                                           std::mt19937_64& rng);

struct LogConcavityProbe {
  bool concave = true;
  // Largest second difference of log f seen, divided by h^2.
  double worst_second_difference = 0;
  std::optional<Rational> failing_step;
};

// Midpoint test of log-concavity of t -> f(w + t v) at t = 0 with steps
// h = 1, 1/2, ..., 1/2^(steps-1). A step is skipped when w +- h v leaves the
// open positive orthant. The verdict compares f(w+hv) f(w-hv) with f(w)^2
// exactly; the floating second difference is reported for humans.
LogConcavityProbe log_concavity_probe(const HomogPoly& f,
                                      std::span<const Rational> w,
                                      std::span<const Rational> v, int steps);

}  // namespace lorentz

#endif  // LORENTZ_CERTIFIER_HPP_
