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

// M-convex sets and functions on the discrete simplex, and the Lorentzian
// generating polynomials built from them.

#ifndef LORENTZ_MCONVEX_HPP_
#define LORENTZ_MCONVEX_HPP_

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lorentz/poly.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// A finite subset of the discrete simplex of degree `degree`.
class PointSet {
 public:
  PointSet(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  // Throws InputError on wrong length, negative entries or mixed degrees.
  static PointSet from_points(int nvars, const std::vector<ExponentVector>& pts);
  static PointSet from_points(int nvars, int degree,
                              const std::vector<ExponentVector>& pts);
  static PointSet full_simplex(int nvars, int degree);

  void insert(const ExponentVector& a);
  bool contains(const ExponentVector& a) const { return points_.count(a) != 0; }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::set<ExponentVector>& points() const { return points_; }

 private:
  int nvars_;
  int degree_;
  std::set<ExponentVector> points_;
};

// alpha, beta in J and i with alpha_i > beta_i such that no j with
// alpha_j < beta_j has alpha - e_i + e_j in J.
struct ExchangeWitness {
  ExponentVector alpha;
  ExponentVector beta;
  int i = 0;
};

struct SetCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
  explicit operator bool() const { return ok; }
};

SetCheck is_m_convex_set(const PointSet& j);

// Throws InputError on a point outside {0,1}^n. The empty family is rejected
// without a witness.
SetCheck is_matroid_basis_family(const PointSet& b);

// A function on the discrete simplex with values in Q and infinity. Points
// without a stored value are at infinity.
class DiscreteFunction {
 public:
  DiscreteFunction(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static DiscreteFunction indicator(const PointSet& j);

  void set(const ExponentVector& a, const Rational& v);
  std::optional<Rational> at(const ExponentVector& a) const;

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<ExponentVector, Rational>& values() const { return values_; }
  bool is_infinite() const { return values_.empty(); }
  PointSet domain() const;
  bool is_integer_valued() const;

  bool operator==(const DiscreteFunction& other) const = default;

 private:
  int nvars_;
  int degree_;
  std::map<ExponentVector, Rational> values_;
};

struct FunctionCheck {
  enum class Failure { none, domain, local_exchange };
  bool ok = true;
  Failure failure = Failure::none;
  // domain: the exchange witness of the effective domain.
  // local_exchange: alpha, beta at l1 distance 4 with no valid (i, j).
  std::optional<ExchangeWitness> witness;
  explicit operator bool() const { return ok; }
};

FunctionCheck is_m_convex_function(const DiscreteFunction& nu);

// sum over dom(nu) of q^nu(a) w^a / a!. Throws InputError when q <= 0 or
// some q^nu(a) is irrational; supply q = s^m with m the common denominator
// of the values to stay exact.
HomogPoly generating_poly_f(const DiscreteFunction& nu, const Rational& q);

// sum over dom(nu) of prod_i C(d, a_i) q^nu(a) w^a.
HomogPoly generating_poly_g(const DiscreteFunction& nu, const Rational& q);

// Splits each variable i into d copies (i, 0..d-1), laid out consecutively as
// index i * d + j, and restricts to zero-one points.
DiscreteFunction polarize_fn(const DiscreteFunction& nu);

// Aggregates groups of d consecutive variables back to one, taking the
// minimum over each fiber. mu must live in nvars * d variables.
DiscreteFunction project_fn(const DiscreteFunction& mu, int nvars);

// M-convex function finite on the whole simplex, obtained by splitting every
// variable i into n copies e_ij, charging k per unit off the diagonal and
// aggregating by the second index. Equals
//   nu_k(a) = min over g in dom(nu) of nu(g) + k |g - a|_1 / 2.
// It agrees with nu on dom(nu) once k exceeds the steepest slope of nu.
DiscreteFunction regularize(const DiscreteFunction& nu, long k);

}  // namespace lorentz

#endif  // LORENTZ_MCONVEX_HPP_
