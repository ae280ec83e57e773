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

// Sparse homogeneous polynomials with exact rational coefficients.
//
// Coefficients are stored raw, i.e. f = sum coeff(a) w^a. The normalized
// coefficient c_a = a! * coeff(a) is available through an accessor, so that
// f = sum c_a w^a / a!. In normalized form partial derivatives shift indices:
// c_b(d^a f) = c_{a+b}(f).

#ifndef LORENTZ_POLY_HPP_
#define LORENTZ_POLY_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/inertia.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// A point of the discrete simplex: one nonnegative exponent per variable.
using ExponentVector = std::vector<int>;

int degree(const ExponentVector& a);
Integer exponent_factorial(const ExponentVector& a);  // a! = prod a_i!
bool is_zero_one(const ExponentVector& a);
ExponentVector unit_vector(int n, int i);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
// Componentwise a - b; nullopt if some coordinate would go negative.
std::optional<ExponentVector> checked_sub(const ExponentVector& a,
                                          const ExponentVector& b);
bool dominated_by(const ExponentVector& a, const ExponentVector& b);  // a <= b
int l1_distance(const ExponentVector& a, const ExponentVector& b);
std::string format_exponent(const ExponentVector& a);

// All points of the discrete simplex of degree d in n variables, in
// lexicographic order.
std::vector<ExponentVector> simplex_points(int n, int d);
void for_each_simplex_point(int n, int d,
                            const std::function<void(const ExponentVector&)>& fn);

// Unvalidated polynomial data as read from a file.
struct RawPoly {
  int nvars = 0;
  int degree = 0;
  std::vector<std::pair<ExponentVector, Rational>> terms;
};

// nullopt when every invariant holds, otherwise the first violation.
std::optional<std::string> validate(const RawPoly& raw);

class HomogPoly {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  // The zero polynomial of the given shape.
  HomogPoly(int nvars, int degree);

  static HomogPoly from_raw(const RawPoly& raw);
  static HomogPoly from_terms(int nvars, int degree, const Terms& terms);
  static HomogPoly monomial(const ExponentVector& a, const Rational& c = 1);
  static HomogPoly constant(int nvars, const Rational& c);
  static HomogPoly linear_form(std::span<const Rational> coeffs);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVector& a) const;
  Rational normalized_coefficient(const ExponentVector& a) const;

  // Accumulates c w^a, dropping the term if it cancels.
  void add_term(const ExponentVector& a, const Rational& c);

  RawPoly to_raw() const;
  std::vector<ExponentVector> support() const;

  bool operator==(const HomogPoly& other) const = default;

 private:
  int nvars_;
  int degree_;
  Terms terms_;
};

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator*(const Rational& s, const HomogPoly& p);
HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
HomogPoly pow(const HomogPoly& p, int k);

std::string to_string(const HomogPoly& p);

Rational eval(const HomogPoly& p, std::span<const Rational> w);

HomogPoly derive(const HomogPoly& p, const ExponentVector& a);
HomogPoly derive_var(const HomogPoly& p, int i);

// sum_i a_i d_i p for a nonnegative direction a.
HomogPoly directional_derive(const HomogPoly& p, std::span<const Rational> a);

// p(A v) for an nvars x m matrix A with nonnegative entries.
HomogPoly substitute(const HomogPoly& p, const Matrix& a);

// Same as substitute but without the nonnegativity precondition.
HomogPoly substitute_any(const HomogPoly& p, const Matrix& a);

// Hessian (d_i d_j p)(at). `at` may be omitted for quadratics.
SymMatrix hessian(const HomogPoly& p,
                  std::optional<std::span<const Rational>> at = std::nullopt);

// Hessian of the quadratic d^a p, read off normalized coefficients:
// entry (i,j) is c_{a+e_i+e_j}(p). Requires |a| = degree - 2.
SymMatrix quadratic_hessian(const HomogPoly& p, const ExponentVector& a);

HomogPoly swap_variables(const HomogPoly& p, int i, int j);

// Reindexes p into `nvars` variables, variable i going to position map[i].
HomogPoly embed(const HomogPoly& p, int nvars, const std::vector<int>& map);

bool has_nonnegative_coefficients(const HomogPoly& p);
bool is_multi_affine(const HomogPoly& p);

// Largest exponent of each variable over the support.
std::vector<int> degree_caps(const HomogPoly& p);

}  // namespace lorentz

#endif  // LORENTZ_POLY_HPP_
