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

// Linear operators on polynomials that preserve the Lorentzian property, and
// the symbol test for operators given by a table of monomial images.

#ifndef LORENTZ_OPERATORS_HPP_
#define LORENTZ_OPERATORS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/poly.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// Result of polarization. Variable i of the source becomes the block
// [offset[i], offset[i] + kappa[i]) of the lift.
struct Polarization {
  HomogPoly poly;
  std::vector<int> kappa;
  std::vector<int> offset;
};

// w^a -> prod_i e_{a_i}(w_i1, ..., w_i,kappa_i) / C(kappa, a).
// Throws InputError when some exponent exceeds its cap.
Polarization polarize(const HomogPoly& f, const std::vector<int>& kappa);

// Substitutes w_ij <- w_i. g must be multi-affine in sum(kappa) variables.
HomogPoly project(const HomogPoly& g, const std::vector<int>& kappa);

// Divides the coefficient of w^a by a!.
HomogPoly normalize(const HomogPoly& f);

// Keeps the terms with zero-one exponents.
HomogPoly multi_affine_part(const HomogPoly& f);

struct CoefficientPower {
  HomogPoly poly;
  // Set when some power was irrational and had to be rounded.
  bool numeric = false;
};

// Replaces every normalized coefficient c_a by c_a^p, 0 <= p <= 1. Powers
// are exact when rational. Otherwise, if `allow_numeric`, they are computed
// with MPFR at kNumericPrecisionBits and converted exactly to the dyadic
// rational MPFR returns (relative error below 2^-127); if not, InputError.
inline constexpr int kNumericPrecisionBits = 128;
CoefficientPower coefficient_power(const HomogPoly& f, const Rational& p,
                                   bool allow_numeric = true);

// (1 - theta) f + theta f(w with w_i, w_j swapped). f multi-affine, i != j.
HomogPoly exclusion_step(const HomogPoly& f, int i, int j, const Rational& theta);

// prod_{i < n} (1 + theta w_i d_n)^d f with d = deg f and n the last
// variable. theta > 0.
HomogPoly nuij_transform(const HomogPoly& f, const Rational& theta);

// A linear map R_kappa[w_1..w_n] -> R[v_1..v_m], homogeneous of degree ell,
// given by the images of the monomials w^a with a <= kappa. Missing images
// are zero.
struct OperatorTable {
  std::vector<int> kappa;
  int ell = 0;
  int m = 0;
  std::map<ExponentVector, HomogPoly> images;

  int n() const { return static_cast<int>(kappa.size()); }
  // Image of w^a; zero when absent. Throws when a is not below kappa.
  HomogPoly image(const ExponentVector& a) const;
};

// nullopt when the table is consistent, otherwise the first problem.
std::optional<std::string> validate(const OperatorTable& t);

// sum_{a <= kappa} C(kappa, a) T(w^a) u^(kappa - a), in m + n variables
// ordered (v_1..v_m, u_1..u_n). Degree |kappa| + ell.
HomogPoly symbol(const OperatorTable& t);

// Linear extension of the table. f must have n variables and respect kappa.
HomogPoly apply_operator(const OperatorTable& t, const HomogPoly& f);

OperatorTable identity_table(const std::vector<int>& kappa);
OperatorTable derivative_table(const std::vector<int>& kappa, int i);
OperatorTable normalization_table(const std::vector<int>& kappa);

// Every a with 0 <= a <= kappa, in lexicographic order.
std::vector<ExponentVector> box_points(const std::vector<int>& kappa);

}  // namespace lorentz

#endif  // LORENTZ_OPERATORS_HPP_
