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

// Seeded random generators for the property and acceptance tests. Each
// generator is sound by construction; none consults the code under test.

#ifndef LORENTZ_TESTS_GENERATORS_HPP_
#define LORENTZ_TESTS_GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "lorentz/matroid.hpp"
#include "lorentz/mconvex.hpp"
#include "lorentz/operators.hpp"
#include "lorentz/poly.hpp"

namespace lorentz::testing {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
// num/den with num in [lo, hi] and den in [1, max_den].
Rational random_rational(Rng& rng, int lo, int hi, int max_den);

// Product of d linear forms with coefficients in {0..3}; each form has at
// least one positive coefficient.
HomogPoly random_linear_product(Rng& rng, int n, int d);

// Separable convex integer function restricted to a random box, on the
// degree-d simplex. Always has nonempty domain.
DiscreteFunction random_separable_convex(Rng& rng, int n, int d);

// Infimal convolution of two separable convex functions of degrees summing
// to d. M-convex, integer valued.
DiscreteFunction random_m_convex(Rng& rng, int n, int d);

// (nu1 box nu2)(a) = min over b + c = a of nu1(b) + nu2(c).
DiscreteFunction infimal_convolution(const DiscreteFunction& a, const DiscreteFunction& b);

// Integer values on a random subset of the simplex, no structure.
DiscreteFunction random_function(Rng& rng, int n, int d);

// Lorentzian by construction: a linear product, a matroid basis polynomial
// or generating_poly_f of a random M-convex function at q in {1, 1/2, 1/10}.
HomogPoly random_lorentzian(Rng& rng, int max_n, int max_d);

// A = sI - B with B >= 0 having entries in [0, max] and s the largest row
// sum of B.
Matrix random_m_matrix(Rng& rng, int n, int max = 4);

// Entries num/den with |num| <= max_num, den <= max_den.
SymMatrix random_symmetric(Rng& rng, int n, int max_num, int max_den);

// Convex combination of random partial permutation matrices.
Matrix random_doubly_substochastic(Rng& rng, int n);

Matrix random_nonnegative(Rng& rng, std::size_t rows, std::size_t cols, int max = 3);

// Table whose image of w^a is the product of w^a with a fixed nonnegative
// form g. Its symbol is g times prod (w_i + u_i)^kappa_i.
OperatorTable multiplication_table(const std::vector<int>& kappa, const HomogPoly& g);

// Catalog matroids shipped in data/matroids.
struct NamedMatroid {
  std::string name;
  Matroid matroid;
};
std::vector<NamedMatroid> catalog();

std::string data_path(const std::string& relative);

}  // namespace lorentz::testing

#endif  // LORENTZ_TESTS_GENERATORS_HPP_
