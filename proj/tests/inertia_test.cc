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

#include <gtest/gtest.h>

#include "lorentz/inertia.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace lorentz {
namespace {

SymMatrix S(std::vector<std::vector<Rational>> rows) {
  return SymMatrix::from_matrix(Matrix::from_rows(rows));
}

TEST(InertiaTest, SmallExamples) {
  EXPECT_EQ(inertia(S({{1, 0}, {0, 1}})), (Inertia{2, 0, 0}));
  EXPECT_EQ(inertia(S({{0, 1}, {1, 0}})), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(S({{1, 1}, {1, 1}})), (Inertia{1, 0, 1}));
  EXPECT_EQ(inertia(S({{0, 0}, {0, 0}})), (Inertia{0, 0, 2}));
  EXPECT_EQ(inertia(S({{-2}})), (Inertia{0, 1, 0}));
  EXPECT_EQ(inertia(SymMatrix(0)), (Inertia{0, 0, 0}));
}

TEST(InertiaTest, ThetaCubicQuadratics) {
  // d/dw2 of the cubic with theta = 10 and theta = 9.
  EXPECT_EQ(inertia(S({{24, 36}, {36, 60}})).n_plus, 2u);
  EXPECT_EQ(inertia(S({{24, 36}, {36, 54}})), (Inertia{1, 0, 1}));
}

TEST(InertiaTest, RejectsAsymmetric) {
  EXPECT_THROW(SymMatrix::from_matrix(Matrix::from_rows({{1, 2}, {3, 4}})), InputError);
  EXPECT_THROW(SymMatrix::from_matrix(Matrix(2, 3)), InputError);
}

TEST(InertiaTest, CharacteristicPolynomialLowestFirst) {
  // det(x I - A) for A = [[2,1],[1,2]] is x^2 - 4x + 3.
  auto p = characteristic_polynomial(Matrix::from_rows({{2, 1}, {1, 2}}));
  EXPECT_EQ(p, (std::vector<Rational>{3, -4, 1}));
}

TEST(InertiaTest, SignatureHelpers) {
  EXPECT_TRUE(is_lorentzian_signature(S({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_lorentzian_signature(S({{1, 1}, {1, 1}})));
  EXPECT_TRUE(at_most_one_positive(S({{1, 1}, {1, 1}})));
  EXPECT_TRUE(is_psd(S({{1, 1}, {1, 1}})));
  EXPECT_FALSE(is_psd(S({{0, 1}, {1, 0}})));
}

TEST(InertiaTest, PrincipalSubmatrix) {
  SymMatrix m = S({{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  SymMatrix s = principal_submatrix(m, {0, 2});
  EXPECT_EQ(s, S({{1, 3}, {3, 6}}));
}

TEST(InertiaPropertyTest, AgreesWithCongruenceOracle) {
  testing::Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    int n = testing::uniform_int(rng, 1, 6);
    SymMatrix m = testing::random_symmetric(rng, n, 3, 3);
    // Plant zero rows and rank deficiency now and then.
    if (t % 5 == 0) {
      int z = testing::uniform_int(rng, 0, n - 1);
      for (int j = 0; j < n; ++j) m.set(z, j, 0);
    }
    Inertia in = inertia(m);
    EXPECT_EQ(in, testing::congruence_inertia(m)) << "trial " << t;
    EXPECT_EQ(in.size(), static_cast<std::size_t>(n));
  }
}

TEST(InertiaPropertyTest, InvariantUnderCongruence) {
  testing::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    int n = testing::uniform_int(rng, 1, 5);
    SymMatrix m = testing::random_symmetric(rng, n, 4, 2);
    // Unit upper triangular P keeps the signature of P^T M P.
    Matrix p = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) p(i, j) = testing::uniform_int(rng, -2, 2);
    SymMatrix c = SymMatrix::from_matrix(p.transpose() * m.matrix() * p);
    EXPECT_EQ(inertia(m), inertia(c));
  }
}

}  // namespace
}  // namespace lorentz
