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

#include "lorentz/certifier.hpp"
#include "lorentz/mconvex.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace lorentz {
namespace {

DiscreteFunction F(int n, int d, std::vector<std::pair<ExponentVector, Rational>> vals) {
  DiscreteFunction f(n, d);
  for (auto& [a, v] : vals) f.set(a, v);
  return f;
}

TEST(MConvexSetTest, UniformMatroidBases) {
  PointSet s = PointSet::from_points(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                         {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  EXPECT_TRUE(is_m_convex_set(s));
  EXPECT_TRUE(is_matroid_basis_family(s));
}

TEST(MConvexSetTest, DisjointPairHasWitness) {
  PointSet s = PointSet::from_points(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  SetCheck c = is_m_convex_set(s);
  ASSERT_FALSE(c);
  ASSERT_TRUE(c.witness);
  const auto& w = *c.witness;
  EXPECT_GT(w.alpha[w.i], w.beta[w.i]);
}

TEST(MConvexSetTest, FullSimplexAndSingletonsAreConvex) {
  EXPECT_TRUE(is_m_convex_set(PointSet::full_simplex(3, 3)));
  EXPECT_TRUE(is_m_convex_set(PointSet::from_points(2, {{2, 0}})));
  EXPECT_TRUE(is_m_convex_set(PointSet(2, 2)));
}

TEST(MConvexSetTest, GapInSimplexFails) {
  EXPECT_FALSE(is_m_convex_set(PointSet::from_points(2, {{2, 0}, {0, 2}})));
}

TEST(MConvexSetTest, InputErrors) {
  EXPECT_THROW(PointSet::from_points(2, {{2, 0}, {1, 0}}), InputError);
  EXPECT_THROW(PointSet::from_points(2, {{2, -1}}), InputError);
  EXPECT_THROW(is_matroid_basis_family(PointSet::from_points(2, {{2, 0}})), InputError);
  EXPECT_FALSE(is_matroid_basis_family(PointSet(3, 1)));
}

TEST(MConvexFunctionTest, ExchangeInequality) {
  // Convex in the single free direction.
  EXPECT_TRUE(is_m_convex_function(F(2, 2, {{{2, 0}, 4}, {{1, 1}, 1}, {{0, 2}, 0}})));
  FunctionCheck c = is_m_convex_function(F(2, 2, {{{2, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 0}}));
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failure, FunctionCheck::Failure::local_exchange);
  FunctionCheck d = is_m_convex_function(F(2, 2, {{{2, 0}, 0}, {{0, 2}, 0}}));
  EXPECT_EQ(d.failure, FunctionCheck::Failure::domain);
}

TEST(MConvexFunctionTest, IndicatorOfConvexSetIsConvex) {
  PointSet s = PointSet::full_simplex(3, 2);
  EXPECT_TRUE(is_m_convex_function(DiscreteFunction::indicator(s)));
}

TEST(GeneratingPolyTest, SeparableExample) {
  DiscreteFunction nu = F(2, 2, {{{2, 0}, 4}, {{1, 1}, 1}, {{0, 2}, 0}});
  HomogPoly f = generating_poly_f(nu, Rational(1, 2));
  EXPECT_EQ(f.coefficient({2, 0}), Rational(1, 32));
  EXPECT_EQ(f.coefficient({1, 1}), Rational(1, 2));
  EXPECT_EQ(f.coefficient({0, 2}), Rational(1, 2));
  HomogPoly g = generating_poly_g(nu, Rational(1, 2));
  EXPECT_EQ(g.coefficient({1, 1}), Rational(2) * Rational(2) * Rational(1, 2));
  EXPECT_EQ(g.coefficient({2, 0}), Rational(1, 16));
}

TEST(GeneratingPolyTest, IrrationalPowersAndBadBase) {
  DiscreteFunction nu = F(2, 1, {{{1, 0}, Rational(1, 2)}, {{0, 1}, 0}});
  EXPECT_THROW(generating_poly_f(nu, 2), InputError);
  EXPECT_EQ(generating_poly_f(nu, 4).coefficient({1, 0}), 2);
  EXPECT_THROW(generating_poly_f(nu, 0), InputError);
  EXPECT_THROW(generating_poly_g(nu, -1), InputError);
}

TEST(GeneratingPolyTest, NonConvexWitnessFailsAtHalf) {
  DiscreteFunction nu = F(2, 2, {{{2, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 0}});
  EXPECT_FALSE(is_lorentzian(generating_poly_f(nu, Rational(1, 2))));
  EXPECT_FALSE(is_lorentzian(generating_poly_g(nu, Rational(1, 10))));
}

TEST(PolarizeFnTest, RoundTrip) {
  DiscreteFunction nu = F(2, 2, {{{2, 0}, 4}, {{1, 1}, 1}, {{0, 2}, 0}});
  DiscreteFunction up = polarize_fn(nu);
  EXPECT_EQ(up.nvars(), 4);
  // (1,1) lifts to 2 * 2 zero-one points.
  EXPECT_EQ(up.values().size(), 1u + 4u + 1u);
  EXPECT_EQ(project_fn(up, 2), nu);
  EXPECT_TRUE(is_m_convex_function(up));
  EXPECT_THROW(project_fn(up, 3), InputError);
}

TEST(RegularizeTest, MatchesTransportOracle) {
  testing::Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    int n = testing::uniform_int(rng, 1, 3);
    int d = testing::uniform_int(rng, 1, 3);
    DiscreteFunction nu = testing::random_m_convex(rng, n, d);
    long k = testing::uniform_int(rng, 0, 5);
    EXPECT_EQ(regularize(nu, k), testing::regularize_by_transport(nu, k)) << "trial " << t;
  }
}

TEST(RegularizeTest, FullDomainAndConvexity) {
  testing::Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    int n = testing::uniform_int(rng, 1, 3);
    int d = testing::uniform_int(rng, 1, 3);
    DiscreteFunction nu = testing::random_m_convex(rng, n, d);
    DiscreteFunction r = regularize(nu, testing::uniform_int(rng, 0, 4));
    EXPECT_EQ(r.values().size(), simplex_points(n, d).size());
    EXPECT_TRUE(is_m_convex_function(r));
  }
}

TEST(RegularizeTest, AgreesOnDomainOnceSlopeIsDominated) {
  DiscreteFunction nu = F(2, 2, {{{2, 0}, 0}, {{1, 1}, 10}, {{0, 2}, 20}});
  // With a small k the cheap point (2,0) undercuts nu on its own domain.
  EXPECT_EQ(*regularize(nu, 1).at({1, 1}), 1);
  // Slopes are 10, so k = 10 reproduces nu on dom(nu).
  EXPECT_EQ(regularize(nu, 10), nu);
}

TEST(RegularizeTest, Errors) {
  EXPECT_THROW(regularize(DiscreteFunction(2, 2), 1), InputError);
  EXPECT_THROW(regularize(F(2, 2, {{{2, 0}, 0}}), -1), InputError);
  EXPECT_THROW(regularize(F(2, 2, {{{2, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 0}}), 1), InputError);
}

TEST(MConvexPropertyTest, GeneratedFunctionsAreConvex) {
  testing::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    int n = testing::uniform_int(rng, 1, 4);
    int d = testing::uniform_int(rng, 0, 4);
    DiscreteFunction nu = testing::random_m_convex(rng, n, d);
    ASSERT_TRUE(is_m_convex_function(nu)) << "trial " << t;
    EXPECT_TRUE(is_m_convex_set(nu.domain()));
  }
}

TEST(MConvexPropertyTest, BasisFamiliesMatchExchangeOracle) {
  testing::Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    int n = testing::uniform_int(rng, 2, 5);
    int r = testing::uniform_int(rng, 1, n - 1);
    std::vector<std::vector<int>> sets;
    PointSet s(n, r);
    for (const auto& p : simplex_points(n, r)) {
      if (!is_zero_one(p) || testing::uniform_int(rng, 0, 2) == 0) continue;
      std::vector<int> b;
      for (int i = 0; i < n; ++i)
        if (p[i]) b.push_back(i);
      sets.push_back(b);
      s.insert(p);
    }
    if (sets.empty()) continue;
    EXPECT_EQ(static_cast<bool>(is_matroid_basis_family(s)),
              testing::basis_exchange_oracle(n, sets));
  }
}

}  // namespace
}  // namespace lorentz
