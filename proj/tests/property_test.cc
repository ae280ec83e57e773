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

// Randomized checks of algebraic identities and closure properties that cut
// across modules. Every generator is seeded.

#include <gtest/gtest.h>

#include "lorentz/certifier.hpp"
#include "lorentz/io.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/measures.hpp"
#include "lorentz/parallel.hpp"
#include "lorentz/sequence.hpp"
#include "support/generators.hpp"

namespace lorentz {
namespace {

using testing::Rng;
using testing::uniform_int;

HomogPoly random_poly(Rng& rng, int n, int d) {
  HomogPoly p(n, d);
  for (const auto& a : simplex_points(n, d))
    if (uniform_int(rng, 0, 2)) p.add_term(a, testing::random_rational(rng, -5, 5, 3));
  return p;
}

std::vector<Rational> random_point(Rng& rng, int n, int lo = -4) {
  std::vector<Rational> w(n);
  for (auto& x : w) x = testing::random_rational(rng, lo, 4, 3);
  return w;
}

TEST(PolyIdentityTest, EulerFormula) {
  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    int n = uniform_int(rng, 1, 4), d = uniform_int(rng, 1, 4);
    HomogPoly p = random_poly(rng, n, d);
    auto w = random_point(rng, n);
    Rational rhs = 0;
    for (int i = 0; i < n; ++i) rhs += w[i] * eval(derive_var(p, i), w);
    EXPECT_EQ(Rational(d) * eval(p, w), rhs);
  }
}

TEST(PolyIdentityTest, DerivativesCommute) {
  Rng rng(102);
  for (int t = 0; t < 100; ++t) {
    int n = uniform_int(rng, 1, 3);
    ExponentVector a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = uniform_int(rng, 0, 2);
      b[i] = uniform_int(rng, 0, 2);
    }
    // Orders above the degree are rejected, so keep d >= |a + b|.
    HomogPoly p = random_poly(rng, n, degree(a + b) + uniform_int(rng, 0, 2));
    EXPECT_EQ(derive(derive(p, a), b), derive(p, a + b));
    EXPECT_EQ(derive(derive(p, a), b), derive(derive(p, b), a));
  }
}

TEST(PolyIdentityTest, SubstitutionComposes) {
  Rng rng(103);
  for (int t = 0; t < 60; ++t) {
    int n = uniform_int(rng, 1, 3), m = uniform_int(rng, 1, 3), k = uniform_int(rng, 1, 3);
    HomogPoly p = random_poly(rng, n, uniform_int(rng, 0, 3));
    Matrix a = testing::random_nonnegative(rng, n, m);
    Matrix b = testing::random_nonnegative(rng, m, k);
    EXPECT_EQ(substitute(substitute(p, a), b), substitute(p, a * b));
  }
}

TEST(PolyIdentityTest, HessianRelation) {
  Rng rng(104);
  for (int t = 0; t < 60; ++t) {
    int n = uniform_int(rng, 1, 4), d = uniform_int(rng, 2, 4);
    HomogPoly p = random_poly(rng, n, d);
    auto w = random_point(rng, n);
    Matrix lhs = Rational(d - 2) * hessian(p, w).matrix();
    Matrix rhs(n, n);
    for (int i = 0; i < n; ++i) {
      HomogPoly di = derive_var(p, i);
      // Degree-one derivatives have a zero Hessian.
      if (di.degree() >= 2) rhs = rhs + w[i] * hessian(di, w).matrix();
    }
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(InertiaPropertyTest2, InterlacingNeverRaisesPositiveCount) {
  Rng rng(105);
  for (int t = 0; t < 150; ++t) {
    int n = uniform_int(rng, 2, 6);
    SymMatrix m = testing::random_symmetric(rng, n, 4, 3);
    std::vector<std::size_t> keep;
    int drop = uniform_int(rng, 0, n - 1);
    for (int i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    Inertia full = inertia(m), sub = inertia(principal_submatrix(m, keep));
    EXPECT_LE(sub.n_plus, full.n_plus);
    EXPECT_LE(sub.n_minus, full.n_minus);
  }
}

TEST(LorentzianClosureTest, ProductDerivativeSubstitution) {
  Rng rng(106);
  for (int t = 0; t < 60; ++t) {
    HomogPoly f = testing::random_lorentzian(rng, 3, 3);
    ASSERT_TRUE(is_lorentzian(f)) << to_string(f);
    HomogPoly g = testing::random_lorentzian(rng, 3, 2);
    if (g.nvars() == f.nvars()) EXPECT_TRUE(is_lorentzian(f * g));
    std::vector<Rational> a(f.nvars());
    for (auto& x : a) x = uniform_int(rng, 0, 3);
    if (f.degree() > 0) EXPECT_TRUE(is_lorentzian(directional_derive(f, a)));
    Matrix s = testing::random_nonnegative(rng, f.nvars(), uniform_int(rng, 1, 3));
    EXPECT_TRUE(is_lorentzian(substitute(f, s)));
  }
}

TEST(LorentzianClosureTest, HodgeRiemannAndRayleigh) {
  Rng rng(107);
  for (int t = 0; t < 40; ++t) {
    HomogPoly f = testing::random_lorentzian(rng, 3, 4);
    if (f.is_zero() || f.degree() < 2) continue;
    std::vector<Rational> w(f.nvars());
    for (auto& x : w) x = testing::random_rational(rng, 1, 6, 4);
    EXPECT_EQ(hodge_riemann_at(f, w).n_plus, 1u) << to_string(f);
    Rational c = Rational(2) * (1 - Rational(1, f.degree()));
    EXPECT_FALSE(rayleigh_falsify(f, c, 64, 1000 + t)) << to_string(f);
  }
}

TEST(GeneratingPolyPropertyTest, ConvexFunctionsGiveLorentzian) {
  Rng rng(108);
  for (int t = 0; t < 40; ++t) {
    DiscreteFunction nu = testing::random_m_convex(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 3));
    for (Rational q : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      EXPECT_TRUE(is_lorentzian(generating_poly_f(nu, q)));
      EXPECT_TRUE(is_lorentzian(generating_poly_g(nu, q)));
    }
  }
}

TEST(GeneratingPolyPropertyTest, FunctionCheckImpliesDomainCheck) {
  Rng rng(109);
  int passed = 0;
  for (int t = 0; t < 200; ++t) {
    DiscreteFunction nu = testing::random_function(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 3));
    if (is_m_convex_function(nu)) {
      ++passed;
      EXPECT_TRUE(is_m_convex_set(nu.domain()));
    }
  }
  EXPECT_GT(passed, 0);
}

TEST(GeneratingPolyPropertyTest, NonConvexWitnessFailsForSomeQ) {
  DiscreteFunction nu(2, 2);
  nu.set({2, 0}, 0);
  nu.set({1, 1}, 1);
  nu.set({0, 2}, 0);
  bool refuted = false;
  for (int k = 1; k < 10 && !refuted; ++k) refuted = !is_lorentzian(generating_poly_f(nu, make_rational(k, 10)));
  EXPECT_TRUE(refuted);
}

TEST(MatroidPropertyTest2, SupportMatchesValidation) {
  Rng rng(110);
  for (int t = 0; t < 150; ++t) {
    int n = uniform_int(rng, 2, 5), r = uniform_int(rng, 1, n - 1);
    std::vector<Subset> fam;
    HomogPoly f(n, r);
    for (const auto& a : simplex_points(n, r)) {
      if (!is_zero_one(a) || uniform_int(rng, 0, 2) == 0) continue;
      Subset s = 0;
      for (int i = 0; i < n; ++i)
        if (a[i]) s |= Subset{1} << i;
      fam.push_back(s);
      f.add_term(a, 1);
    }
    if (fam.empty()) continue;
    MatroidCheck m = matroid_from_bases(n, fam);
    EXPECT_EQ(static_cast<bool>(m), static_cast<bool>(is_lorentzian(f)));
    if (m) EXPECT_EQ(basis_generating_poly(*m.matroid), f);
  }
}

TEST(MatroidPropertyTest2, IndependentSetCollapseIsMason) {
  for (const auto& [name, m] : testing::catalog()) {
    HomogPoly f = independent_set_poly(m);
    if (m.n() <= 6) EXPECT_TRUE(is_lorentzian(f)) << name;
    auto seq = collapse_to_bivariate(f, 0);
    EXPECT_EQ(is_ultra_log_concave(seq, m.n()), mason_check(m).holds) << name;
    for (Rational q : {Rational(0), Rational(1, 3), Rational(1)}) {
      auto sec = tutte_section(m, q);
      EXPECT_TRUE(is_ultra_log_concave(sec)) << name;
      EXPECT_TRUE(has_no_internal_zeros(sec)) << name;
    }
  }
}

TEST(MeasurePropertyTest2, FieldsKeepRankSizesUlc) {
  Rng rng(111);
  for (const auto& [name, m] : testing::catalog()) {
    if (m.n() > 6) continue;
    auto [mu, nu] = matroid_measures(m);
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> x(m.n());
      for (auto& v : x) v = testing::random_rational(rng, 1, 8, 4);
      Measure tilted = external_field(mu, x);
      DependenceReport r = negative_dependence_report(tilted, 2, 0, 1);
      EXPECT_TRUE(r.ulc) << name;
      EXPECT_TRUE(is_lorentzian_measure(tilted)) << name;
    }
  }
}

TEST(MeasurePropertyTest2, StronglyRayleighImpliesLorentzian) {
  std::vector<Measure> fixtures;
  for (const char* f : {"bernoulli_2", "measure_gap"})
    fixtures.push_back(measure_from_json(read_json_file(testing::data_path(std::string("fixtures/") + f + ".json"))));
  for (const auto& [name, m] : testing::catalog()) {
    if (m.n() > 6) continue;
    auto [mu, nu] = matroid_measures(m);
    fixtures.push_back(mu);
    fixtures.push_back(nu);
  }
  int sr = 0;
  for (const auto& mu : fixtures) {
    DependenceReport r = negative_dependence_report(mu, 2, 100, 9);
    if (!r.strongly_rayleigh_sampled()) continue;
    ++sr;
    EXPECT_TRUE(is_lorentzian_measure(mu));
  }
  EXPECT_GT(sr, 0);
}

TEST(ParallelTest, ResultsIndependentOfWorkerCount) {
  HomogPoly f = HomogPoly::from_terms(2, 3, {{{3, 0}, 2}, {{2, 1}, 12}, {{1, 2}, 18}, {{0, 3}, 50}});
  HomogPoly g = HomogPoly::from_terms(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
  set_jobs(1);
  Certificate a = is_lorentzian(f, {.exhaustive = true});
  auto ra = rayleigh_falsify(g, Rational(3, 2), 200, 4);
  set_jobs(4);
  Certificate b = is_lorentzian(f, {.exhaustive = true});
  auto rb = rayleigh_falsify(g, Rational(3, 2), 200, 4);
  set_jobs(1);
  EXPECT_EQ(certificate_to_json(a).dump(), certificate_to_json(b).dump());
  ASSERT_EQ(ra.has_value(), rb.has_value());
  if (ra) EXPECT_EQ(ra->point, rb->point);
}

}  // namespace
}  // namespace lorentz
