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

#include "lorentz/io.hpp"
#include "lorentz/measures.hpp"
#include "support/generators.hpp"

namespace lorentz {
namespace {

Measure M(int n, std::map<Subset, Rational> w, bool norm = false) {
  return Measure::from_weights(n, w, norm);
}

Matroid named_k4() {
  return cycle_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST(MeasureTest, Construction) {
  EXPECT_THROW(M(2, {{0, Rational(1, 2)}}), InputError);
  EXPECT_THROW(M(2, {{0, -1}, {1, 2}}), InputError);
  EXPECT_THROW(M(1, {{0b10, 1}}), InputError);
  EXPECT_THROW(M(2, {{0, 0}}, true), InputError);
  Measure m = M(2, {{0, 1}, {1, 3}, {2, 0}}, true);
  EXPECT_EQ(m.weights().size(), 2u);
  EXPECT_EQ(m.at(1), Rational(3, 4));
  EXPECT_EQ(m.at(3), 0);
}

TEST(MeasureTest, PartitionFunction) {
  EXPECT_EQ(partition_homogenized(M(2, {{0, 1}})), HomogPoly::from_terms(3, 2, {{{2, 0, 0}, 1}}));
  EXPECT_EQ(partition_homogenized(M(1, {{0, Rational(1, 2)}, {1, Rational(1, 2)}})),
            HomogPoly::from_terms(2, 1, {{{1, 0}, Rational(1, 2)}, {{0, 1}, Rational(1, 2)}}));
  auto [mu, nu] = matroid_measures(uniform_matroid(1, 2));
  Rational third(1, 3);
  EXPECT_EQ(partition_homogenized(mu),
            HomogPoly::from_terms(3, 2, {{{2, 0, 0}, third}, {{1, 1, 0}, third}, {{1, 0, 1}, third}}));
  EXPECT_EQ(partition_value(mu, std::vector<Rational>{2, 3}), Rational(2));
}

TEST(MeasureTest, LorentzianMeasures) {
  auto [mu, nu] = matroid_measures(uniform_matroid(2, 4));
  EXPECT_TRUE(is_lorentzian_measure(mu));
  EXPECT_TRUE(is_lorentzian_measure(nu));
  Measure bern = measure_from_json(read_json_file(testing::data_path("fixtures/bernoulli_2.json")));
  EXPECT_TRUE(is_lorentzian_measure(bern));
  Measure gap = measure_from_json(read_json_file(testing::data_path("fixtures/measure_gap.json")));
  Certificate c = is_lorentzian_measure(gap);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failing_kind, FailureKind::support_not_m_convex);
}

TEST(MeasureTest, ExternalField) {
  auto [mu, nu] = matroid_measures(uniform_matroid(2, 4));
  EXPECT_EQ(external_field(mu, std::vector<Rational>{1, 1, 1, 1}), mu);
  Measure point = M(3, {{0b101, 1}});
  EXPECT_EQ(external_field(point, std::vector<Rational>{7, 2, Rational(1, 3)}), point);
  Measure u = M(1, {{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  EXPECT_EQ(external_field(u, std::vector<Rational>{3}), M(1, {{0, Rational(1, 4)}, {1, Rational(3, 4)}}));
  EXPECT_THROW(external_field(u, std::vector<Rational>{0}), InputError);
  EXPECT_THROW(external_field(u, std::vector<Rational>{1, 1}), InputError);
}

TEST(MeasureTest, ExclusionEvolution) {
  Measure mu = M(3, {{0b001, Rational(1, 3)}, {0b011, Rational(2, 3)}});
  EXPECT_EQ(exclusion_evolution(mu, 0, 2, 0), mu);
  EXPECT_EQ(exclusion_evolution(mu, 0, 2, 1), M(3, {{0b100, Rational(1, 3)}, {0b110, Rational(2, 3)}}));
  auto [m, nu] = matroid_measures(named_k4());
  EXPECT_TRUE(is_lorentzian_measure(exclusion_evolution(m, 0, 5, Rational(1, 2))));
  EXPECT_THROW(exclusion_evolution(mu, 1, 1, 0), InputError);
}

TEST(MeasureTest, MatroidMeasures) {
  auto [mu, nu] = matroid_measures(uniform_matroid(1, 2));
  EXPECT_EQ(mu, M(2, {{0, Rational(1, 3)}, {1, Rational(1, 3)}, {2, Rational(1, 3)}}));
  EXPECT_EQ(nu, M(2, {{1, Rational(1, 2)}, {2, Rational(1, 2)}}));
  auto [f2, fn] = matroid_measures(free_matroid(2));
  for (Subset s = 0; s < 4; ++s) EXPECT_EQ(f2.at(s), Rational(1, 4));
  auto [k4, k4nu] = matroid_measures(named_k4());
  EXPECT_EQ(k4.weights().size(), 38u);
  for (const auto& [s, w] : k4.weights()) EXPECT_EQ(w, Rational(1, 38));
}

TEST(MeasureTest, Marginals) {
  Measure bern = M(2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, true);
  EXPECT_EQ(marginals(bern), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(joint_marginal(bern, 0, 1), Rational(1, 4));
}

TEST(MeasureTest, DependenceReport) {
  Measure bern = M(2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, true);
  DependenceReport r = negative_dependence_report(bern, 2, 200, 5);
  EXPECT_TRUE(r.pnc());
  EXPECT_TRUE(r.ulc);
  EXPECT_TRUE(r.pairwise_bound());
  EXPECT_TRUE(r.rayleigh_sampled());
  EXPECT_TRUE(r.strongly_rayleigh_sampled());
  auto [mu, nu] = matroid_measures(named_k4());
  DependenceReport k4 = negative_dependence_report(mu, 2, 200, 5);
  EXPECT_TRUE(k4.pairwise_bound());
  EXPECT_TRUE(k4.rayleigh_sampled());
  // Positively correlated pair: Pr(i) = 1/4 but Pr(i, j) = 1/4.
  Measure gap = M(2, {{0, 3}, {3, 1}}, true);
  DependenceReport g = negative_dependence_report(gap, 2, 50, 5);
  EXPECT_FALSE(g.pnc());
  EXPECT_FALSE(g.pairwise_bound());
  EXPECT_FALSE(g.ulc);
}

TEST(MeasureTest, RayleighAtPoint) {
  Measure gap = M(2, {{0, 3}, {3, 1}}, true);
  auto v = measure_rayleigh_at(gap, 2, std::vector<Rational>{1, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->i, 0);
  EXPECT_EQ(v->j, 1);
  EXPECT_GT(v->lhs, v->rhs);
}

TEST(MeasurePropertyTest, CatalogClosures) {
  testing::Rng rng(61);
  for (const auto& [name, m] : testing::catalog()) {
    auto [mu, nu] = matroid_measures(m);
    ASSERT_TRUE(is_lorentzian_measure(mu)) << name;
    ASSERT_TRUE(is_lorentzian_measure(nu)) << name;
    if (m.n() > 6) continue;
    std::vector<Rational> x(m.n());
    for (auto& v : x) v = testing::random_rational(rng, 1, 6, 3);
    EXPECT_TRUE(is_lorentzian_measure(external_field(mu, x))) << name;
    if (m.n() >= 2)
      for (Rational theta : {Rational(1, 4), Rational(1, 2)})
        EXPECT_TRUE(is_lorentzian_measure(exclusion_evolution(mu, 0, m.n() - 1, theta))) << name;
  }
}

}  // namespace
}  // namespace lorentz
