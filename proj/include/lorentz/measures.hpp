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

// Probability measures on {0,1}^n and negative dependence.

#ifndef LORENTZ_MEASURES_HPP_
#define LORENTZ_MEASURES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lorentz/certifier.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/poly.hpp"

namespace lorentz {

class Measure {
 public:
  // Weights must be nonnegative with positive total. Without `normalize` they
  // must already sum to one. Zero weights are dropped.
  static Measure from_weights(int n, const std::map<Subset, Rational>& weights,
                              bool normalize = false);

  int n() const { return n_; }
  const std::map<Subset, Rational>& weights() const { return weights_; }
  Rational at(Subset s) const;

  bool operator==(const Measure& other) const = default;

 private:
  int n_ = 0;
  std::map<Subset, Rational> weights_;
};

// sum over S of mu(S) w^S w_0^(n - |S|), w_0 first.
HomogPoly partition_homogenized(const Measure& mu);

// Z_mu(w) = sum mu(S) w^S at a point of length n.
Rational partition_value(const Measure& mu, std::span<const Rational> w);

Certificate is_lorentzian_measure(const Measure& mu, CertifyOptions opts = {});

// mu(S) x^S / Z_mu(x). Every x_i > 0.
Measure external_field(const Measure& mu, std::span<const Rational> x);

// (1 - theta) mu(S) + theta mu(tau S), tau swapping i and j.
Measure exclusion_evolution(const Measure& mu, int i, int j, const Rational& theta);

// Uniform measures on the independent sets and on the bases.
std::pair<Measure, Measure> matroid_measures(const Matroid& m);

// Pr(i in S).
std::vector<Rational> marginals(const Measure& mu);
// Pr(i, j in S).
Rational joint_marginal(const Measure& mu, int i, int j);

struct PairViolation {
  int i = 0;
  int j = 0;
  Rational joint;
  Rational product;  // Pr(i) Pr(j), times the constant where one applies
};

struct MeasureRayleighViolation {
  int i = 0;
  int j = 0;
  std::vector<Rational> point;
  Rational lhs;  // Z d_i d_j Z
  Rational rhs;  // c d_i Z d_j Z
};

// Z d_i d_j Z <= c d_i Z d_j Z for all i < j at w.
std::optional<MeasureRayleighViolation> measure_rayleigh_at(const Measure& mu,
                                                            const Rational& c,
                                                            std::span<const Rational> w);

struct DependenceReport {
  std::optional<PairViolation> pnc_failure;        // exact
  std::vector<Rational> rank_sizes;                // mu(|S| = k)
  bool ulc = true;                                 // exact
  std::optional<PairViolation> pairwise_failure;   // Pr(i,j) <= 2 Pr(i) Pr(j), exact
  std::optional<MeasureRayleighViolation> rayleigh_failure;  // sampled, positive orthant
  std::optional<MeasureRayleighViolation> strongly_rayleigh_failure;  // sampled, signed
  std::size_t trials = 0;

  bool pnc() const { return !pnc_failure; }
  bool pairwise_bound() const { return !pairwise_failure; }
  bool rayleigh_sampled() const { return !rayleigh_failure; }
  bool strongly_rayleigh_sampled() const { return !strongly_rayleigh_failure; }
};

DependenceReport negative_dependence_report(const Measure& mu, const Rational& c,
                                            std::size_t trials, std::uint64_t seed);

}  // namespace lorentz

#endif  // LORENTZ_MEASURES_HPP_
