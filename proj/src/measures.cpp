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

#include "lorentz/measures.hpp"

#include <random>

#include "lorentz/parallel.hpp"
#include "lorentz/sequence.hpp"

namespace lorentz {

namespace {

int popcount(Subset s) { return __builtin_popcountll(s); }

Subset swap_bits(Subset s, int i, int j) {
  const Subset bi = (s >> i) & 1;
  const Subset bj = (s >> j) & 1;
  if (bi == bj) return s;
  return s ^ ((Subset{1} << i) | (Subset{1} << j));
}

void check_point(const Measure& mu, std::span<const Rational> w) {
  if (w.size() != static_cast<std::size_t>(mu.n()))
    throw InputError("point has " + std::to_string(w.size()) + " coordinates, expected " +
                     std::to_string(mu.n()));
}

// prod over elements of s outside `skip` of w.
Rational monomial_value(Subset s, Subset skip, std::span<const Rational> w) {
  Rational v = 1;
  for (int e : subset_elements(s & ~skip)) v *= w[e];
  return v;
}

}  // namespace

Measure Measure::from_weights(int n, const std::map<Subset, Rational>& weights,
                              bool normalize) {
  if (n < 0 || n > kMaxGroundSet) throw InputError("ground set size out of range");
  Measure mu;
  mu.n_ = n;
  Rational total = 0;
  for (const auto& [s, w] : weights) {
    if (n < 64 && (s >> n) != 0) throw InputError("atom outside the ground set");
    if (w < 0) throw InputError("negative weight");
    if (w == 0) continue;
    mu.weights_[s] = w;
    total += w;
  }
  if (total == 0) throw InputError("weights have zero total");
  if (total != 1) {
    if (!normalize)
      throw InputError("weights sum to " + total.get_str() + ", not 1; pass the normalize flag");
    for (auto& kv : mu.weights_) kv.second /= total;
  }
  return mu;
}

Rational Measure::at(Subset s) const {
  auto it = weights_.find(s);
  return it == weights_.end() ? Rational(0) : it->second;
}

HomogPoly partition_homogenized(const Measure& mu) {
  const int n = mu.n();
  HomogPoly f(n + 1, n);
  for (const auto& [s, w] : mu.weights()) {
    ExponentVector e(static_cast<std::size_t>(n) + 1, 0);
    for (int i : subset_elements(s)) e[i + 1] = 1;
    e[0] = n - popcount(s);
    f.add_term(e, w);
  }
  return f;
}

Rational partition_value(const Measure& mu, std::span<const Rational> w) {
  check_point(mu, w);
  Rational z = 0;
  for (const auto& [s, p] : mu.weights()) z += p * monomial_value(s, 0, w);
  return z;
}

Certificate is_lorentzian_measure(const Measure& mu, CertifyOptions opts) {
  return is_lorentzian(partition_homogenized(mu), opts);
}

Measure external_field(const Measure& mu, std::span<const Rational> x) {
  check_point(mu, x);
  for (const auto& v : x)
    if (v <= 0) throw InputError("external field must be positive");
  std::map<Subset, Rational> w;
  for (const auto& [s, p] : mu.weights()) w[s] = p * monomial_value(s, 0, x);
  return Measure::from_weights(mu.n(), w, true);
}

Measure exclusion_evolution(const Measure& mu, int i, int j, const Rational& theta) {
  if (i == j) throw InputError("exclusion needs two distinct elements");
  if (i < 0 || j < 0 || i >= mu.n() || j >= mu.n()) throw InputError("element out of range");
  if (theta < 0 || theta > 1) throw InputError("theta must lie in [0, 1]");
  std::map<Subset, Rational> w;
  for (const auto& [s, p] : mu.weights()) {
    w[s] += (Rational(1) - theta) * p;
    w[swap_bits(s, i, j)] += theta * p;
  }
  return Measure::from_weights(mu.n(), w);
}

std::pair<Measure, Measure> matroid_measures(const Matroid& m) {
  std::map<Subset, Rational> indep, bases;
  for (Subset b : m.bases()) {
    bases[b] = 1;
    Subset s = b;
    while (true) {
      indep[s] = 1;
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  return {Measure::from_weights(m.n(), indep, true), Measure::from_weights(m.n(), bases, true)};
}

std::vector<Rational> marginals(const Measure& mu) {
  std::vector<Rational> p(static_cast<std::size_t>(mu.n()), 0);
  for (const auto& [s, w] : mu.weights())
    for (int i : subset_elements(s)) p[i] += w;
  return p;
}

Rational joint_marginal(const Measure& mu, int i, int j) {
  const Subset both = (Subset{1} << i) | (Subset{1} << j);
  Rational p = 0;
  for (const auto& [s, w] : mu.weights())
    if ((s & both) == both) p += w;
  return p;
}

std::optional<MeasureRayleighViolation> measure_rayleigh_at(const Measure& mu,
                                                            const Rational& c,
                                                            std::span<const Rational> w) {
  check_point(mu, w);
  const int n = mu.n();
  const Rational z = partition_value(mu, w);
  std::vector<Rational> d1(static_cast<std::size_t>(n), 0);
  for (const auto& [s, p] : mu.weights())
    for (int i : subset_elements(s)) d1[i] += p * monomial_value(s, Subset{1} << i, w);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Subset both = (Subset{1} << i) | (Subset{1} << j);
      Rational d2 = 0;
      for (const auto& [s, p] : mu.weights())
        if ((s & both) == both) d2 += p * monomial_value(s, both, w);
      Rational lhs = z * d2;
      Rational rhs = c * d1[i] * d1[j];
      if (lhs > rhs) return MeasureRayleighViolation{i, j, {w.begin(), w.end()}, lhs, rhs};
    }
  return std::nullopt;
}

namespace {

std::optional<MeasureRayleighViolation> sample_rayleigh(const Measure& mu, const Rational& c,
                                                        std::size_t trials, std::uint64_t seed,
                                                        bool signed_points) {
  const int n = mu.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 16);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Rational>> points(trials);
  for (auto& w : points) {
    w.resize(static_cast<std::size_t>(n));
    for (auto& x : w) {
      int num = dist(rng);
      int den = dist(rng);
      x = Rational(num, den);
      x.canonicalize();
      if (signed_points && coin(rng)) x = -x;
    }
  }
  std::vector<std::optional<MeasureRayleighViolation>> found(trials);
  auto first = find_first(trials, [&](std::size_t t) {
    found[t] = measure_rayleigh_at(mu, c, points[t]);
    return found[t].has_value();
  });
  if (!first) return std::nullopt;
  return found[*first];
}

}  // namespace

DependenceReport negative_dependence_report(const Measure& mu, const Rational& c,
                                            std::size_t trials, std::uint64_t seed) {
  if (c <= 0) throw InputError("Rayleigh constant must be positive");
  DependenceReport rep;
  rep.trials = trials;
  const int n = mu.n();
  const std::vector<Rational> p = marginals(mu);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational joint = joint_marginal(mu, i, j);
      Rational prod = p[i] * p[j];
      if (!rep.pnc_failure && joint > prod) rep.pnc_failure = PairViolation{i, j, joint, prod};
      if (!rep.pairwise_failure && joint > 2 * prod)
        rep.pairwise_failure = PairViolation{i, j, joint, 2 * prod};
    }
  rep.rank_sizes.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [s, w] : mu.weights()) rep.rank_sizes[popcount(s)] += w;
  rep.ulc = is_ultra_log_concave(rep.rank_sizes, n);
  rep.rayleigh_failure = sample_rayleigh(mu, c, trials, seed, false);
  rep.strongly_rayleigh_failure = sample_rayleigh(mu, 1, trials, seed ^ 0x9e3779b97f4a7c15ULL, true);
  return rep;
}

}  // namespace lorentz
