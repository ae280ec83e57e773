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

#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lorentz::testing {

std::vector<double> float_eigenvalues(const SymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

Inertia congruence_inertia(const SymMatrix& sm) {
  const std::size_t n = sm.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = sm(i, j);
  Inertia in;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a live index with nonzero diagonal.
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a[i][i] != 0) p = i;
    if (p == n) {
      // All live diagonals vanish; use e_i + e_j when a_ij != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // the rest is zero
      // Row/column pi += row/column pj.
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      p = pi;
    }
    done[p] = true;
    if (a[p][p] > 0) ++in.n_plus;
    else ++in.n_minus;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rational f = a[i][p] / a[p][p];
      // A <- E A E^T with E = I - f e_i e_p^T.
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      a[p][i] = 0;
      a[i][p] = 0;
    }
  }
  in.n_zero = n - in.n_plus - in.n_minus;
  return in;
}

bool bivariate_lorentzian_oracle(const std::vector<Rational>& a) {
  const long d = static_cast<long>(a.size()) - 1;
  for (const auto& x : a)
    if (x < 0) return false;
  long first = -1, last = -1;
  for (long k = 0; k <= d; ++k)
    if (a[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  for (long k = first; first >= 0 && k <= last; ++k)
    if (a[k] == 0) return false;
  // b_k = a_k / C(d,k), compare b_k^2 with b_{k-1} b_{k+1}.
  auto choose = [](long n, long k) {
    Integer r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (long k = 1; k < d; ++k) {
    Rational b = a[k] / Rational(choose(d, k));
    Rational bl = a[k - 1] / Rational(choose(d, k - 1));
    Rational br = a[k + 1] / Rational(choose(d, k + 1));
    if (b * b < bl * br) return false;
  }
  return true;
}

DiscreteFunction regularize_by_transport(const DiscreteFunction& nu, long k) {
  const int n = nu.nvars();
  const int d = nu.degree();
  std::map<ExponentVector, Rational> best;
  for (const auto& [g, v] : nu.values()) {
    // Fill row i of X with entries summing to g_i.
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int, long)> rec = [&](int row, int c, int left, long off) {
      if (row == n) {
        Rational cost = v + Rational(k * off);
        auto [it, fresh] = best.emplace(col, cost);
        if (!fresh && cost < it->second) it->second = cost;
        return;
      }
      if (c == n - 1) {
        col[c] += left;
        rec(row + 1, 0, row + 1 < n ? g[row + 1] : 0, off + (c == row ? 0 : left));
        col[c] -= left;
        return;
      }
      for (int x = 0; x <= left; ++x) {
        col[c] += x;
        rec(row, c + 1, left - x, off + (c == row ? 0 : x));
        col[c] -= x;
      }
    };
    rec(0, 0, g[0], 0);
  }
  DiscreteFunction out(n, d);
  for (const auto& [a, v] : best) out.set(a, v);
  return out;
}

namespace {

// Rank of a subset given by its sorted elements, over explicit bases.
int set_rank(const std::vector<Subset>& bases, Subset a) {
  int best = 0;
  for (Subset b : bases) best = std::max(best, __builtin_popcountll(a & b));
  return best;
}

// Tutte value of the minor on `ground` with the rank function r(A) =
// rk(A | contracted) - rk(contracted).
Rational tutte_minor(const std::vector<Subset>& bases, Subset ground, Subset contracted,
                     const Rational& x, const Rational& y) {
  if (ground == 0) return 1;
  const Subset e = ground & (~ground + 1);
  const Subset rest = ground ^ e;
  auto rk = [&](Subset a) { return set_rank(bases, a | contracted) - set_rank(bases, contracted); };
  const int r_e = rk(e);
  // Loop: rank 0. Coloop: deleting drops the rank of the minor.
  if (r_e == 0) return y * tutte_minor(bases, rest, contracted, x, y);
  if (rk(ground) > rk(rest)) return x * tutte_minor(bases, rest, contracted | e, x, y);
  return tutte_minor(bases, rest, contracted, x, y) + tutte_minor(bases, rest, contracted | e, x, y);
}

}  // namespace

Rational tutte_by_deletion_contraction(const Matroid& m, const Rational& x, const Rational& y) {
  const Subset ground = m.n() == 0 ? 0 : ((Subset{1} << m.n()) - 1);
  return tutte_minor(m.bases(), ground, 0, x, y);
}

std::vector<long> forest_counts(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<long> counts(static_cast<std::size_t>(m) + 1, 0);
  for (unsigned s = 0; s < (1u << m); ++s) {
    // Adjacency lists, then look for a cycle by DFS with parent edges.
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(vertices));
    int size = 0;
    for (int e = 0; e < m; ++e)
      if (s & (1u << e)) {
        adj[edges[e].first].push_back({edges[e].second, e});
        adj[edges[e].second].push_back({edges[e].first, e});
        ++size;
      }
    std::vector<int> seen(static_cast<std::size_t>(vertices), 0);
    bool cycle = false;
    std::function<void(int, int)> dfs = [&](int v, int via) {
      seen[v] = 1;
      for (auto [u, e] : adj[v]) {
        if (e == via || cycle) continue;
        if (seen[u]) {
          cycle = true;
          return;
        }
        dfs(u, e);
      }
    };
    for (int v = 0; v < vertices && !cycle; ++v)
      if (!seen[v]) dfs(v, -1);
    if (!cycle) ++counts[size];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

bool basis_exchange_oracle(int n, const std::vector<std::vector<int>>& bases) {
  (void)n;
  std::set<std::set<int>> family;
  for (const auto& b : bases) family.insert(std::set<int>(b.begin(), b.end()));
  if (family.empty()) return false;
  for (const auto& b1 : family)
    for (const auto& b2 : family)
      for (int x : b1) {
        if (b2.count(x)) continue;
        bool ok = false;
        for (int y : b2) {
          if (b1.count(y)) continue;
          std::set<int> c = b1;
          c.erase(x);
          c.insert(y);
          if (family.count(c)) ok = true;
        }
        if (!ok) return false;
      }
  return true;
}

}  // namespace lorentz::testing
