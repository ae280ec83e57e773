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

#include "lorentz/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "lorentz/matrix.hpp"
#include "lorentz/parallel.hpp"

namespace lorentz {

namespace {

int popcount(Subset s) { return __builtin_popcountll(s); }

void check_ground_set(int n) {
  if (n < 0) throw InputError("negative ground set size");
  if (n > kMaxGroundSet)
    throw InputError("ground set of size " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(kMaxGroundSet));
}

// rank of every subset, indexed by bitmask.
std::vector<int> rank_table(const Matroid& m) {
  const Subset full = Subset{1} << m.n();
  std::vector<char> indep(full, 0);
  for (Subset b : m.bases()) {
    // Every subset of a basis; skip branches already marked.
    Subset s = b;
    while (true) {
      indep[s] = 1;
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  std::vector<int> rk(full, 0);
  for (Subset a = 1; a < full; ++a) {
    if (indep[a]) {
      rk[a] = popcount(a);
      continue;
    }
    int best = 0;
    for (Subset rest = a; rest; rest &= rest - 1) {
      Subset e = rest & (~rest + 1);
      best = std::max(best, rk[a ^ e]);
    }
    rk[a] = best;
  }
  return rk;
}

}  // namespace

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

Subset subset_from(const std::vector<int>& elems, int n) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 0 || e >= n)
      throw InputError("element " + std::to_string(e) + " outside the ground set of size " +
                       std::to_string(n));
    s |= Subset{1} << e;
  }
  return s;
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank(Subset a) const {
  if (n_ < 64 && (a >> n_) != 0) throw InputError("subset outside the ground set");
  int best = 0;
  for (Subset b : bases_) best = std::max(best, popcount(a & b));
  return best;
}

std::vector<Integer> Matroid::independence_counts() const {
  std::vector<int> rk = rank_table(*this);
  std::vector<Integer> counts(static_cast<std::size_t>(rank_) + 1, 0);
  for (Subset a = 0; a < rk.size(); ++a)
    if (rk[a] == popcount(a)) counts[rk[a]] += 1;
  return counts;
}

MatroidCheck matroid_from_bases(int n, const std::vector<Subset>& bases) {
  check_ground_set(n);
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const int r = popcount(bases.front());
  for (Subset b : bases) {
    if (n < 64 && (b >> n) != 0) throw InputError("basis outside the ground set");
    if (popcount(b) != r) throw InputError("bases of different sizes");
  }
  Matroid m;
  m.n_ = n;
  m.rank_ = r;
  m.bases_ = bases;
  std::sort(m.bases_.begin(), m.bases_.end());
  m.bases_.erase(std::unique(m.bases_.begin(), m.bases_.end()), m.bases_.end());

  const auto& bs = m.bases_;
  std::vector<std::optional<BasisExchangeWitness>> found(bs.size());
  auto first = find_first(bs.size(), [&](std::size_t i1) {
    const Subset b1 = bs[i1];
    for (Subset b2 : bs) {
      for (Subset xs = b1 & ~b2; xs; xs &= xs - 1) {
        const Subset x = xs & (~xs + 1);
        bool ok = false;
        for (Subset ys = b2 & ~b1; ys && !ok; ys &= ys - 1) {
          const Subset y = ys & (~ys + 1);
          ok = m.is_basis((b1 ^ x) | y);
        }
        if (!ok) {
          found[i1] = BasisExchangeWitness{b1, b2, __builtin_ctzll(x)};
          return true;
        }
      }
    }
    return false;
  });
  if (first) return MatroidCheck{std::nullopt, found[*first]};
  return MatroidCheck{std::move(m), std::nullopt};
}

MatroidCheck matroid_from_bases(int n, const std::vector<std::vector<int>>& bases) {
  check_ground_set(n);
  std::vector<Subset> masks;
  for (const auto& b : bases) {
    Subset s = subset_from(b, n);
    if (popcount(s) != static_cast<int>(b.size())) throw InputError("repeated element in a basis");
    masks.push_back(s);
  }
  return matroid_from_bases(n, masks);
}

Matroid uniform_matroid(int r, int n) {
  check_ground_set(n);
  if (r < 0 || r > n) throw InputError("uniform matroid rank out of range");
  std::vector<Subset> bases;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (popcount(s) == r) bases.push_back(s);
  return *matroid_from_bases(n, bases).matroid;
}

Matroid free_matroid(int n) { return uniform_matroid(n, n); }

Matroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 0) throw InputError("negative vertex count");
  const int n = static_cast<int>(edges.size());
  check_ground_set(n);
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("edge endpoint out of range");

  auto find = [](std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto acyclic = [&](Subset s) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    for (int e : subset_elements(s)) {
      int a = find(parent, edges[e].first);
      int b = find(parent, edges[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  // Rank = vertices - components.
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  int r = 0;
  for (const auto& [u, v] : edges) {
    int a = find(parent, u);
    int b = find(parent, v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  std::vector<Subset> bases;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (popcount(s) == r && acyclic(s)) bases.push_back(s);
  return *matroid_from_bases(n, bases).matroid;
}

HomogPoly basis_generating_poly(const Matroid& m) {
  HomogPoly f(m.n(), m.rank());
  for (Subset b : m.bases()) {
    ExponentVector a(static_cast<std::size_t>(m.n()), 0);
    for (int e : subset_elements(b)) a[e] = 1;
    f.add_term(a, 1);
  }
  return f;
}

namespace {

ExponentVector homogenized_exponent(Subset s, int n) {
  ExponentVector a(static_cast<std::size_t>(n) + 1, 0);
  for (int e : subset_elements(s)) a[e + 1] = 1;
  a[0] = n - popcount(s);
  return a;
}

}  // namespace

HomogPoly potts_poly(const Matroid& m, const Rational& q) {
  if (q <= 0) throw InputError("q must be positive");
  const std::vector<int> rk = rank_table(m);
  const Rational qinv = Rational(1) / q;
  std::vector<Rational> powers(static_cast<std::size_t>(m.rank()) + 1, 1);
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * qinv;
  HomogPoly z(m.n() + 1, m.n());
  for (Subset a = 0; a < rk.size(); ++a) z.add_term(homogenized_exponent(a, m.n()), powers[rk[a]]);
  return z;
}

HomogPoly independent_set_poly(const Matroid& m) {
  const std::vector<int> rk = rank_table(m);
  HomogPoly f(m.n() + 1, m.n());
  for (Subset a = 0; a < rk.size(); ++a)
    if (rk[a] == popcount(a)) f.add_term(homogenized_exponent(a, m.n()), 1);
  return f;
}

MasonReport mason_check(const Matroid& m) {
  MasonReport rep;
  rep.counts = m.independence_counts();
  const int r = m.rank();
  const int n = m.n();
  rep.equality.assign(static_cast<std::size_t>(r) + 1, false);
  auto term = [&](int k) -> Rational { return Rational(rep.counts[k]) / Rational(binomial(n, k)); };
  for (int k = 1; k < r; ++k) {
    Rational lhs = term(k) * term(k);
    Rational rhs = term(k + 1) * term(k - 1);
    rep.equality[k] = lhs == rhs;
    if (lhs < rhs && rep.holds) {
      rep.holds = false;
      rep.first_failure = k;
    }
  }
  return rep;
}

Rational tutte(const Matroid& m, const Rational& x, const Rational& y) {
  const std::vector<int> rk = rank_table(m);
  const Rational x1 = x - 1;
  const Rational y1 = y - 1;
  Rational sum = 0;
  for (Subset a = 0; a < rk.size(); ++a)
    sum += pow(x1, m.rank() - rk[a]) * pow(y1, popcount(a) - rk[a]);
  return sum;
}

std::vector<Rational> tutte_section(const Matroid& m, const Rational& q) {
  if (q < 0 || q > 1) throw InputError("q must lie in [0, 1]");
  const std::vector<int> rk = rank_table(m);
  std::vector<Rational> c(static_cast<std::size_t>(m.n()) + 1, 0);
  for (Subset a = 0; a < rk.size(); ++a) c[popcount(a)] += pow(q, m.rank() - rk[a]);
  return c;
}

HomogPoly zonotope_volume_poly(const std::vector<std::vector<Integer>>& vectors) {
  const int n = static_cast<int>(vectors.size());
  check_ground_set(n);
  if (n == 0) throw InputError("no vectors given");
  const std::size_t d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw InputError("vectors of different dimensions");
  HomogPoly f(n, static_cast<int>(d));
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (popcount(s) != static_cast<int>(d)) continue;
    std::vector<int> idx = subset_elements(s);
    Matrix a(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) a(r, c) = vectors[idx[c]][r];
    Rational det = abs(determinant(a));
    if (det == 0) continue;
    ExponentVector e(static_cast<std::size_t>(n), 0);
    for (int i : idx) e[i] = 1;
    f.add_term(e, det);
  }
  return f;
}

}  // namespace lorentz
