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

// Matroids given by their list of bases, and the polynomials built from them.
// Ground set elements are 0..n-1; subsets are bitmasks.

#ifndef LORENTZ_MATROID_HPP_
#define LORENTZ_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lorentz/poly.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

using Subset = std::uint64_t;

// Largest ground set for which subset enumeration is attempted.
inline constexpr int kMaxGroundSet = 24;

std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elems, int n);

struct MatroidCheck;

class Matroid {
 public:
  int n() const { return n_; }
  int rank() const { return rank_; }
  // Sorted ascending.
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const;

  // max |A & B| over bases B.
  int rank(Subset a) const;
  bool is_independent(Subset a) const { return rank(a) == __builtin_popcountll(a); }

  // I_k for k = 0..rank().
  std::vector<Integer> independence_counts() const;

 private:
  friend MatroidCheck matroid_from_bases(int n, const std::vector<Subset>& bases);
  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
};

// B1, B2 and x in B1 \ B2 such that B1 - x + y is not a basis for any y in
// B2 \ B1.
struct BasisExchangeWitness {
  Subset b1 = 0;
  Subset b2 = 0;
  int x = 0;
};

struct MatroidCheck {
  std::optional<Matroid> matroid;
  std::optional<BasisExchangeWitness> witness;
  explicit operator bool() const { return matroid.has_value(); }
};

// Throws InputError on an empty family, unequal sizes or elements outside
// [0, n). A family failing the exchange axiom is returned with a witness.
MatroidCheck matroid_from_bases(int n, const std::vector<Subset>& bases);
MatroidCheck matroid_from_bases(int n, const std::vector<std::vector<int>>& bases);

Matroid uniform_matroid(int r, int n);
Matroid free_matroid(int n);

// Cycle matroid of a multigraph on `vertices` vertices. Bases are the
// spanning forests.
Matroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges);

// sum over bases of w^B.
HomogPoly basis_generating_poly(const Matroid& m);

// sum over A of q^(-rk A) w^A w_0^(n - |A|), with w_0 as variable 0 and
// element i as variable i + 1. q > 0.
HomogPoly potts_poly(const Matroid& m, const Rational& q);

// sum over independent A of w^A w_0^(n - |A|), same variable layout.
HomogPoly independent_set_poly(const Matroid& m);

struct MasonReport {
  std::vector<Integer> counts;  // I_0..I_r
  bool holds = true;
  std::optional<int> first_failure;
  // equality[k] for 0 < k < r; entries 0 and r are false.
  std::vector<bool> equality;
};

// (I_k / C(n,k))^2 >= (I_{k+1} / C(n,k+1)) (I_{k-1} / C(n,k-1)) for 0 < k < r.
MasonReport mason_check(const Matroid& m);

// sum over A of (x-1)^(r - rk A) (y-1)^(|A| - rk A).
Rational tutte(const Matroid& m, const Rational& x, const Rational& y);

// c^k = sum over |A| = k of q^(r - rk A), k = 0..n. 0 <= q <= 1.
std::vector<Rational> tutte_section(const Matroid& m, const Rational& q);

// sum over d-subsets S of |det v_S| w^S for n integer vectors of length d.
HomogPoly zonotope_volume_poly(const std::vector<std::vector<Integer>>& vectors);

}  // namespace lorentz

#endif  // LORENTZ_MATROID_HPP_
