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

#include "lorentz/mmatrix.hpp"

#include "lorentz/parallel.hpp"

namespace lorentz {

namespace {

int check_square(const Matrix& a) {
  if (!a.is_square()) throw InputError("matrix is not square");
  if (a.rows() > static_cast<std::size_t>(kMaxGroundSet))
    throw InputError("matrix too large for minor enumeration");
  return static_cast<int>(a.rows());
}

}  // namespace

Rational principal_minor(const Matrix& a, Subset s) {
  const int n = check_square(a);
  if (n < 64 && (s >> n) != 0) throw InputError("minor index out of range");
  std::vector<int> idx = subset_elements(s);
  Matrix sub(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(idx[r], idx[c]);
  return determinant(sub);
}

MMatrixCheck is_m_matrix(const Matrix& a) {
  const int n = check_square(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a(i, j) > 0)
        return MMatrixCheck{false, std::make_pair(i, j), std::nullopt};
  const std::size_t count = std::size_t{1} << n;
  auto first = find_first(count - 1, [&](std::size_t k) {
    return principal_minor(a, static_cast<Subset>(k + 1)) < 0;
  });
  if (first) return MMatrixCheck{false, std::nullopt, static_cast<Subset>(*first + 1)};
  return {};
}

HomogPoly char_poly_multivariate(const Matrix& a) {
  const int n = check_square(a);
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> minors(count);
  for_each_index(count, [&](std::size_t s) { minors[s] = principal_minor(a, s); });
  HomogPoly p(n + 1, n);
  for (std::size_t s = 0; s < count; ++s) {
    if (minors[s] == 0) continue;
    ExponentVector e(static_cast<std::size_t>(n) + 1, 0);
    for (int i : subset_elements(s)) e[i + 1] = 1;
    e[0] = n - __builtin_popcountll(s);
    p.add_term(e, minors[s]);
  }
  return p;
}

SymMatrix substochastic_form(const Matrix& b) {
  if (!b.is_square() || b.rows() == 0) throw InputError("matrix must be square and nonempty");
  const std::size_t n = b.rows();
  const Rational j = Rational(2) / Rational(static_cast<long>(n));
  SymMatrix s(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      s.set(r, c, (r == c ? Rational(2) : Rational(0)) + b(r, c) + b(c, r) - j);
  return s;
}

}  // namespace lorentz
