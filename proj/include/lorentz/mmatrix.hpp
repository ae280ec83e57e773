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

// M-matrices and their multivariate characteristic polynomials
//   p_A(w_0, ..., w_n) = det(w_0 I + diag(w_1, ..., w_n) A).

#ifndef LORENTZ_MMATRIX_HPP_
#define LORENTZ_MMATRIX_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "lorentz/inertia.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/poly.hpp"

namespace lorentz {

// Determinant of the submatrix on the rows and columns in s; 1 for s empty.
Rational principal_minor(const Matrix& a, Subset s);

struct MMatrixCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> positive_off_diagonal;
  std::optional<Subset> negative_minor;
  explicit operator bool() const { return ok; }
};

// Off-diagonal entries <= 0 and all 2^n - 1 principal minors >= 0.
MMatrixCheck is_m_matrix(const Matrix& a);

// sum over S of A_S w^S w_0^(n - |S|), w_0 first.
HomogPoly char_poly_multivariate(const Matrix& a);

// 2I + B + B^T - (2/n) J.
SymMatrix substochastic_form(const Matrix& b);

}  // namespace lorentz

#endif  // LORENTZ_MMATRIX_HPP_
