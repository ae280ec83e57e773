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

// Exact signature of rational symmetric matrices.
//
// The characteristic polynomial is computed with the Faddeev-LeVerrier
// recurrence, which only divides by small integers, and its positive and
// negative roots are counted with Descartes' rule of signs. Descartes' rule
// gives an upper bound in general; it is exact here because the
// characteristic polynomial of a real symmetric matrix has only real roots.

#ifndef LORENTZ_INERTIA_HPP_
#define LORENTZ_INERTIA_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(n, n) {}

  // Throws InputError unless `m` is square and symmetric.
  static SymMatrix from_matrix(const Matrix& m);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  const Matrix& matrix() const { return m_; }
  bool operator==(const SymMatrix& other) const = default;

 private:
  Matrix m_;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t size() const { return n_plus + n_minus + n_zero; }
  bool operator==(const Inertia& other) const = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

// Coefficients c_0..c_n of det(x I - M), lowest degree first; c_n = 1.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

// Sign changes in a coefficient sequence, zeros skipped.
std::size_t sign_changes(const std::vector<Rational>& coeffs);

Inertia inertia(const SymMatrix& m);

bool at_most_one_positive(const SymMatrix& m);
bool is_lorentzian_signature(const SymMatrix& m);
bool is_psd(const SymMatrix& m);

// Principal submatrix on the given (sorted, distinct) indices.
SymMatrix principal_submatrix(const SymMatrix& m,
                              const std::vector<std::size_t>& keep);

}  // namespace lorentz

#endif  // LORENTZ_INERTIA_HPP_
