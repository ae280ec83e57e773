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

#include "lorentz/inertia.hpp"

namespace lorentz {

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw InputError("symmetric matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
  SymMatrix s;
  s.m_ = m;
  return s;
}

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
  return os << "(" << in.n_plus << "," << in.n_minus << "," << in.n_zero
            << ")";
}

std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw InputError("characteristic polynomial of non-square");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1,
  //   M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::size_t sign_changes(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : coeffs) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Inertia inertia(const SymMatrix& m) {
  // A zero row (and column) splits off a zero eigenvalue.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) != 0) {
        live.push_back(i);
        break;
      }
  }
  if (live.size() < m.size()) {
    Inertia in = live.empty() ? Inertia{} : inertia(principal_submatrix(m, live));
    in.n_zero += m.size() - live.size();
    return in;
  }

  const std::size_t n = m.size();
  std::vector<Rational> p = characteristic_polynomial(m.matrix());
  Inertia in;
  while (in.n_zero < n && p[in.n_zero] == 0) ++in.n_zero;
  // Real-rooted p: sign changes of p(x) count positive roots exactly, those
  // of p(-x) count negative roots exactly.
  in.n_plus = sign_changes(p);
  std::vector<Rational> q = p;
  for (std::size_t k = 1; k < q.size(); k += 2) q[k] = -q[k];
  in.n_minus = sign_changes(q);
  return in;
}

bool at_most_one_positive(const SymMatrix& m) { return inertia(m).n_plus <= 1; }

bool is_lorentzian_signature(const SymMatrix& m) {
  Inertia in = inertia(m);
  return in.n_plus == 1 && in.n_zero == 0 && in.n_minus + 1 == m.size();
}

bool is_psd(const SymMatrix& m) { return inertia(m).n_minus == 0; }

SymMatrix principal_submatrix(const SymMatrix& m,
                              const std::vector<std::size_t>& keep) {
  SymMatrix s(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a; b < keep.size(); ++b)
      s.set(a, b, m(keep[a], keep[b]));
  return s;
}

}  // namespace lorentz
