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

#include "lorentz/sequence.hpp"

namespace lorentz {

namespace {

std::optional<int> ulc_failure(const std::vector<Rational>& a, int m) {
  const int len = static_cast<int>(a.size());
  for (int k = 1; k + 1 < len; ++k) {
    Rational mid = a[k] / Rational(binomial(m, k));
    Rational lo = a[k - 1] / Rational(binomial(m, k - 1));
    Rational hi = a[k + 1] / Rational(binomial(m, k + 1));
    if (mid * mid < lo * hi) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> first_ulc_failure(const std::vector<Rational>& a) {
  if (a.empty()) return std::nullopt;
  return ulc_failure(a, static_cast<int>(a.size()) - 1);
}

bool is_ultra_log_concave(const std::vector<Rational>& a) {
  return !first_ulc_failure(a).has_value();
}

bool is_ultra_log_concave(const std::vector<Rational>& a, int m) {
  if (static_cast<int>(a.size()) > m + 1)
    throw InputError("sequence longer than m + 1");
  return !ulc_failure(a, m).has_value();
}

bool has_no_internal_zeros(const std::vector<Rational>& a) {
  int first = -1, last = -1;
  for (int k = 0; k < static_cast<int>(a.size()); ++k)
    if (a[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  for (int k = first + 1; k < last; ++k)
    if (a[k] == 0) return false;
  return true;
}

std::vector<Rational> bivariate_coefficients(const HomogPoly& p) {
  if (p.nvars() != 2) throw InputError("bivariate form expected");
  std::vector<Rational> a(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [e, c] : p.terms()) a[static_cast<std::size_t>(e[0])] = c;
  return a;
}

std::vector<Rational> collapse_to_bivariate(const HomogPoly& p, int keep) {
  std::vector<Rational> a(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [e, c] : p.terms()) {
    int k = p.degree() - e[static_cast<std::size_t>(keep)];
    a[static_cast<std::size_t>(k)] += c;
  }
  return a;
}

}  // namespace lorentz
