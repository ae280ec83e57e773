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

#ifndef LORENTZ_SEQUENCE_HPP_
#define LORENTZ_SEQUENCE_HPP_

#include <optional>
#include <vector>

#include "lorentz/poly.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// (a_k / C(m,k))^2 >= (a_{k-1}/C(m,k-1)) (a_{k+1}/C(m,k+1)) for 0 < k < m,
// where m = a.size() - 1. Returns the first failing k, or nullopt.
std::optional<int> first_ulc_failure(const std::vector<Rational>& a);
bool is_ultra_log_concave(const std::vector<Rational>& a);

// Same inequality normalized by C(m,k) for an explicit m (used for measures
// on {0,1}^m whose rank-size sequence has m+1 entries).
bool is_ultra_log_concave(const std::vector<Rational>& a, int m);

// a_i a_k > 0 implies a_j > 0 for all i < j < k.
bool has_no_internal_zeros(const std::vector<Rational>& a);

// Coefficients a_k of w_1^k w_2^(d-k) of a bivariate form.
std::vector<Rational> bivariate_coefficients(const HomogPoly& p);

// Coefficient sequence of p(w_0, w, ..., w): entry k collects the monomials
// with k total exponent outside variable `keep`.
std::vector<Rational> collapse_to_bivariate(const HomogPoly& p, int keep);

}  // namespace lorentz

#endif  // LORENTZ_SEQUENCE_HPP_
