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

#ifndef LORENTZ_RATIONAL_HPP_
#define LORENTZ_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lorentz {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Raised on malformed input: dimension mismatches, negative entries where
// nonnegativity is required, unparsable numbers and so on.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string_view text);
Rational make_rational(std::string_view num, std::string_view den);
// num/den in lowest terms. Rational(num, den) alone does not reduce.
Rational make_rational(long num, long den);
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

int sign(const Rational& q);

// q^e for integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

// Exact q^(p) for rational p when the result is rational, nullopt otherwise.
// q must be positive.
std::optional<Rational> exact_pow(const Rational& q, const Rational& p);

}  // namespace lorentz

#endif  // LORENTZ_RATIONAL_HPP_
