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

// JSON encodings. Rationals travel as decimal strings "num"/"den"; set
// elements and matroid ground sets are 0-based. Every reader throws
// InputError with a message naming the offending field.

#ifndef LORENTZ_IO_HPP_
#define LORENTZ_IO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lorentz/certifier.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/measures.hpp"
#include "lorentz/mconvex.hpp"
#include "lorentz/operators.hpp"
#include "lorentz/poly.hpp"

namespace lorentz {

using Json = nlohmann::ordered_json;

// Parses text; syntax errors report line, column and byte offset.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_file(const std::string& path);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

Json rational_to_json(const Rational& q);  // "a/b" or "a"
Rational rational_from_json(const Json& j);  // string, integer or {"num","den"}

Json poly_to_json(const HomogPoly& p);
HomogPoly poly_from_json(const Json& j);

Json function_to_json(const DiscreteFunction& f);
DiscreteFunction function_from_json(const Json& j);

// {"n": int, "d": int, "points": [[ints]]}; "d" may be omitted when points
// are present.
Json set_to_json(const PointSet& s);
PointSet set_from_json(const Json& j);

Json table_to_json(const OperatorTable& t);
OperatorTable table_from_json(const Json& j);

Json matroid_to_json(const Matroid& m);
// Accepts {"n", "bases"} or a graph {"vertices", "edges": [[u, v]]}. Throws
// InputError when the bases fail the exchange axiom.
MatroidCheck matroid_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"vectors": [[integers]]}, the input of the zonotope volume polynomial.
Json vectors_to_json(const std::vector<std::vector<Integer>>& vs);
std::vector<std::vector<Integer>> vectors_from_json(const Json& j);

Json measure_to_json(const Measure& mu);
// Unnormalized weights are accepted when "normalize": true is present or
// `normalize` is set.
Measure measure_from_json(const Json& j, bool normalize = false);

Json exponent_to_json(const ExponentVector& a);
Json subset_to_json(Subset s);
Json inertia_to_json(const Inertia& in);
Json sym_matrix_to_json(const SymMatrix& m);
Json certificate_to_json(const Certificate& c);

// Canonical re-serialization of any of the formats above, detected by its
// keys. Throws InputError when the kind cannot be recognized.
std::pair<std::string, Json> canonicalize(const Json& j);

// parse -> serialize -> parse -> serialize gives identical text.
bool roundtrip(const Json& j);

}  // namespace lorentz

#endif  // LORENTZ_IO_HPP_
