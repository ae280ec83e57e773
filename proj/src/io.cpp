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

#include "lorentz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lorentz {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

ExponentVector exponent_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  ExponentVector a;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    a.push_back(x.get<int>());
  }
  return a;
}

std::string number_text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InputError(std::string("field \"") + key + "\" must be a decimal string");
}

// Reads {"num": ..., "den": ...} from an object; "den" defaults to 1.
Rational num_den(const Json& j) {
  const std::string num = number_text(j, "num");
  const std::string den = j.contains("den") ? number_text(j, "den") : "1";
  return make_rational(num, den);
}

void put_num_den(Json& j, const Rational& q) {
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
}

Subset subset_from_json(const Json& j, int n) {
  std::vector<int> elems;
  if (!j.is_array()) throw InputError("set must be an array of integers");
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("set must be an array of integers");
    elems.push_back(x.get<int>());
  }
  Subset s = subset_from(elems, n);
  if (__builtin_popcountll(s) != static_cast<int>(elems.size()))
    throw InputError("set lists an element twice");
  return s;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_file(path)); }

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_object()) return num_den(j);
  throw InputError("rational must be a string such as \"3/4\"");
}

Json exponent_to_json(const ExponentVector& a) { return Json(a); }

Json subset_to_json(Subset s) { return Json(subset_elements(s)); }

Json poly_to_json(const HomogPoly& p) {
  Json j;
  j["n"] = p.nvars();
  j["d"] = p.degree();
  j["terms"] = Json::array();
  for (const auto& [a, c] : p.terms()) {
    Json t;
    t["exp"] = a;
    put_num_den(t, c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

HomogPoly poly_from_json(const Json& j) {
  RawPoly raw;
  raw.nvars = int_field(j, "n");
  raw.degree = int_field(j, "d");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  for (const auto& t : terms)
    raw.terms.emplace_back(exponent_from_json(field(t, "exp"), "\"exp\""), num_den(t));
  if (auto err = validate(raw)) throw InputError(*err);
  return HomogPoly::from_raw(raw);
}

Json function_to_json(const DiscreteFunction& f) {
  Json j;
  j["n"] = f.nvars();
  j["d"] = f.degree();
  j["values"] = Json::array();
  for (const auto& [a, v] : f.values()) {
    Json t;
    t["exp"] = a;
    put_num_den(t, v);
    j["values"].push_back(std::move(t));
  }
  return j;
}

DiscreteFunction function_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  if (n < 0 || d < 0) throw InputError("negative shape");
  DiscreteFunction f(n, d);
  const Json& values = field(j, "values");
  if (!values.is_array()) throw InputError("\"values\" must be an array");
  for (const auto& t : values) {
    ExponentVector a = exponent_from_json(field(t, "exp"), "\"exp\"");
    if (f.at(a)) throw InputError("point " + format_exponent(a) + " listed twice");
    f.set(a, num_den(t));
  }
  return f;
}

Json set_to_json(const PointSet& s) {
  Json j;
  j["n"] = s.nvars();
  j["d"] = s.degree();
  j["points"] = Json::array();
  for (const auto& p : s.points()) j["points"].push_back(p);
  return j;
}

PointSet set_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 0) throw InputError("negative variable count");
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("\"points\" must be an array");
  std::vector<ExponentVector> points;
  for (const auto& p : pts) points.push_back(exponent_from_json(p, "point"));
  if (j.contains("d")) return PointSet::from_points(n, int_field(j, "d"), points);
  if (points.empty()) throw InputError("empty point set needs \"d\"");
  return PointSet::from_points(n, points);
}

Json table_to_json(const OperatorTable& t) {
  Json j;
  j["kappa"] = t.kappa;
  j["ell"] = t.ell;
  j["m"] = t.m;
  j["images"] = Json::array();
  for (const auto& [a, img] : t.images) {
    if (img.is_zero()) continue;
    Json e;
    e["exp"] = a;
    e["poly"] = poly_to_json(img);
    j["images"].push_back(std::move(e));
  }
  return j;
}

OperatorTable table_from_json(const Json& j) {
  OperatorTable t;
  t.kappa = exponent_from_json(field(j, "kappa"), "\"kappa\"");
  t.ell = int_field(j, "ell");
  const Json& images = field(j, "images");
  if (!images.is_array()) throw InputError("\"images\" must be an array");
  std::optional<int> m;
  if (j.contains("m")) m = int_field(j, "m");
  for (const auto& e : images) {
    ExponentVector a = exponent_from_json(field(e, "exp"), "\"exp\"");
    HomogPoly img = poly_from_json(field(e, "poly"));
    if (!m) m = img.nvars();
    if (t.images.count(a)) throw InputError("image of " + format_exponent(a) + " given twice");
    if (!img.is_zero()) t.images.emplace(a, std::move(img));
  }
  if (!m) throw InputError("operator table needs \"m\" or at least one image");
  t.m = *m;
  if (auto err = validate(t)) throw InputError(*err);
  return t;
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.n();
  j["bases"] = Json::array();
  for (Subset b : m.bases()) j["bases"].push_back(subset_elements(b));
  return j;
}

MatroidCheck matroid_from_json(const Json& j) {
  if (j.is_object() && j.contains("edges")) {
    const int v = int_field(j, "vertices");
    std::vector<std::pair<int, int>> edges;
    const Json& es = field(j, "edges");
    if (!es.is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("each edge must be a pair of vertex indices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return MatroidCheck{cycle_matroid(v, edges), std::nullopt};
  }
  const int n = int_field(j, "n");
  if (n < 0 || n > kMaxGroundSet) throw InputError("ground set size out of range");
  const Json& bs = field(j, "bases");
  if (!bs.is_array()) throw InputError("\"bases\" must be an array");
  std::vector<Subset> bases;
  for (const auto& b : bs) bases.push_back(subset_from_json(b, n));
  return matroid_from_bases(n, bases);
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["n"] = m.rows();
  j["rows"] = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j["rows"].push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 0) throw InputError("negative matrix size");
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw InputError("\"rows\" must hold n rows");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(n))
      throw InputError("row " + std::to_string(r) + " must hold n entries");
    for (int c = 0; c < n; ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

Json measure_to_json(const Measure& mu) {
  Json j;
  j["n"] = mu.n();
  j["atoms"] = Json::array();
  for (const auto& [s, w] : mu.weights()) {
    Json a;
    a["set"] = subset_elements(s);
    put_num_den(a, w);
    j["atoms"].push_back(std::move(a));
  }
  return j;
}

Measure measure_from_json(const Json& j, bool normalize) {
  const int n = int_field(j, "n");
  if (n < 0 || n > kMaxGroundSet) throw InputError("ground set size out of range");
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw InputError("\"atoms\" must be an array");
  std::map<Subset, Rational> w;
  for (const auto& a : atoms) {
    Subset s = subset_from_json(field(a, "set"), n);
    if (w.count(s)) throw InputError("atom listed twice");
    w[s] = num_den(a);
  }
  if (j.contains("normalize")) {
    if (!j["normalize"].is_boolean()) throw InputError("\"normalize\" must be a boolean");
    normalize = normalize || j["normalize"].get<bool>();
  }
  return Measure::from_weights(n, w, normalize);
}

Json vectors_to_json(const std::vector<std::vector<Integer>>& vs) {
  Json rows = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    rows.push_back(std::move(row));
  }
  return Json{{"vectors", std::move(rows)}};
}

std::vector<std::vector<Integer>> vectors_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
    throw InputError("expected {\"vectors\": [[integers]]}");
  std::vector<std::vector<Integer>> vs;
  for (const auto& v : j["vectors"]) {
    if (!v.is_array()) throw InputError("each vector must be an array");
    std::vector<Integer> row;
    for (const auto& x : v) {
      Rational q = rational_from_json(x);
      if (q.get_den() != 1) throw InputError("vector entries must be integers");
      row.push_back(q.get_num());
    }
    if (!vs.empty() && row.size() != vs.front().size())
      throw InputError("vectors have different lengths");
    vs.push_back(std::move(row));
  }
  return vs;
}

Json inertia_to_json(const Inertia& in) {
  return Json{{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}};
}

Json sym_matrix_to_json(const SymMatrix& m) { return matrix_to_json(m.matrix()); }

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["verdict"] = c.verdict;
  j["zero_polynomial"] = c.zero;
  j["failing_kind"] = to_string(c.failing_kind);
  if (c.failing_alpha) j["failing_alpha"] = *c.failing_alpha;
  if (c.exchange) {
    j["exchange_witness"] = Json{{"alpha", c.exchange->alpha},
                                 {"beta", c.exchange->beta},
                                 {"i", c.exchange->i}};
  }
  auto failure = [](const InertiaFailure& f) {
    return Json{{"alpha", f.alpha},
                {"hessian", sym_matrix_to_json(f.hessian)},
                {"inertia", inertia_to_json(f.inertia)}};
  };
  if (c.inertia) j["failing_quadratic"] = failure(*c.inertia);
  if (!c.all_inertia_failures.empty()) {
    j["all_failing_quadratics"] = Json::array();
    for (const auto& f : c.all_inertia_failures) j["all_failing_quadratics"].push_back(failure(f));
  }
  j["quadratics_checked"] = c.quadratics_checked;
  return j;
}

std::pair<std::string, Json> canonicalize(const Json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  if (j.contains("kappa")) return {"operator", table_to_json(table_from_json(j))};
  if (j.contains("terms")) return {"polynomial", poly_to_json(poly_from_json(j))};
  if (j.contains("values")) return {"function", function_to_json(function_from_json(j))};
  if (j.contains("points")) return {"set", set_to_json(set_from_json(j))};
  if (j.contains("bases") || j.contains("edges")) {
    MatroidCheck m = matroid_from_json(j);
    if (!m) throw InputError("bases fail the exchange axiom");
    return {"matroid", matroid_to_json(*m.matroid)};
  }
  if (j.contains("rows")) return {"matrix", matrix_to_json(matrix_from_json(j))};
  if (j.contains("atoms")) return {"measure", measure_to_json(measure_from_json(j))};
  if (j.contains("vectors")) return {"vectors", vectors_to_json(vectors_from_json(j))};
  throw InputError("unrecognized JSON document");
}

bool roundtrip(const Json& j) {
  const std::string first = canonicalize(j).second.dump();
  const std::string second = canonicalize(parse_json(first)).second.dump();
  return first == second;
}

}  // namespace lorentz
