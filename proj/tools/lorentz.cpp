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

// Command-line front end. Every command prints one JSON report on stdout and
// exits 0 when the property holds (or the construction succeeded), 1 when it
// is refuted and 2 on bad input.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorentz/certifier.hpp"
#include "lorentz/io.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/measures.hpp"
#include "lorentz/mconvex.hpp"
#include "lorentz/mmatrix.hpp"
#include "lorentz/operators.hpp"
#include "lorentz/parallel.hpp"
#include "lorentz/sequence.hpp"

namespace {

using lorentz::InputError;
using lorentz::Json;
using lorentz::Rational;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;

struct Outcome {
  bool verdict = true;
  Json result;
};

struct Inputs {
  Json list = Json::array();

  Json load(const std::string& path) {
    const std::string bytes = lorentz::read_file(path);
    list.push_back(Json{{"path", path}, {"digest", lorentz::digest(bytes)}});
    return lorentz::parse_json(bytes);
  }
};

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(lorentz::parse_rational(item));
  if (w.empty()) throw InputError("empty point");
  return w;
}

Json point_json(const std::vector<Rational>& w) {
  Json j = Json::array();
  for (const auto& x : w) j.push_back(lorentz::to_string(x));
  return j;
}

Json sequence_json(const std::vector<Rational>& a) { return point_json(a); }

Json integers_json(const std::vector<lorentz::Integer>& a) {
  Json j = Json::array();
  for (const auto& x : a) j.push_back(x.get_str());
  return j;
}

Json rayleigh_json(const lorentz::RayleighViolation& v) {
  return Json{{"alpha", v.alpha}, {"i", v.i},     {"j", v.j},
              {"point", point_json(v.point)},     {"lhs", lorentz::to_string(v.lhs)},
              {"rhs", lorentz::to_string(v.rhs)}};
}

Json measure_rayleigh_json(const lorentz::MeasureRayleighViolation& v) {
  return Json{{"i", v.i},
              {"j", v.j},
              {"point", point_json(v.point)},
              {"lhs", lorentz::to_string(v.lhs)},
              {"rhs", lorentz::to_string(v.rhs)}};
}

Json pair_json(const lorentz::PairViolation& v) {
  return Json{{"i", v.i},
              {"j", v.j},
              {"joint", lorentz::to_string(v.joint)},
              {"bound", lorentz::to_string(v.product)}};
}

Json exchange_json(const lorentz::ExchangeWitness& w) {
  return Json{{"alpha", w.alpha}, {"beta", w.beta}, {"i", w.i}};
}

lorentz::Matroid load_matroid(Inputs& in, const std::string& path) {
  lorentz::MatroidCheck m = lorentz::matroid_from_json(in.load(path));
  if (!m) throw InputError("bases fail the exchange axiom");
  return *m.matroid;
}

// Adds decimal approximations next to exact rational strings.
void add_floats(Json& j) {
  static const std::vector<std::string> skip = {"digest", "path", "command", "failing_kind"};
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(skip.begin(), skip.end(), it.key()) != skip.end()) continue;
      add_floats(it.value());
    }
    if (j.contains("num") && j.contains("den") && j["num"].is_string())
      j["float"] = lorentz::make_rational(j["num"].get<std::string>(), j["den"].get<std::string>())
                       .get_d();
  } else if (j.is_array()) {
    for (auto& x : j) add_floats(x);
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) return;
    try {
      Rational q = lorentz::parse_rational(s);
      j = Json{{"exact", s}, {"float", q.get_d()}};
    } catch (const InputError&) {
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of Lorentzian polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  bool want_float = false;
  app.add_option("--jobs", jobs, "worker threads (default: LORENTZ_JOBS or 1)");
  app.add_option("--seed", seed, "seed for sampling commands")->capture_default_str();
  app.add_option("--trials", trials, "sample count for sampling commands")->capture_default_str();
  app.add_flag("--float", want_float, "add decimal approximations to the report");

  Inputs inputs;
  std::function<Outcome()> action;
  auto on = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  // Polynomial certification.
  std::string poly_path;
  bool exhaustive = false;
  auto* check = app.add_subcommand("check", "certify that a polynomial is Lorentzian");
  check->add_option("poly", poly_path)->required();
  check->add_flag("--exhaustive", exhaustive, "report every failing quadratic");
  on(check, [&] {
    auto f = lorentz::poly_from_json(inputs.load(poly_path));
    auto c = lorentz::is_lorentzian(f, {exhaustive});
    return Outcome{c.verdict, lorentz::certificate_to_json(c)};
  });

  auto* strict = app.add_subcommand("strict", "certify that a polynomial is strictly Lorentzian");
  strict->add_option("poly", poly_path)->required();
  strict->add_flag("--exhaustive", exhaustive, "report every failing quadratic");
  on(strict, [&] {
    auto f = lorentz::poly_from_json(inputs.load(poly_path));
    auto c = lorentz::is_strictly_lorentzian(f, {exhaustive});
    return Outcome{c.verdict, lorentz::certificate_to_json(c)};
  });

  std::string point_text;
  auto* hr = app.add_subcommand("hodge-riemann",
                                "inertia of the Hessian at a point, or at sampled points");
  hr->add_option("poly", poly_path)->required();
  hr->add_option("--point", point_text, "comma-separated positive rationals");
  on(hr, [&] {
    auto f = lorentz::poly_from_json(inputs.load(poly_path));
    std::vector<std::vector<Rational>> points;
    if (!point_text.empty()) {
      points.push_back(parse_point(point_text));
    } else {
      std::mt19937_64 rng(seed);
      for (std::size_t t = 0; t < trials; ++t)
        points.push_back(lorentz::random_orthant_point(f.nvars(), 0, rng));
    }
    Outcome out;
    out.result["points_checked"] = points.size();
    for (const auto& w : points) {
      auto in = lorentz::hodge_riemann_at(f, w);
      if (in.n_plus != 1) {
        out.verdict = false;
        out.result["failure"] = Json{{"point", point_json(w)},
                                     {"inertia", lorentz::inertia_to_json(in)}};
        break;
      }
      if (points.size() == 1) out.result["inertia"] = lorentz::inertia_to_json(in);
    }
    return out;
  });

  std::string c_text = "2";
  auto* ray = app.add_subcommand("rayleigh", "search for a c-Rayleigh violation");
  ray->add_option("poly", poly_path)->required();
  ray->add_option("--c", c_text, "Rayleigh constant")->capture_default_str();
  ray->add_option("--point", point_text, "check a single point instead of sampling");
  on(ray, [&] {
    auto f = lorentz::poly_from_json(inputs.load(poly_path));
    Rational c = lorentz::parse_rational(c_text);
    std::optional<lorentz::RayleighViolation> v;
    Outcome out;
    out.result["c"] = lorentz::to_string(c);
    if (!point_text.empty()) {
      v = lorentz::rayleigh_check_at(f, c, parse_point(point_text));
      out.result["mode"] = "point";
    } else {
      v = lorentz::rayleigh_falsify(f, c, trials, seed);
      out.result["mode"] = "sampled";
      out.result["trials"] = trials;
    }
    out.verdict = !v;
    if (v) out.result["violation"] = rayleigh_json(*v);
    return out;
  });

  std::string mc_path;
  auto* mc = app.add_subcommand("mconvex", "test M-convexity of a point set or function");
  mc->add_option("input", mc_path)->required();
  on(mc, [&] {
    Json j = inputs.load(mc_path);
    Outcome out;
    if (j.contains("values")) {
      auto fn = lorentz::function_from_json(j);
      auto r = lorentz::is_m_convex_function(fn);
      out.verdict = r.ok;
      out.result["kind"] = "function";
      if (!r.ok) {
        out.result["failure"] =
            r.failure == lorentz::FunctionCheck::Failure::domain ? "domain" : "local_exchange";
      }
      if (r.witness) out.result["witness"] = exchange_json(*r.witness);
    } else {
      auto s = lorentz::set_from_json(j);
      auto r = lorentz::is_m_convex_set(s);
      out.verdict = r.ok;
      out.result["kind"] = "set";
      if (r.witness) out.result["witness"] = exchange_json(*r.witness);
    }
    return out;
  });

  std::string fn_path, q_text = "1", kind = "f";
  bool certify = false;
  auto* gen = app.add_subcommand("genpoly", "generating polynomial of an M-convex function");
  gen->add_option("function", fn_path)->required();
  gen->add_option("--q", q_text, "base q, a positive rational")->capture_default_str();
  gen->add_option("--kind", kind, "f (divide by a!) or g (binomial weights)")
      ->check(CLI::IsMember({"f", "g"}))
      ->capture_default_str();
  gen->add_flag("--certify", certify, "also certify the result");
  on(gen, [&] {
    auto nu = lorentz::function_from_json(inputs.load(fn_path));
    Rational q = lorentz::parse_rational(q_text);
    auto p = kind == "f" ? lorentz::generating_poly_f(nu, q) : lorentz::generating_poly_g(nu, q);
    Outcome out;
    out.result["polynomial"] = lorentz::poly_to_json(p);
    if (certify) {
      auto c = lorentz::is_lorentzian(p);
      out.verdict = c.verdict;
      out.result["certificate"] = lorentz::certificate_to_json(c);
    }
    return out;
  });

  std::string table_path, apply_path;
  auto* op = app.add_subcommand("operator",
                                "symbol of an operator table and its certificate");
  op->add_option("table", table_path)->required();
  op->add_option("--apply", apply_path, "polynomial to apply the operator to");
  on(op, [&] {
    auto t = lorentz::table_from_json(inputs.load(table_path));
    auto sym = lorentz::symbol(t);
    auto c = lorentz::is_lorentzian(sym);
    Outcome out;
    out.verdict = c.verdict;
    out.result["symbol"] = lorentz::poly_to_json(sym);
    out.result["symbol_certificate"] = lorentz::certificate_to_json(c);
    if (!apply_path.empty()) {
      auto f = lorentz::poly_from_json(inputs.load(apply_path));
      auto g = lorentz::apply_operator(t, f);
      auto cg = lorentz::is_lorentzian(g);
      out.result["image"] = lorentz::poly_to_json(g);
      out.result["image_certificate"] = lorentz::certificate_to_json(cg);
      out.verdict = out.verdict && cg.verdict;
    }
    return out;
  });

  // Matroids.
  std::string matroid_path;
  auto* mat = app.add_subcommand("matroid", "matroid constructions");
  mat->require_subcommand(1);
  mat->fallthrough();
  auto matroid_sub = [&](const char* name, const char* help) {
    auto* s = mat->add_subcommand(name, help);
    s->fallthrough();
    s->add_option("matroid", matroid_path, "matroid or graph JSON")->required();
    return s;
  };
  on(matroid_sub("validate", "check the basis exchange axiom"), [&] {
    auto m = lorentz::matroid_from_json(inputs.load(matroid_path));
    Outcome out;
    out.verdict = m.matroid.has_value();
    if (m.matroid) {
      out.result["matroid"] = lorentz::matroid_to_json(*m.matroid);
      out.result["rank"] = m.matroid->rank();
    }
    if (m.witness) {
      out.result["witness"] = Json{{"b1", lorentz::subset_to_json(m.witness->b1)},
                                   {"b2", lorentz::subset_to_json(m.witness->b2)},
                                   {"x", m.witness->x}};
    }
    return out;
  });
  auto* bp = matroid_sub("basis-poly", "basis generating polynomial");
  bp->add_flag("--certify", certify, "also certify the result");
  auto poly_outcome = [&](const lorentz::HomogPoly& p) {
    Outcome out;
    out.result["polynomial"] = lorentz::poly_to_json(p);
    if (certify) {
      auto c = lorentz::is_lorentzian(p);
      out.verdict = c.verdict;
      out.result["certificate"] = lorentz::certificate_to_json(c);
    }
    return out;
  };
  on(bp, [&] { return poly_outcome(lorentz::basis_generating_poly(load_matroid(inputs, matroid_path))); });
  auto* potts = matroid_sub("potts", "multivariate Potts partition function");
  potts->add_option("--q", q_text, "positive rational q")->capture_default_str();
  potts->add_flag("--certify", certify, "also certify the result");
  on(potts, [&] {
    return poly_outcome(lorentz::potts_poly(load_matroid(inputs, matroid_path),
                                            lorentz::parse_rational(q_text)));
  });
  auto* ip = matroid_sub("indep-poly", "homogenized independent-set polynomial");
  ip->add_flag("--certify", certify, "also certify the result");
  on(ip, [&] { return poly_outcome(lorentz::independent_set_poly(load_matroid(inputs, matroid_path))); });
  on(matroid_sub("mason", "binomial-normalized log-concavity of independent set counts"), [&] {
    auto rep = lorentz::mason_check(load_matroid(inputs, matroid_path));
    Outcome out;
    out.verdict = rep.holds;
    out.result["counts"] = integers_json(rep.counts);
    Json eq = Json::array();
    for (std::size_t k = 1; k + 1 < rep.equality.size(); ++k)
      if (rep.equality[k]) eq.push_back(k);
    out.result["equality_at"] = eq;
    if (rep.first_failure) out.result["first_failure"] = *rep.first_failure;
    return out;
  });
  std::string x_text = "1", y_text = "1", section_text;
  auto* tt = matroid_sub("tutte", "Tutte polynomial value or the ULC section");
  tt->add_option("--x", x_text)->capture_default_str();
  tt->add_option("--y", y_text)->capture_default_str();
  tt->add_option("--section", section_text, "q in [0,1]: report c_q^k and test ULC");
  on(tt, [&] {
    auto m = load_matroid(inputs, matroid_path);
    Outcome out;
    if (!section_text.empty()) {
      auto c = lorentz::tutte_section(m, lorentz::parse_rational(section_text));
      out.result["section"] = sequence_json(c);
      bool ulc = lorentz::is_ultra_log_concave(c);
      bool gaps = lorentz::has_no_internal_zeros(c);
      out.result["ultra_log_concave"] = ulc;
      out.result["no_internal_zeros"] = gaps;
      out.verdict = ulc && gaps;
    } else {
      out.result["value"] = lorentz::to_string(
          lorentz::tutte(m, lorentz::parse_rational(x_text), lorentz::parse_rational(y_text)));
    }
    return out;
  });
  std::string vectors_path;
  auto* zono = mat->add_subcommand("zonotope", "volume polynomial of a sum of segments");
  zono->add_option("vectors", vectors_path, "JSON {\"vectors\": [[ints]]}")->required();
  zono->add_flag("--certify", certify, "also certify the result");
  on(zono, [&] {
    auto vs = lorentz::vectors_from_json(inputs.load(vectors_path));
    return poly_outcome(lorentz::zonotope_volume_poly(vs));
  });

  // M-matrices.
  std::string matrix_path;
  auto* mm = app.add_subcommand("mmatrix", "M-matrices");
  mm->require_subcommand(1);
  mm->fallthrough();
  auto* rec = mm->add_subcommand("recognize", "test the M-matrix conditions");
  rec->add_option("matrix", matrix_path)->required();
  on(rec, [&] {
    auto r = lorentz::is_m_matrix(lorentz::matrix_from_json(inputs.load(matrix_path)));
    Outcome out;
    out.verdict = r.ok;
    if (r.positive_off_diagonal)
      out.result["positive_off_diagonal"] = {r.positive_off_diagonal->first,
                                             r.positive_off_diagonal->second};
    if (r.negative_minor) out.result["negative_minor"] = lorentz::subset_to_json(*r.negative_minor);
    return out;
  });
  auto* cp = mm->add_subcommand("charpoly", "multivariate characteristic polynomial");
  cp->add_option("matrix", matrix_path)->required();
  cp->add_flag("--certify", certify, "also certify the result");
  on(cp, [&] {
    return poly_outcome(lorentz::char_poly_multivariate(lorentz::matrix_from_json(inputs.load(matrix_path))));
  });

  // Measures.
  std::string measure_path;
  bool normalize = false;
  auto* meas = app.add_subcommand("measure", "probability measures on {0,1}^n");
  meas->require_subcommand(1);
  meas->fallthrough();
  auto measure_sub = [&](const char* name, const char* help) {
    auto* s = meas->add_subcommand(name, help);
    s->fallthrough();
    s->add_option("measure", measure_path)->required();
    s->add_flag("--normalize", normalize, "rescale weights to total mass one");
    return s;
  };
  auto load_measure = [&] {
    return lorentz::measure_from_json(inputs.load(measure_path), normalize);
  };
  on(measure_sub("lorentzian", "certify the homogenized partition function"), [&] {
    auto c = lorentz::is_lorentzian_measure(load_measure());
    return Outcome{c.verdict, lorentz::certificate_to_json(c)};
  });
  auto* rep = measure_sub("report", "negative dependence report");
  rep->add_option("--c", c_text, "Rayleigh constant")->capture_default_str();
  on(rep, [&] {
    auto r = lorentz::negative_dependence_report(load_measure(), lorentz::parse_rational(c_text),
                                                 trials, seed);
    Outcome out;
    Json& j = out.result;
    j["pnc"] = r.pnc();
    if (r.pnc_failure) j["pnc_failure"] = pair_json(*r.pnc_failure);
    j["rank_sizes"] = sequence_json(r.rank_sizes);
    j["ulc"] = r.ulc;
    j["pairwise_bound"] = r.pairwise_bound();
    if (r.pairwise_failure) j["pairwise_failure"] = pair_json(*r.pairwise_failure);
    j["c"] = c_text;
    j["rayleigh_sampled"] = r.rayleigh_sampled();
    if (r.rayleigh_failure) j["rayleigh_failure"] = measure_rayleigh_json(*r.rayleigh_failure);
    j["strongly_rayleigh_sampled"] = r.strongly_rayleigh_sampled();
    if (r.strongly_rayleigh_failure)
      j["strongly_rayleigh_failure"] = measure_rayleigh_json(*r.strongly_rayleigh_failure);
    j["trials"] = r.trials;
    j["note"] = "Rayleigh properties are sampled: silence is evidence, not proof";
    out.verdict = r.pnc() && r.ulc && r.pairwise_bound() && r.rayleigh_sampled() &&
                  r.strongly_rayleigh_sampled();
    return out;
  });
  auto* field = measure_sub("field", "apply an external field");
  field->add_option("--x", point_text, "comma-separated positive rationals")->required();
  on(field, [&] {
    auto mu = lorentz::external_field(load_measure(), parse_point(point_text));
    return Outcome{true, lorentz::measure_to_json(mu)};
  });
  int ex_i = 0, ex_j = 1;
  std::string theta_text = "1/2";
  auto* exc = measure_sub("exclusion", "one symmetric exclusion step");
  exc->add_option("--i", ex_i)->capture_default_str();
  exc->add_option("--j", ex_j)->capture_default_str();
  exc->add_option("--theta", theta_text)->capture_default_str();
  on(exc, [&] {
    auto mu = lorentz::exclusion_evolution(load_measure(), ex_i, ex_j,
                                           lorentz::parse_rational(theta_text));
    return Outcome{true, lorentz::measure_to_json(mu)};
  });

  std::string rt_path;
  auto* rt = app.add_subcommand("roundtrip", "parse, serialize and reparse a JSON document");
  rt->add_option("file", rt_path)->required();
  on(rt, [&] {
    Json j = inputs.load(rt_path);
    auto [kind_name, canon] = lorentz::canonicalize(j);
    Outcome out;
    out.verdict = lorentz::roundtrip(j);
    out.result["kind"] = kind_name;
    out.result["canonical"] = canon;
    return out;
  });

  // Global options are accepted anywhere on the line.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (jobs > 0) lorentz::set_jobs(jobs);

  Json report;
  Json command = Json::array();
  for (int k = 1; k < argc; ++k) command.push_back(argv[k]);
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitHolds;
  try {
    Outcome out = action();
    report["inputs"] = inputs.list;
    report["seed"] = seed;
    report["verdict"] = out.verdict;
    report["result"] = std::move(out.result);
    code = out.verdict ? kExitHolds : kExitRefuted;
  } catch (const std::invalid_argument& e) {
    report["inputs"] = inputs.list;
    report["error"] = e.what();
    code = kExitInput;
  } catch (const nlohmann::json::exception& e) {
    report["inputs"] = inputs.list;
    report["error"] = e.what();
    code = kExitInput;
  }
  const auto stop = std::chrono::steady_clock::now();
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();
  if (want_float) add_floats(report["result"]);
  std::cout << report.dump(2) << "\n";
  return code;
}
