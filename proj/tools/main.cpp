#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric3/bounds.hpp"
#include "toric3/geom.hpp"
#include "toric3/gfq.hpp"
#include "toric3/minklen.hpp"
#include "toric3/toriccode.hpp"
#include "verify.hpp"

using namespace toric3;
using cli::Json;

namespace {

constexpr const char* kSchema = "toric3/1";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@name" from the catalog, or a JSON file {"vertices": [[x, y, z], ...], "ambient": 3}
geom::LatticePolytope parse_polytope(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return geom::catalog(arg.substr(1));
  Json j;
  try {
    j = Json::parse(read_file(arg));
  } catch (const Json::parse_error& e) {
    throw UsageError(arg + ": malformed JSON: " + e.what());
  }
  const char* key = j.contains("vertices") ? "vertices" : "points";
  if (!j.is_object() || !j.contains(key) || !j[key].is_array() || j[key].empty())
    throw UsageError(arg + ": expected a nonempty \"vertices\" array");
  const int ambient = j.value("ambient", 3);
  std::vector<LatticeVector> pts;
  for (const auto& v : j[key]) {
    if (!v.is_array() || v.size() < 2 || v.size() > 3) throw UsageError(arg + ": each vertex needs 2 or 3 coordinates");
    LatticeVector x;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) throw UsageError(arg + ": non-integer coordinate " + v[i].dump());
      x[i] = v[i].get<Int>();
    }
    pts.push_back(x);
  }
  return geom::LatticePolytope(pts, ambient);
}

Json vec(const LatticeVector& v, int dim = 3) {
  Json a = Json::array();
  for (int i = 0; i < dim; ++i) a.push_back(v[i]);
  return a;
}

Json vecs(const std::vector<LatticeVector>& vs, int dim = 3) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec(v, dim));
  return a;
}

Json polytope_json(const geom::LatticePolytope& p) {
  return Json{{"vertices", vecs(p.vertices(), p.ambient_dim())}, {"points", p.size()}};
}

Json map_json(const AffineUnimodularMap& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(Json{m.matrix()(i, 0), m.matrix()(i, 1), m.matrix()(i, 2)});
  return Json{{"matrix", rows}, {"translation", vec(m(LatticeVector{0, 0, 0}))}};
}

Json witness_json(const std::optional<geom::TupleWitness>& w) {
  if (!w) return nullptr;
  return Json{{"map", map_json(w->map)}, {"translations", vecs(w->translations)}};
}

std::string rational(const bounds::Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json rational_json(const bounds::Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return rational(r);
}

Json report_json(const bounds::BoundReport& r) {
  Json hyp = Json::array();
  for (const auto& h : r.hypotheses)
    hyp.push_back(Json{{"flag", h.flag}, {"met", h.met ? Json(*h.met) : Json("unknown")}});
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json j{{"name", r.name}, {"value", rational_json(r.value)}, {"hypotheses", hyp}, {"inputs", inputs}};
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  return j;
}

void emit(Json j) {
  if (j.is_object()) {
    Json out{{"schema", kSchema}};
    for (auto& [k, v] : j.items()) out[k] = v;
    j = out;
  }
  std::cout << j.dump(2) << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

Int to_int(const std::string& s) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + s);
  }
  if (used != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

long double to_real(const std::string& s) {
  try {
    return std::stold(s);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + s);
  }
}

Json threshold_json(const bounds::Threshold& t) {
  return Json{{"value", static_cast<double>(t.value)}, {"prime_power", t.prime_power}};
}

Json formula(const std::string& name, const std::vector<std::string>& a, bounds::BetaMode mode) {
  using namespace bounds;
  auto need = [&](std::size_t n, const char* sig) {
    if (a.size() != n) throw UsageError("formula " + name + " takes " + sig);
  };
  auto i = [&](std::size_t k) { return to_int(a[k]); };
  if (name == "special") {
    need(2, "class,q");
    return special_bound(parse_special_class(a[0]), i(1));
  }
  if (name == "width_one") {
    need(6, "vol3,vol2_0,vol2_1,N0,N1,q");
    return width_one_bound(i(0), i(1), i(2), i(3), i(4), i(5));
  }
  if (name == "finite_class") {
    need(3, "vol3,F,q");
    return rational_json(finite_class_bound(i(0), i(1), i(2)));
  }
  if (name == "dps_volume") {
    need(2, "vol3,q");
    return dps_volume_bound(i(0), i(1));
  }
  if (name == "maxa") {
    need(5, "L,k,q,vol3,has_T0_factor");
    return maxa_bound(i(0), i(1), i(2), i(3), i(4) != 0);
  }
  if (name == "cmax_threshold") {
    need(2, "L,vol3");
    const auto t = cmax_threshold(i(0), i(1));
    return Json{{"c", rational_json(t.c)}, {"q_min", threshold_json(t.q_min)}};
  }
  if (name == "cmax") {
    need(2, "L,q");
    return cmax_bound(i(0), i(1));
  }
  if (name == "gl") {
    need(2, "d,q");
    return static_cast<double>(gl_bound(i(0), to_real(a[1])));
  }
  if (name == "psi") {
    need(4, "k,m,d,q");
    return static_cast<double>(psi(i(0), i(1), i(2), to_real(a[3])));
  }
  if (name == "alpha") {
    need(2, "L,d");
    return threshold_json(alpha(i(0), i(1)));
  }
  if (name == "all") {
    need(2, "L,q");
    return all_bound(i(0), i(1));
  }
  if (name == "simplex") {
    need(3, "L,q,n");
    return simplex_bound(i(0), i(1), static_cast<int>(i(2)));
  }
  if (name == "beta") {
    need(6, "vol2_0,vol2_1,L_0,L_1,V,L");
    const auto b = beta(BetaInputs{i(0), i(1), i(2), i(3), i(4), i(5)}, mode);
    return Json{{"C", rational_json(b.big_c)}, {"c", rational_json(b.small_c)}, {"beta", threshold_json(b.beta)}};
  }
  if (name == "width_one_final") {
    need(2, "L,q");
    return width_one_final_bound(i(0), i(1));
  }
  if (name == "griesmer") {
    need(3, "n,k,q");
    return griesmer_max_d(i(0), i(1), i(2));
  }
  if (name == "gv") {
    need(3, "n,k,q");
    return gv_max_d(i(0), i(1), i(2));
  }
  if (name == "mindist") {
    need(3, "L,q,width_one");
    return mindist_lower_bound(i(0), i(1), i(2) != 0);
  }
  throw UsageError("unknown formula: " + name);
}

gfq::LaurentPolynomial read_polynomial(const std::string& arg, const gfq::FieldPtr& f, int nvars) {
  std::string text;
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (arg.find(';') != std::string::npos || arg.find(' ') != std::string::npos) {
    text = arg;
    for (auto& c : text)
      if (c == ';') c = '\n';
  } else {
    text = read_file(arg);
  }
  return gfq::parse_polynomial(text, f, nvars);
}

unsigned default_threads() {
  if (const char* env = std::getenv("TORIC3_THREADS")) {
    const Int v = to_int(env);
    if (v < 1) throw UsageError("TORIC3_THREADS must be positive");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint32_t field_size(Int q) {
  if (q < 2 || !gfq::is_prime_power(static_cast<std::uint64_t>(q))) throw UsageError("--q must be a prime power");
  return static_cast<std::uint32_t>(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polytopes, Minkowski length, and 3-dimensional toric codes"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  std::uint64_t seed = 20240601;
  app.add_option("--threads", threads, "worker threads (default: TORIC3_THREADS or all cores)");
  app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();

  std::string poly_a, poly_b, poly_c;
  auto* info = app.add_subcommand("info", "volume, width, length and shape of a polytope");
  info->add_option("polytope", poly_a, "@name or JSON file")->required();

  auto* length = app.add_subcommand("length", "Minkowski length with a certificate");
  length->add_option("polytope", poly_a)->required();
  bool all_decomp = false;
  length->add_flag("--all", all_decomp, "list every maximal segment decomposition");

  Int bound = 14;
  int target = 2;
  auto* segments = app.add_subcommand("segments", "primitive segments I with L(P + I) = target");
  segments->add_option("polytope", poly_a)->required();
  segments->add_option("--target", target)->capture_default_str();
  segments->add_option("--bound", bound)->capture_default_str();
  auto* triangles = app.add_subcommand("triangles", "triangles T with L(P + T) = L(P) + 1");
  triangles->add_option("polytope", poly_a)->required();
  triangles->add_option("--bound", bound)->capture_default_str();
  auto* tetra = app.add_subcommand("tetra", "tetrahedra T with L(P + T) = L(P) + 1");
  tetra->add_option("polytope", poly_a)->required();
  tetra->add_option("--bound", bound)->capture_default_str();

  auto* pair = app.add_subcommand("pair", "classify a pair with L(P + Q) = 2");
  pair->add_option("p", poly_a)->required();
  pair->add_option("q", poly_b)->required();
  auto* triple = app.add_subcommand("triple", "classify a triple with L(P + Q + R) = 3");
  triple->add_option("p", poly_a)->required();
  triple->add_option("q", poly_b)->required();
  triple->add_option("r", poly_c)->required();

  Int q = 0;
  int nvars = 3;
  std::string poly_text, common_text, random_on;
  auto* zeros = app.add_subcommand("zeros", "zeros of a Laurent polynomial on the torus");
  zeros->add_option("polynomial", poly_text, "file, '-' for stdin, or inline terms 'c a1 a2 a3; ...'");
  zeros->add_option("--q", q)->required();
  zeros->add_option("--nvars", nvars)->check(CLI::IsMember({2, 3}))->capture_default_str();
  zeros->add_option("--common", common_text, "second polynomial: also count common zeros");
  zeros->add_option("--random", random_on, "random polynomial supported on this polytope (uses --seed)");

  std::string engine_name = "auto", report = "json";
  double budget = 1e10;
  std::optional<std::uint64_t> early_stop;
  std::size_t max_k = 24;
  auto* code = app.add_subcommand("code", "parameters [n, k, d] of the toric code");
  code->add_option("polytope", poly_a)->required();
  code->add_option("--q", q)->required();
  code->add_option("--engine", engine_name)->check(CLI::IsMember({"auto", "exhaustive", "bz"}))->capture_default_str();
  code->add_option("--report", report)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  code->add_option("--budget", budget, "coordinate updates allowed to the exhaustive engine")->capture_default_str();
  code->add_option("--early-stop", early_stop, "stop at the first codeword of weight <= this");
  code->add_option("--max-k", max_k, "largest dimension the bz engine accepts")->capture_default_str();

  std::string formula_name, formula_args, beta_mode = "per_summand";
  std::optional<std::uint64_t> n_p;
  auto* bnds = app.add_subcommand("bounds", "bounds on N_P, or a single formula");
  bnds->add_option("polytope", poly_a);
  bnds->add_option("--q", q);
  bnds->add_option("--n-p", n_p, "known N_P, to mark each bound as holding or violated");
  bnds->add_option("--formula", formula_name, "evaluate one formula by name");
  bnds->add_option("--args", formula_args, "comma-separated formula arguments");
  bnds->add_option("--beta-mode", beta_mode)->check(CLI::IsMember({"per_summand", "global"}))->capture_default_str();

  std::string suite;
  bool fast = false, long_tier = false;
  auto* verify = app.add_subcommand("verify", "reproduce the reference facts");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_flag("--fast", fast, "only the quick expectations (default)");
  verify->add_flag("--long", long_tier, "also the expectations that take minutes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (threads == 0) threads = default_threads();

    if (*info) {
      const auto p = parse_polytope(poly_a);
      Json j = polytope_json(p);
      j["dim"] = p.dim();
      j["vol3"] = p.dim() == 3 ? geom::ambient_vol3(p) : 0;
      j["vol2"] = p.dim() == 2 ? Json(geom::vol2(p)) : Json(nullptr);
      j["relative_volume"] = p.relative_volume();
      j["L"] = minklen::minkowski_length(p).length;
      if (p.dim() == 3) {
        const auto w = geom::lattice_width(p);
        j["width"] = w.width;
        j["width_direction"] = vec(w.direction);
      } else {
        j["width"] = 0;
      }
      const auto s = geom::shape_predicates(p);
      j["empty"] = s.is_empty;
      j["clean"] = s.is_clean;
      j["interior_points"] = s.interior_count;
      j["boundary_points"] = s.boundary_count;
      j["facets"] = s.facet_count;
      j["dps"] = minklen::is_dps(p);
      emit(j);
    } else if (*length) {
      const auto p = parse_polytope(poly_a);
      const auto r = minklen::minkowski_length(p);
      Json j{{"L", r.length},
             {"certificate", {{"anchor", vec(r.certificate.anchor)}, {"directions", vecs(r.certificate.directions)}}}};
      if (all_decomp) {
        Json all = Json::array();
        for (const auto& d : minklen::maximal_segment_decompositions(p))
          all.push_back(Json{{"anchor", vec(d.anchor)}, {"directions", vecs(d.directions)}});
        j["decompositions"] = all;
      }
      emit(j);
    } else if (*segments) {
      const auto p = parse_polytope(poly_a);
      const auto us = minklen::find_segments(p, target, bound);
      emit(Json{{"target", target}, {"bound", bound}, {"count", us.size()}, {"segments", vecs(us)}});
    } else if (*triangles || *tetra) {
      const auto p = parse_polytope(poly_a);
      const auto found = *triangles ? minklen::find_triangles(p, bound) : minklen::find_tetra(p, bound);
      Json list = Json::array();
      for (const auto& t : found) list.push_back(polytope_json(t));
      emit(Json{{"bound", bound}, {"count", found.size()}, {*triangles ? "triangles" : "tetrahedra", list}});
    } else if (*pair) {
      const auto r = minklen::classify_pair(parse_polytope(poly_a), parse_polytope(poly_b));
      emit(Json{{"label", r.label}, {"L", r.length}, {"swapped", r.swapped}, {"witness", witness_json(r.witness)}});
    } else if (*triple) {
      const auto r =
          minklen::classify_triple(parse_polytope(poly_a), parse_polytope(poly_b), parse_polytope(poly_c));
      emit(Json{{"label", r.label}, {"L", r.length}, {"order", r.order}, {"witness", witness_json(r.witness)}});
    } else if (*zeros) {
      const auto f = gfq::make_field(field_size(q));
      gfq::LaurentPolynomial g(f, nvars);
      if (!random_on.empty()) {
        if (nvars != 3) throw UsageError("--random needs --nvars 3");
        g = gfq::random_polynomial(parse_polytope(random_on), f, seed);
      } else if (!poly_text.empty()) {
        g = read_polynomial(poly_text, f, nvars);
      } else {
        throw UsageError("give a polynomial or --random");
      }
      Json j{{"q", q}, {"nvars", nvars}, {"polynomial", gfq::format_polynomial(g)}, {"N_f", gfq::count_zeros(g, threads)}};
      if (!common_text.empty()) {
        const auto h = read_polynomial(common_text, f, nvars);
        j["N_g"] = gfq::count_zeros(h, threads);
        j["common"] = gfq::common_zero_count(g, h, threads);
      }
      emit(j);
    } else if (*code) {
      const auto p = parse_polytope(poly_a);
      codes::EngineOptions opt;
      opt.threads = threads;
      opt.budget = budget;
      opt.early_stop = early_stop;
      opt.max_bz_k = max_k;
      const auto r = codes::params_report(p, field_size(q), codes::parse_engine(engine_name), opt);
      const char* used = r.engine == codes::Engine::Exhaustive ? "exhaustive" : "bz";
      if (report == "csv") {
        std::cout << "n,k,d,N_P,griesmer,gv,engine,exact\n"
                  << r.n << "," << r.k << "," << r.d << "," << r.n_p << "," << r.griesmer_d << "," << r.gv_d << ","
                  << used << "," << (r.search.exact ? "true" : "false") << "\n";
        std::cout << "bound,value,holds,hypotheses_met\n";
        for (const auto& b : r.bound_reports)
          std::cout << b.name << "," << rational(b.value) << ","
                    << (b.holds ? (*b.holds ? "true" : "false") : "unknown") << ","
                    << (b.hypotheses_met() ? "true" : "false") << "\n";
      } else {
        Json bl = Json::array();
        for (const auto& b : r.bound_reports) bl.push_back(report_json(b));
        emit(Json{{"q", q},
                  {"n", r.n},
                  {"k", r.k},
                  {"d", r.d},
                  {"N_P", r.n_p},
                  {"griesmer", r.griesmer_d},
                  {"gv", r.gv_d},
                  {"injective", r.injective},
                  {"engine", used},
                  {"exact", r.search.exact},
                  {"codewords", r.search.codewords},
                  {"warnings", r.warnings},
                  {"bounds", bl}});
      }
    } else if (*bnds) {
      const auto mode = bounds::parse_beta_mode(beta_mode);
      if (!formula_name.empty()) {
        emit(Json{{"formula", formula_name},
                  {"args", formula_args},
                  {"value", formula(formula_name, split(formula_args, ','), mode)}});
      } else {
        if (poly_a.empty() || q == 0) throw UsageError("bounds needs a polytope and --q, or --formula");
        const auto p = parse_polytope(poly_a);
        Json arr = Json::array();
        for (const auto& b : bounds::polytope_bounds(p, field_size(q), n_p)) arr.push_back(report_json(b));
        if (mode == bounds::BetaMode::Global)
          if (auto s = bounds::split_width_one(p)) {
            const auto b = bounds::beta(s->p0, s->p1, minklen::minkowski_length(p).length, mode);
            arr.push_back(Json{{"name", "beta_global"}, {"value", threshold_json(b.beta)}});
          }
        std::cout << arr.dump(2) << "\n";
      }
    } else if (*verify) {
      if (fast && long_tier) throw UsageError("--fast and --long are exclusive");
      cli::VerifyOptions opt;
      opt.threads = threads;
      opt.long_tier = long_tier;
      std::vector<std::string> names;
      if (suite == "all")
        names = cli::suite_names();
      else
        names.push_back(suite);
      Json suites = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        Json checks = Json::array();
        std::size_t passed = 0, failed = 0;
        for (const auto& c : cli::run_suite(name, opt)) {
          (c.pass ? passed : failed) += 1;
          checks.push_back(cli::to_json(c));
        }
        ok = ok && failed == 0;
        suites.push_back(Json{{"suite", name}, {"passed", passed}, {"failed", failed}, {"checks", checks}});
      }
      emit(Json{{"tier", long_tier ? "long" : "fast"}, {"ok", ok}, {"suites", suites}});
      return ok ? 0 : 1;
    }
  } catch (const codes::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
