#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric3/bounds.hpp"
#include "toric3/geom.hpp"
#include "toric3/gfq.hpp"
#include "toric3/minklen.hpp"
#include "toric3/toriccode.hpp"
#include "verify.hpp"

namespace py = pybind11;
using namespace toric3;
using geom::LatticePolytope;

namespace {

using Point = std::vector<Int>;

LatticeVector to_vec(const Point& p) {
  if (p.size() < 2 || p.size() > 3) throw py::value_error("points need 2 or 3 coordinates");
  return {p[0], p[1], p.size() == 3 ? p[2] : 0};
}

std::vector<Point> to_points(const std::vector<LatticeVector>& vs, int dim) {
  std::vector<Point> out;
  for (const auto& v : vs) out.push_back(dim == 2 ? Point{v[0], v[1]} : Point{v[0], v[1], v[2]});
  return out;
}

LatticePolytope make_polytope(const std::vector<Point>& pts, int ambient) {
  std::vector<LatticeVector> v;
  for (const auto& p : pts) v.push_back(to_vec(p));
  return LatticePolytope(v, ambient);
}

gfq::LaurentPolynomial make_poly(const std::vector<std::pair<Point, std::int64_t>>& terms, std::uint32_t q,
                                 int nvars) {
  const auto f = gfq::make_field(q);
  gfq::LaurentPolynomial g(f, nvars);
  for (const auto& [a, c] : terms) g.add_term(to_vec(a), f->from_int(c));
  return g;
}

py::dict report_dict(const bounds::BoundReport& r) {
  py::list hyp;
  for (const auto& h : r.hypotheses) hyp.append(py::make_tuple(h.flag, h.met ? py::cast(*h.met) : py::none()));
  py::dict d;
  d["name"] = r.name;
  d["value"] = r.value.denominator() == 1
                   ? py::cast(r.value.numerator())
                   : py::module_::import("fractions").attr("Fraction")(r.value.numerator(), r.value.denominator());
  d["hypotheses"] = hyp;
  d["inputs"] = r.inputs;
  d["holds"] = r.holds ? py::cast(*r.holds) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattice polytopes, Minkowski length, and toric codes";

  py::class_<LatticePolytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("points"), py::arg("ambient") = 3)
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("ambient_dim", &LatticePolytope::ambient_dim)
      .def_property_readonly("vertices", [](const LatticePolytope& p) { return to_points(p.vertices(), p.ambient_dim()); })
      .def_property_readonly("points", [](const LatticePolytope& p) { return to_points(p.points(), p.ambient_dim()); })
      .def("__len__", &LatticePolytope::size)
      .def("__eq__", [](const LatticePolytope& a, const LatticePolytope& b) { return a == b; })
      .def("translated", [](const LatticePolytope& p, const Point& t) { return p.translated(to_vec(t)); })
      .def("__add__", [](const LatticePolytope& a, const LatticePolytope& b) { return geom::minkowski_sum(a, b); })
      .def("__repr__", [](const LatticePolytope& p) {
        return "Polytope(dim=" + std::to_string(p.dim()) + ", points=" + std::to_string(p.size()) + ")";
      });

  m.def("catalog", &geom::catalog, py::arg("name"));
  m.def("catalog_names", &geom::catalog_names);
  m.def("vol3", &geom::ambient_vol3);
  m.def("vol2", &geom::vol2);
  m.def("mixed_area", &geom::mixed_area);
  m.def("lattice_width", [](const LatticePolytope& p) {
    const auto w = geom::lattice_width(p);
    return py::make_tuple(w.width, Point{w.direction[0], w.direction[1], w.direction[2]});
  });
  m.def("equivalent", [](const LatticePolytope& a, const LatticePolytope& b) { return geom::equivalent(a, b).has_value(); });
  m.def("minkowski_length", [](const LatticePolytope& p) { return minklen::minkowski_length(p).length; });
  m.def("is_dps", &minklen::is_dps);

  m.def(
      "count_zeros",
      [](const std::vector<std::pair<Point, std::int64_t>>& terms, std::uint32_t q, int nvars, unsigned threads) {
        return gfq::count_zeros(make_poly(terms, q, nvars), threads);
      },
      py::arg("terms"), py::arg("q"), py::arg("nvars") = 3, py::arg("threads") = 1,
      "zeros on the torus of sum c * x^a over terms [(a, c), ...]");
  m.def(
      "common_zero_count",
      [](const std::vector<std::pair<Point, std::int64_t>>& f, const std::vector<std::pair<Point, std::int64_t>>& g,
         std::uint32_t q, int nvars) { return gfq::common_zero_count(make_poly(f, q, nvars), make_poly(g, q, nvars)); },
      py::arg("f"), py::arg("g"), py::arg("q"), py::arg("nvars") = 3);

  py::register_exception<codes::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  m.def(
      "code_params",
      [](const LatticePolytope& p, std::uint32_t q, const std::string& engine, unsigned threads) {
        codes::EngineOptions opt;
        opt.threads = threads;
        codes::CodeParams r;
        {
          py::gil_scoped_release release;
          r = codes::params_report(p, q, codes::parse_engine(engine), opt);
        }
        py::dict d;
        d["n"] = r.n;
        d["k"] = r.k;
        d["d"] = r.d;
        d["N_P"] = r.n_p;
        d["griesmer"] = r.griesmer_d;
        d["gv"] = r.gv_d;
        d["injective"] = r.injective;
        py::list bl;
        for (const auto& b : r.bound_reports) bl.append(report_dict(b));
        d["bounds"] = bl;
        return d;
      },
      py::arg("polytope"), py::arg("q"), py::arg("engine") = "auto", py::arg("threads") = 1);
  m.def(
      "max_zero_count",
      [](const LatticePolytope& p, std::uint32_t q, const std::string& engine, unsigned threads) {
        codes::EngineOptions opt;
        opt.threads = threads;
        py::gil_scoped_release release;
        return codes::max_zero_count(p, q, codes::parse_engine(engine), opt);
      },
      py::arg("polytope"), py::arg("q"), py::arg("engine") = "auto", py::arg("threads") = 1);

  auto b = m.def_submodule("bounds");
  b.def("special", [](const std::string& cls, Int q) { return bounds::special_bound(bounds::parse_special_class(cls), q); });
  b.def("maxa", &bounds::maxa_bound, py::arg("L"), py::arg("k"), py::arg("q"), py::arg("vol3") = 0,
        py::arg("has_t0_factor") = false);
  b.def("width_one_final", &bounds::width_one_final_bound);
  b.def("simplex", &bounds::simplex_bound);
  b.def("griesmer", &bounds::griesmer_max_d);
  b.def("gv", &bounds::gv_max_d);
  b.def("mindist", &bounds::mindist_lower_bound);
  b.def("alpha", [](Int l, Int d) {
    const auto a = bounds::alpha(l, d);
    return py::make_tuple(static_cast<double>(a.value), a.prime_power);
  });
  b.def(
      "beta",
      [](Int v0, Int v1, Int l0, Int l1, Int mixed, Int l, const std::string& mode) {
        const auto r = bounds::beta(bounds::BetaInputs{v0, v1, l0, l1, mixed, l}, bounds::parse_beta_mode(mode));
        return py::make_tuple(static_cast<double>(r.beta.value), r.beta.prime_power);
      },
      py::arg("vol2_0"), py::arg("vol2_1"), py::arg("L_0"), py::arg("L_1"), py::arg("mixed"), py::arg("L"),
      py::arg("mode") = "per_summand");
  b.def("for_polytope", [](const LatticePolytope& p, Int q, std::optional<std::uint64_t> n_p) {
    py::list out;
    for (const auto& r : bounds::polytope_bounds(p, q, n_p)) out.append(report_dict(r));
    return out;
  }, py::arg("polytope"), py::arg("q"), py::arg("n_p") = py::none());

  m.def("verify_suites", &cli::suite_names);
  m.def(
      "verify",
      [](const std::string& suite, bool long_tier) {
        cli::VerifyOptions opt;
        opt.long_tier = long_tier;
        py::list out;
        for (const auto& c : cli::run_suite(suite, opt)) out.append(py::make_tuple(c.id, c.pass, c.actual.dump()));
        return out;
      },
      py::arg("suite"), py::arg("long_tier") = false);
}
