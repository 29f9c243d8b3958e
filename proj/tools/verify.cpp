#include "verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "toric3/bounds.hpp"
#include "toric3/geom.hpp"
#include "toric3/gfq.hpp"
#include "toric3/minklen.hpp"
#include "toric3/toriccode.hpp"

namespace toric3::cli {

namespace {

using geom::catalog;
using geom::LatticePolytope;
using minklen::minkowski_length;

struct Expectation {
  std::string id, source;
  Tier tier;
  Json expected;
  std::function<Json()> compute;
};

LatticePolytope sum(std::initializer_list<const char*> names) {
  std::vector<LatticePolytope> ps;
  for (const char* n : names) ps.push_back(catalog(n));
  return geom::minkowski_sum(ps);
}

Json at_least(Int v) { return Json{{"at_least", v}}; }

std::vector<Expectation> table1() {
  const std::string vol_src = "published volume table of the six small empty polytopes";
  std::vector<Expectation> out;
  const char* names[] = {"T0", "S1", "S2", "E", "K1", "K2"};
  for (int i = 0; i < 6; ++i) {
    const std::string n = names[i];
    out.push_back({"vol3_and_length:" + n, vol_src, Tier::Fast, Json{{"vol3", i}, {"L", 1}}, [n] {
                     const auto p = catalog(n);
                     return Json{{"vol3", geom::ambient_vol3(p)}, {"L", minkowski_length(p).length}};
                   }});
  }
  const std::string len_src = "length of dilated simplices and cubes";
  for (int d = 1; d <= 4; ++d) {
    const std::string n = "Delta3:" + std::to_string(d);
    out.push_back({"length:" + n, len_src, Tier::Fast, d, [n] { return Json(minkowski_length(catalog(n)).length); }});
  }
  for (int d = 1; d <= 2; ++d) {
    const std::string n = "Cube:" + std::to_string(d);
    out.push_back(
        {"length:" + n, len_src, Tier::Fast, 3 * d, [n] { return Json(minkowski_length(catalog(n)).length); }});
  }
  return out;
}

std::vector<Expectation> classify2() {
  const std::string src = "computer-checked pair facts";
  return {
      {"length:K1+K1", src, Tier::Fast, 2, [] { return Json(minkowski_length(sum({"K1", "K1"})).length); }},
      {"length:T0+T0Q1", src, Tier::Fast, 2, [] { return Json(minkowski_length(sum({"T0", "T0Q1"})).length); }},
      {"length:T0+T0Q2", src, Tier::Fast, 2, [] { return Json(minkowski_length(sum({"T0", "T0Q2"})).length); }},
      {"pair:K1,K1", src, Tier::Fast, "K1_K1",
       [] { return Json(minklen::classify_pair(catalog("K1"), catalog("K1")).label); }},
      {"pair:E,S2", src, Tier::Fast, "E_S2",
       [] { return Json(minklen::classify_pair(catalog("E"), catalog("S2")).label); }},
      {"tetra:S2 volume-two outputs are translates of S2", "tetrahedron partners of S2", Tier::Fast, true,
       [] {
         const auto s2 = geom::normal_translate(catalog("S2"));
         std::size_t hits = 0;
         for (const auto& t : minklen::find_tetra(catalog("S2"))) {
           if (t.dim() != 3 || geom::normalized_volume(t) != 2) continue;
           if (!(geom::normal_translate(t) == s2)) return Json(false);
           ++hits;
         }
         return Json(hits > 0);
       }},
      {"tetra:E is one shift of S2", "tetrahedron partners of E", Tier::Fast, true,
       [] {
         const auto r = minklen::find_tetra(catalog("E"));
         return Json(r.size() == 1 && r[0] == geom::normal_translate(catalog("S2")));
       }},
      {"triangles:T2", "triangle partners of T2", Tier::Fast, 0,
       [] { return Json(minklen::find_triangles(catalog("T2")).size()); }},
      {"tetra:K2 is S, equivalent to S2", "tetrahedron partners of K2", Tier::Fast, true,
       [] {
         const auto r = minklen::find_tetra(catalog("K2"));
         return Json(r.size() == 1 && r[0] == geom::normal_translate(catalog("S")) &&
                     geom::equivalent(r[0], catalog("S2")).has_value());
       }},
  };
}

std::vector<Expectation> classify3() {
  const std::string src = "computer-checked triple facts";
  return {
      {"length:3S2", src, Tier::Fast, 3, [] { return Json(minkowski_length(sum({"S2", "S2", "S2"})).length); }},
      {"length:E+2S2", src, Tier::Fast, 3, [] { return Json(minkowski_length(sum({"E", "S2", "S2"})).length); }},
      {"length:K2+2S", src, Tier::Fast, at_least(4),
       [] { return Json(minkowski_length(sum({"K2", "S", "S"})).length); }},
      {"length:K1+K1+S1", src, Tier::Fast, at_least(4),
       [] { return Json(minkowski_length(sum({"K1", "K1", "S1"})).length); }},
      {"length:3K1", src, Tier::Fast, at_least(4), [] { return Json(minkowski_length(sum({"K1", "K1", "K1"})).length); }},
      {"triple:S1,S1,S1", src, Tier::Fast, "i",
       [] { return Json(minklen::classify_triple(catalog("S1"), catalog("S1"), catalog("S1")).label); }},
      {"triple:S2,S2,S2", src, Tier::Fast, "iii",
       [] { return Json(minklen::classify_triple(catalog("S2"), catalog("S2"), catalog("S2")).label); }},
  };
}

std::vector<Expectation> lemma31() {
  const std::string src = "segment sweep next to a planar triangle, 0 <= p, q <= r <= 43";
  return {
      {"sweep:unit triangle", src, Tier::Fast, 14,
       [] { return Json(minklen::triangle_segment_sweep(catalog("Delta2"), 43)); }},
      {"sweep:T0", src, Tier::Fast, 2, [] { return Json(minklen::triangle_segment_sweep(catalog("T0"), 43)); }},
  };
}

std::vector<Expectation> lemma41() {
  const std::string src = "three-segment width scan";
  return {
      {"scan:case 1", src, Tier::Fast, 9, [] { return Json(minklen::three_segments_width_scan(1)); }},
      {"scan:case 2", src, Tier::Fast, 4, [] { return Json(minklen::three_segments_width_scan(2)); }},
  };
}

gfq::LaurentPolynomial trinomial(const gfq::FieldPtr& f, const std::vector<std::pair<LatticeVector, int>>& terms) {
  gfq::LaurentPolynomial p(f);
  for (const auto& [a, c] : terms) p.add_term(a, f->from_int(c));
  return p;
}

std::vector<Expectation> ex63(const VerifyOptions& opt) {
  const std::string src = "two-trinomial example over F_7";
  auto f7 = gfq::make_field(7);
  const auto f1 = trinomial(f7, {{{2, 1, 0}, 1}, {{1, 2, 0}, -2}, {{0, 0, 0}, 1}});
  const auto f2 = trinomial(f7, {{{3, 0, 0}, 1}, {{0, 0, 1}, -2}, {{0, 0, 2}, 1}});
  const unsigned th = opt.threads;
  return {
      {"zeros:f1", src, Tier::Fast, 54, [=] { return Json(gfq::count_zeros(f1, th)); }},
      {"zeros:f2", src, Tier::Fast, 54, [=] { return Json(gfq::count_zeros(f2, th)); }},
      {"common zeros:f1,f2", src, Tier::Fast, 12, [=] { return Json(gfq::common_zero_count(f1, f2, th)); }},
      {"zeros:f1*f2", src, Tier::Fast, 96, [=] { return Json(gfq::count_zeros(f1 * f2, th)); }},
      {"special bound:T0,q=7", src, Tier::Fast, 60,
       [] { return Json(bounds::special_bound(bounds::SpecialClass::T0, 7)); }},
      {"maxa bound:L=2,k=2,q=7", src, Tier::Fast, 120, [] { return Json(bounds::maxa_bound(2, 2, 7, 0, false)); }},
      {"N_P:EX63,q=7", src + ", maximum over the 15-point polytope", Tier::Long, 96,
       [th] {
         codes::EngineOptions e;
         e.threads = th;
         return Json(codes::max_zero_count(catalog("EX63"), 7, codes::Engine::BZ, e));
       }},
  };
}

std::vector<Expectation> ex72(const VerifyOptions& opt) {
  const std::string src = "width-one example table";
  std::vector<Expectation> out;
  const unsigned th = opt.threads;
  out.push_back({"N_P:q=5", src, Tier::Fast, 40, [] {
                   return Json(codes::max_zero_count(catalog("EX72"), 5, codes::Engine::Exhaustive));
                 }});
  const Int qs[] = {5, 7, 8, 9, 11};
  const Int row[] = {44, 96, 126, 168, 250};
  for (int i = 0; i < 5; ++i) {
    const Int q = qs[i];
    out.push_back({"bound:q=" + std::to_string(q), src, Tier::Fast, row[i],
                   [q] { return Json(bounds::width_one_final_bound(2, q)); }});
  }
  out.push_back({"beta:per_summand", src + ", threshold for all q", Tier::Fast,
                 Json{{"beta", {{"approx", 105.914}, {"tol", 5e-3}}}, {"prime_power", 107}}, [] {
                   const auto split = bounds::split_width_one(catalog("EX72"));
                   if (!split) return Json("not width one");
                   const auto b = bounds::beta(split->p0, split->p1, minkowski_length(catalog("EX72")).length);
                   return Json{{"beta", static_cast<double>(b.beta.value)}, {"prime_power", b.beta.prime_power}};
                 }});
  const Int np[] = {0, 90, 112, 160, 250};
  for (int i = 1; i < 5; ++i) {
    const Int q = qs[i];
    out.push_back({"N_P:q=" + std::to_string(q), src, Tier::Long, np[i], [q, th] {
                     codes::EngineOptions e;
                     e.threads = th;
                     return Json(codes::max_zero_count(catalog("EX72"), static_cast<std::uint32_t>(q), codes::Engine::BZ, e));
                   }});
  }
  return out;
}

std::vector<Expectation> section8(const VerifyOptions& opt) {
  const std::string src = "code parameter table for the eight-point polytopes";
  std::vector<Expectation> out;
  const unsigned th = opt.threads;
  auto d_of = [th](const char* name, std::uint32_t q) {
    return [=] {
      codes::EngineOptions e;
      e.threads = th;
      const auto c = codes::build_code(catalog(name), q);
      const auto r = q == 5 ? codes::min_weight_exhaustive(c, e) : codes::min_weight_bz(c, e);
      return Json(r.d);
    };
  };
  struct Row {
    const char* name;
    std::uint32_t q;
    Int d;
    Tier tier;
  };
  const Row rows[] = {{"P8", 5, 36, Tier::Fast},   {"P8", 7, 162, Tier::Fast},  {"P8", 8, 252, Tier::Fast},
                      {"Q8", 5, 36, Tier::Fast},   {"Q8", 7, 150, Tier::Fast},  {"P8", 9, 392, Tier::Long},
                      {"P8", 11, 861, Tier::Long}, {"P8", 13, 1535, Tier::Long}, {"Q8", 9, 416, Tier::Long},
                      {"Q8", 11, 850, Tier::Long}, {"Q8", 13, 1512, Tier::Long}};
  for (const auto& r : rows)
    out.push_back({std::string("d:") + r.name + ",q=" + std::to_string(r.q), src, r.tier, r.d, d_of(r.name, r.q)});
  const Int g[] = {47, 181, 296}, gv[] = {37, 159, 268};
  const Int qs[] = {5, 7, 8};
  for (int i = 0; i < 3; ++i) {
    const Int q = qs[i], n = (q - 1) * (q - 1) * (q - 1);
    out.push_back({"griesmer:q=" + std::to_string(q), src, Tier::Fast, g[i],
                   [=] { return Json(bounds::griesmer_max_d(n, 8, q)); }});
    out.push_back(
        {"gv:q=" + std::to_string(q), src, Tier::Fast, gv[i], [=] { return Json(bounds::gv_max_d(n, 8, q)); }});
  }
  return out;
}

std::vector<Expectation> expectations(const std::string& name, const VerifyOptions& opt) {
  if (name == "table1") return table1();
  if (name == "lemma31") return lemma31();
  if (name == "lemma41") return lemma41();
  if (name == "classify2") return classify2();
  if (name == "classify3") return classify3();
  if (name == "ex63") return ex63(opt);
  if (name == "ex72") return ex72(opt);
  if (name == "section8") return section8(opt);
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1", "lemma31", "lemma41", "classify2",
                                              "classify3", "ex63", "ex72", "section8"};
  return names;
}

bool matches(const Json& expected, const Json& actual) {
  if (expected.is_object() && expected.contains("at_least"))
    return actual.is_number() && actual.get<double>() >= expected["at_least"].get<double>();
  if (expected.is_object() && expected.contains("approx"))
    return actual.is_number() &&
           std::abs(actual.get<double>() - expected["approx"].get<double>()) <= expected["tol"].get<double>();
  if (expected.is_object()) {
    if (!actual.is_object() || actual.size() != expected.size()) return false;
    for (const auto& [key, value] : expected.items())
      if (!actual.contains(key) || !matches(value, actual[key])) return false;
    return true;
  }
  if (expected.is_number() && actual.is_number()) return expected.get<double>() == actual.get<double>();
  return expected == actual;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<Check> out;
  for (auto& e : expectations(name, opt)) {
    if (e.tier == Tier::Long && !opt.long_tier) continue;
    Check c{name, e.id, e.source, e.tier, e.expected, nullptr, false, {}};
    try {
      c.actual = e.compute();
      c.pass = matches(c.expected, c.actual);
    } catch (const std::exception& ex) {
      c.error = ex.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const Check& c) {
  Json j{{"id", c.id},       {"source", c.source}, {"tier", c.tier == Tier::Fast ? "fast" : "long"},
         {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

}  // namespace toric3::cli
