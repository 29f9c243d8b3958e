#include <algorithm>
#include <cmath>
#include <set>

#include "toric3/toriccode.hpp"

namespace toric3::codes {

ToricCode build_code(const geom::LatticePolytope& p, std::uint32_t q) {
  ToricCode c{gfq::make_field(q), p, p.points(), {}, 0, 0, false, {}};
  if (q > 256) throw std::invalid_argument("codes support q <= 256");
  const Int m = q - 1;
  const auto box = p.bounding_box();
  for (int i = 0; i < 3; ++i)
    if (box.hi[i] - box.lo[i] > m - 1)
      c.warnings.push_back("coordinate width of P in direction " + std::to_string(i + 1) + " exceeds q-2");

  std::set<LatticeVector> residues;
  for (const auto& a : c.monomials) residues.insert({((a[0] % m) + m) % m, ((a[1] % m) + m) % m, ((a[2] % m) + m) % m});
  c.injective = residues.size() == c.monomials.size();

  for (auto& row : gfq::evaluation_matrix(*c.field, c.monomials, 3)) c.generator.emplace_back(row.begin(), row.end());
  c.n = gfq::torus_size(q, 3);
  c.k = rank(*c.field, c.generator);
  return c;
}

Matrix row_reduce(const FiniteField& f, Matrix rows, const std::vector<std::size_t>& column_order,
                  std::vector<std::size_t>* pivots) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
  }
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col : order) {
    if (r == rows.size()) break;
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const gfq::Elem inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = static_cast<std::uint8_t>(f.mul(x, inv));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const gfq::Elem s = f.neg(rows[i][col]);
      for (std::size_t j = 0; j < n; ++j)
        if (rows[r][j]) rows[i][j] = static_cast<std::uint8_t>(f.add(rows[i][j], f.mul(s, rows[r][j])));
    }
    piv.push_back(col);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = piv;
  return rows;
}

std::size_t rank(const FiniteField& f, const Matrix& rows) { return row_reduce(f, rows).size(); }

std::uint64_t exhaustive_cost(std::uint32_t q, std::size_t k, std::size_t n) {
  const long double words = (std::pow(static_cast<long double>(q), static_cast<long double>(k)) - 1) / (q - 1);
  const long double cost = words * static_cast<long double>(n);
  return cost > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(cost);
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::Auto;
  if (s == "exhaustive") return Engine::Exhaustive;
  if (s == "bz") return Engine::BZ;
  throw std::invalid_argument("unknown engine: " + s + " (auto, exhaustive, bz)");
}

MinWeightResult min_weight_exhaustive(const ToricCode& c, const EngineOptions& opt) {
  return min_weight_exhaustive(*c.field, c.generator, opt);
}

namespace {

Engine choose(const ToricCode& code, Engine engine, const EngineOptions& opt) {
  if (engine != Engine::Auto) return engine;
  return static_cast<double>(exhaustive_cost(code.field->q(), code.k, code.n)) <= opt.budget ? Engine::Exhaustive
                                                                                              : Engine::BZ;
}

}  // namespace

std::uint64_t max_zero_count(const geom::LatticePolytope& p, std::uint32_t q, Engine engine, const EngineOptions& opt) {
  const auto code = build_code(p, q);
  const auto r = choose(code, engine, opt) == Engine::Exhaustive ? min_weight_exhaustive(code, opt)
                                                                 : min_weight_bz(code, opt);
  return code.n - r.d;
}

CodeParams params_report(const geom::LatticePolytope& p, std::uint32_t q, Engine engine, const EngineOptions& opt) {
  const auto code = build_code(p, q);
  CodeParams out;
  out.n = code.n;
  out.k = code.k;
  out.injective = code.injective;
  out.warnings = code.warnings;
  out.engine = choose(code, engine, opt);
  out.search = out.engine == Engine::Exhaustive ? min_weight_exhaustive(code, opt) : min_weight_bz(code, opt);
  out.d = out.search.d;
  out.n_p = code.n - out.d;
  const auto n = static_cast<std::int64_t>(code.n), k = static_cast<std::int64_t>(code.k);
  out.griesmer_d = bounds::griesmer_max_d(n, k, q);
  out.gv_d = bounds::gv_max_d(n, k, q);
  if (out.search.exact)
    out.bound_reports = bounds::polytope_bounds(p, q, out.n_p);
  else
    out.bound_reports = bounds::polytope_bounds(p, q);
  return out;
}

}  // namespace toric3::codes
