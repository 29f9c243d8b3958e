#include <algorithm>
#include <sstream>
#include <thread>

#include "toric3/gfq.hpp"
#include "toric3/rng.hpp"

namespace toric3::gfq {

LaurentPolynomial::LaurentPolynomial(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  if (nvars != 2 && nvars != 3) throw std::invalid_argument("polynomials have 2 or 3 variables");
}

void LaurentPolynomial::add_term(const LatticeVector& a, Elem c) {
  if (nvars_ == 2 && a[2] != 0) throw std::invalid_argument("bivariate polynomial with a z exponent");
  if (c >= field_->q()) throw std::invalid_argument("coefficient outside the field");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (inserted) return;
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Elem LaurentPolynomial::coefficient(const LatticeVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<LatticeVector> LaurentPolynomial::support() const {
  std::vector<LatticeVector> out;
  for (const auto& [a, c] : terms_) out.push_back(a);
  return out;
}

geom::LatticePolytope LaurentPolynomial::newton_polytope() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no Newton polytope");
  return geom::LatticePolytope(support(), nvars_);
}

Elem LaurentPolynomial::evaluate(const std::vector<Elem>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
  const auto& f = *field_;
  Elem s = 0;
  for (const auto& [a, c] : terms_) {
    Elem m = c;
    for (int i = 0; i < nvars_; ++i) m = f.mul(m, f.pow(point[i], a[i]));
    s = f.add(s, m);
  }
  return s;
}

LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.field_->q() != g.field_->q() || f.nvars_ != g.nvars_) throw std::invalid_argument("incompatible polynomials");
  LaurentPolynomial h = f;
  for (const auto& [a, c] : g.terms_) h.add_term(a, c);
  return h;
}

LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.field_->q() != g.field_->q() || f.nvars_ != g.nvars_) throw std::invalid_argument("incompatible polynomials");
  LaurentPolynomial h(f.field_, f.nvars_);
  for (const auto& [a, c] : f.terms_)
    for (const auto& [b, d] : g.terms_) h.add_term(a + b, f.field_->mul(c, d));
  return h;
}

LaurentPolynomial parse_polynomial(const std::string& text, FieldPtr field, int nvars) {
  LaurentPolynomial f(field, nvars);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string coef;
    if (!(ls >> coef)) continue;
    LatticeVector a;
    for (int i = 0; i < nvars; ++i)
      if (!(ls >> a[i])) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + std::to_string(nvars) + " exponents");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing input");
    f.add_term(a, field->parse(coef));
  }
  return f;
}

std::string format_polynomial(const LaurentPolynomial& f) {
  std::ostringstream out;
  for (const auto& [a, c] : f.terms()) {
    out << f.field().format(c);
    for (int i = 0; i < f.nvars(); ++i) out << ' ' << a[i];
    out << '\n';
  }
  return out.str();
}

std::uint64_t torus_size(std::uint32_t q, int nvars) {
  std::uint64_t n = 1;
  for (int i = 0; i < nvars; ++i) n *= q - 1;
  return n;
}

std::vector<Elem> torus_point(const FiniteField& field, int nvars, std::uint64_t index) {
  const std::uint64_t m = field.q() - 1;
  std::vector<Elem> pt(nvars);
  for (int i = nvars; i-- > 0;) {
    pt[i] = field.exp(static_cast<std::int64_t>(index % m));
    index /= m;
  }
  return pt;
}

std::vector<std::vector<Elem>> evaluation_matrix(const FiniteField& field, const std::vector<LatticeVector>& exponents,
                                                 int nvars) {
  const std::int64_t m = field.q() - 1;
  const std::uint64_t n = torus_size(field.q(), nvars);
  std::vector<std::vector<Elem>> rows;
  rows.reserve(exponents.size());
  for (const auto& a : exponents) {
    std::vector<Elem> row(n);
    std::vector<std::int64_t> r(3);
    for (int i = 0; i < 3; ++i) r[i] = ((a[i] % m) + m) % m;
    std::uint64_t idx = 0;
    const std::int64_t kmax = nvars == 3 ? m : 1;
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; j < m; ++j)
        for (std::int64_t k = 0; k < kmax; ++k) row[idx++] = field.exp(r[0] * i + r[1] * j + r[2] * k);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Terms as (log c, exponents mod q-1).
struct LogTerm {
  std::int64_t logc;
  std::int64_t a[3];
};

std::vector<LogTerm> log_terms(const LaurentPolynomial& f) {
  const std::int64_t m = f.field().q() - 1;
  std::vector<LogTerm> out;
  for (const auto& [a, c] : f.terms()) {
    LogTerm t{f.field().log(c), {0, 0, 0}};
    for (int i = 0; i < 3; ++i) t.a[i] = ((a[i] % m) + m) % m;
    out.push_back(t);
  }
  return out;
}

// visit(i, j, k, value) over the first-coordinate slice [i0, i1)
template <class Visit>
void scan_slice(const FiniteField& field, int nvars, const std::vector<LogTerm>& terms, std::int64_t i0, std::int64_t i1,
                Visit visit) {
  const std::int64_t m = field.q() - 1;
  const std::int64_t kmax = nvars == 3 ? m : 1;
  std::vector<std::int64_t> cur(terms.size());
  for (std::int64_t i = i0; i < i1; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < terms.size(); ++t) cur[t] = (terms[t].logc + terms[t].a[0] * i + terms[t].a[1] * j) % m;
      for (std::int64_t k = 0; k < kmax; ++k) {
        Elem s = 0;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          s = field.add(s, field.exp(cur[t]));
          cur[t] += terms[t].a[2];
          if (cur[t] >= m) cur[t] -= m;
        }
        visit(s);
      }
    }
}

template <class Count>
std::uint64_t parallel_count(std::int64_t m, unsigned threads, Count count) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));
  if (threads == 1) return count(0, m);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] { partial[w] = count(m * w / threads, m * (w + 1) / threads); });
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

}  // namespace

std::uint64_t count_zeros(const LaurentPolynomial& f, unsigned threads) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial vanishes everywhere");
  const auto terms = log_terms(f);
  const auto& field = f.field();
  return parallel_count(field.q() - 1, threads, [&](std::int64_t i0, std::int64_t i1) {
    std::uint64_t n = 0;
    scan_slice(field, f.nvars(), terms, i0, i1, [&](Elem v) { n += v == 0; });
    return n;
  });
}

std::uint64_t common_zero_count(const LaurentPolynomial& f, const LaurentPolynomial& g, unsigned threads) {
  if (f.field().q() != g.field().q() || f.nvars() != g.nvars()) throw std::invalid_argument("dimension or field mismatch");
  if (f.is_zero()) return g.is_zero() ? torus_size(f.field().q(), f.nvars()) : count_zeros(g, threads);
  if (g.is_zero()) return count_zeros(f, threads);
  const auto tf = log_terms(f), tg = log_terms(g);
  const auto& field = f.field();
  return parallel_count(field.q() - 1, threads, [&](std::int64_t i0, std::int64_t i1) {
    std::vector<bool> zf;
    scan_slice(field, f.nvars(), tf, i0, i1, [&](Elem v) { zf.push_back(v == 0); });
    std::uint64_t n = 0, idx = 0;
    scan_slice(field, g.nvars(), tg, i0, i1, [&](Elem v) { n += zf[idx++] && v == 0; });
    return n;
  });
}

LaurentPolynomial monomial_substitution(const LaurentPolynomial& f, const AffineUnimodularMap& phi) {
  if (phi.dim() != f.nvars()) throw std::invalid_argument("map dimension does not match the polynomial");
  LaurentPolynomial g(f.field_ptr(), f.nvars());
  for (const auto& [a, c] : f.terms()) g.add_term(phi(a), c);
  return g;
}

LaurentPolynomial random_polynomial(const geom::LatticePolytope& p, FieldPtr field, std::uint64_t seed) {
  Rng rng(seed);
  const int nvars = p.ambient_dim();
  for (;;) {
    LaurentPolynomial f(field, nvars);
    for (const auto& x : p.points()) f.add_term(x, static_cast<Elem>(rng.below(field->q())));
    if (!f.is_zero()) return f;
  }
}

std::pair<LaurentPolynomial, LaurentPolynomial> width_one_split(const LaurentPolynomial& f) {
  if (f.nvars() != 3) throw std::invalid_argument("width_one_split needs a trivariate polynomial");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Int lo = f.terms().begin()->first[2], hi = lo;
  for (const auto& [a, c] : f.terms()) lo = std::min(lo, a[2]), hi = std::max(hi, a[2]);
  if (hi - lo != 1) throw std::invalid_argument("support must have z-width exactly one");
  LaurentPolynomial f0(f.field_ptr(), 2), f1(f.field_ptr(), 2);
  for (const auto& [a, c] : f.terms()) (a[2] == lo ? f0 : f1).add_term({a[0], a[1], 0}, c);
  return {f0, f1};
}

}  // namespace toric3::gfq
