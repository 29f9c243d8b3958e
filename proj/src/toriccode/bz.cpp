#include <algorithm>
#include <array>
#include <optional>
#include <atomic>
#include <numeric>
#include <set>

#include "kernel.hpp"
#include "toric3/rng.hpp"
#include "toric3/toriccode.hpp"
#include "workers.hpp"

namespace toric3::codes {

namespace {

// A systematic generator matrix together with its Gray-code step rows:
// step[i][t] = (g^(t+1) - g^t) * rows[i].
struct Gamma {
  Matrix rows;
  std::vector<std::vector<Row>> step;
};

// Rows are stored in the kernel encoding.
Gamma make_gamma(const FiniteField& f, const Matrix& rows) {
  const detail::AddKernel kernel(f);
  Gamma gm;
  const std::uint32_t q = f.q();
  for (const auto& r : rows) {
    gm.rows.push_back(kernel.encode(r));
    std::vector<Row> s;
    for (std::uint32_t t = 0; t + 1 < q; ++t)
      s.push_back(kernel.encode(detail::scaled(f, r, f.sub(f.exp(t + 1), f.exp(t)))));
    gm.step.push_back(std::move(s));
  }
  return gm;
}

class LevelSearch {
 public:
  LevelSearch(const FiniteField& f, const EngineOptions& opt, std::uint64_t n)
      : f_(f), opt_(opt), kernel_(f), best_(n + 1), n_(n) {}

  // All messages of weight exactly w with leading coefficient 1.
  void run(const Gamma& gm, std::size_t w) {
    const std::size_t k = gm.rows.size();
    if (w == 0 || w > k) return;
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t i = 0; i < k; ++i) {
      if (w == 1) {
        tasks.push_back({i, k});
        continue;
      }
      for (std::size_t j = i + 1; j < k; ++j)
        if (k - j - 1 >= w - 2) tasks.push_back({i, j});
    }
    detail::run_tasks(tasks.size(), opt_.threads, [&](std::size_t ti) {
      if (stop_) return;
      search(gm, w, tasks[ti].first, tasks[ti].second);
    });
  }

  std::uint64_t best() const { return best_.get(); }
  Row witness() const { return kernel_.decode(best_.word()); }
  std::uint64_t visited() const { return visited_; }
  bool stopped() const { return stop_; }

 private:
  void hit(std::uint64_t w, const Row& c) {
    best_.offer(w, c.data(), n_);
    if (opt_.early_stop && w <= *opt_.early_stop) stop_ = true;
  }

  void search(const Gamma& gm, std::size_t w, std::size_t i, std::size_t j) {
    const std::size_t k = gm.rows.size();
    const std::uint32_t q = f_.q();
    std::uint64_t local = 0;
    if (w == 1) {
      hit(detail::weight(gm.rows[i].data(), n_), gm.rows[i]);
      ++visited_;
      return;
    }
    // remaining w-2 rows chosen from (j, k)
    const std::size_t s = w - 2;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), j + 1);
    std::vector<std::size_t> digits_row(w - 1);
    std::vector<std::uint32_t> counter(w - 1), gray(w - 1);
    Row c(n_);
    for (;;) {
      c = gm.rows[i];
      kernel_.add(c.data(), gm.rows[j].data(), n_);
      digits_row[0] = j;
      for (std::size_t x = 0; x < s; ++x) {
        kernel_.add(c.data(), gm.rows[comb[x]].data(), n_);
        digits_row[x + 1] = comb[x];
      }
      ++local;
      std::uint64_t wt = detail::weight(c.data(), n_);
      if (wt < best_.get()) hit(wt, c);
      std::fill(counter.begin(), counter.end(), 0);
      std::fill(gray.begin(), gray.end(), 0);
      const std::size_t r = w - 1;
      for (;;) {
        std::size_t d = 0;
        while (d < r && counter[d] + 2 >= q) counter[d++] = 0;
        if (d == r) break;
        ++counter[d];
        wt = kernel_.add_weight(c.data(), gm.step[digits_row[d]][gray[d]].data(), n_);
        gray[d] = gray[d] + 2 == q ? 0 : gray[d] + 1;
        ++local;
        if (wt < best_.get()) hit(wt, c);
        if ((local & 0xFFFF) == 0 && stop_) break;
      }
      if (stop_) break;
      // next combination
      std::size_t x = s;
      while (x > 0 && comb[x - 1] == k - s + x - 1) --x;
      if (x == 0) break;
      ++comb[x - 1];
      for (std::size_t y = x; y < s; ++y) comb[y] = comb[y - 1] + 1;
    }
    visited_ += local;
  }

  const FiniteField& f_;
  const EngineOptions& opt_;
  detail::AddKernel kernel_;
  detail::BestWord best_;
  std::atomic<std::uint64_t> visited_{0};
  std::atomic<bool> stop_{false};
  std::uint64_t n_;
};

std::uint64_t lower_bound(const std::vector<std::size_t>& deficits, std::size_t w) {
  std::uint64_t lb = 0;
  for (std::size_t dft : deficits)
    if (w + 1 > dft) lb += w + 1 - dft;
  return lb;
}

// Levels 1, 2, ... over all gammas until the lower bound meets the best weight.
MinWeightResult run_levels(const FiniteField& f, const std::vector<Gamma>& gammas,
                           const std::vector<std::size_t>& deficits, std::size_t n, const EngineOptions& opt) {
  const std::size_t k = gammas.front().rows.size();
  LevelSearch search(f, opt, n);
  MinWeightResult res;
  res.tiles = deficits.size();
  for (std::size_t w = 1; w <= k; ++w) {
    for (const auto& gm : gammas) {
      search.run(gm, w);
      if (search.stopped()) break;
    }
    res.levels = static_cast<int>(w);
    if (search.stopped() || lower_bound(deficits, w) >= search.best()) break;
  }
  res.d = search.best();
  res.codewords = search.visited();
  res.exact = !search.stopped();
  res.witness = search.witness();
  return res;
}

}  // namespace

MinWeightResult min_weight_bz(const FiniteField& f, const Matrix& g0, const EngineOptions& opt) {
  Matrix g = row_reduce(f, g0);
  const std::size_t k = g.size();
  if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  if (k > opt.max_bz_k)
    throw std::invalid_argument("bz engine is configured for k <= " + std::to_string(opt.max_bz_k) + ", got " +
                                std::to_string(k));
  const std::size_t n = g.front().size();

  std::vector<Gamma> gammas;
  std::vector<std::size_t> deficits;
  std::vector<bool> used(n, false);
  for (;;) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    if (order.empty()) break;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    std::vector<std::size_t> piv;
    Matrix gm = row_reduce(f, g, order, &piv);
    std::size_t r = 0;
    for (std::size_t c : piv)
      if (!used[c]) ++r;
    if (r == 0) break;
    for (std::size_t c : piv) used[c] = true;
    gammas.push_back(make_gamma(f, gm));
    deficits.push_back(k - r);
  }
  return run_levels(f, gammas, deficits, n, opt);
}

namespace {

using Coord = std::array<std::int64_t, 3>;

// Lattices between Z^3 and m Z^3 of index k, as row-style Hermite bases.
std::vector<std::array<Coord, 3>> sublattices(std::int64_t m, std::int64_t k) {
  std::vector<std::array<Coord, 3>> out;
  auto contains = [](const std::array<Coord, 3>& b, Coord v) {
    for (int i = 0; i < 3; ++i) {
      if (v[i] % b[i][i] != 0) return false;
      const std::int64_t x = v[i] / b[i][i];
      for (int j = i; j < 3; ++j) v[j] -= x * b[i][j];
    }
    return true;
  };
  for (std::int64_t a = 1; a <= k; ++a) {
    if (k % a) continue;
    for (std::int64_t d = 1; d <= k / a; ++d) {
      if ((k / a) % d) continue;
      const std::int64_t f = k / a / d;
      if (m % a || m % d || m % f) continue;
      for (std::int64_t b = 0; b < d; ++b)
        for (std::int64_t c = 0; c < f; ++c)
          for (std::int64_t e = 0; e < f; ++e) {
            std::array<Coord, 3> basis{Coord{a, b, c}, Coord{0, d, e}, Coord{0, 0, f}};
            if (contains(basis, {m, 0, 0}) && contains(basis, {0, m, 0}) && contains(basis, {0, 0, m}))
              out.push_back(basis);
          }
    }
  }
  return out;
}

Coord reduce_mod(const std::array<Coord, 3>& b, Coord v) {
  for (int i = 0; i < 3; ++i) {
    std::int64_t x = v[i] / b[i][i];
    if (v[i] - x * b[i][i] < 0) --x;
    for (int j = i; j < 3; ++j) v[j] -= x * b[i][j];
  }
  return v;
}

class Torus {
 public:
  explicit Torus(std::int64_t m) : m_(m) {}
  std::int64_t modulus() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(m_ * m_ * m_); }
  Coord coord(std::size_t idx) const {
    const auto i = static_cast<std::int64_t>(idx);
    return {i / (m_ * m_), (i / m_) % m_, i % m_};
  }
  std::size_t index(const Coord& c) const {
    auto md = [&](std::int64_t x) { return ((x % m_) + m_) % m_; };
    return static_cast<std::size_t>(md(c[0]) * m_ * m_ + md(c[1]) * m_ + md(c[2]));
  }
  std::size_t shift(std::size_t idx, const Coord& t) const {
    const Coord c = coord(idx);
    return index({c[0] + t[0], c[1] + t[1], c[2] + t[2]});
  }

 private:
  std::int64_t m_;
};

// Points t of the torus with <l, t> = 0 mod m for every l in the lattice.
std::vector<std::size_t> subgroup(const Torus& torus, const std::array<Coord, 3>& basis) {
  std::vector<std::size_t> out;
  const std::int64_t m = torus.modulus();
  for (std::size_t idx = 0; idx < torus.size(); ++idx) {
    const Coord t = torus.coord(idx);
    bool in = true;
    for (const auto& row : basis)
      if ((row[0] * t[0] + row[1] * t[1] + row[2] * t[2]) % m != 0) in = false;
    if (in) out.push_back(idx);
  }
  return out;
}

// Greedy cover of the torus by translates of seed.
std::vector<std::size_t> greedy_cover(const Torus& torus, const std::vector<std::size_t>& seed) {
  const std::size_t n = torus.size();
  std::vector<Coord> pts;
  for (std::size_t s : seed) pts.push_back(torus.coord(s));
  std::vector<std::vector<std::size_t>> translate(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Coord tc = torus.coord(t);
    for (const auto& p : pts) translate[t].push_back(torus.index({p[0] + tc[0], p[1] + tc[1], p[2] + tc[2]}));
  }
  std::vector<bool> covered(n, false), taken(n, false);
  std::size_t left = n;
  std::vector<std::size_t> overlaps;
  while (left > 0) {
    std::size_t best_t = n, best_new = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (taken[t]) continue;
      std::size_t fresh = 0;
      for (std::size_t x : translate[t]) fresh += !covered[x];
      if (fresh > best_new) {
        best_new = fresh;
        best_t = t;
        if (fresh == seed.size()) break;
      }
    }
    taken[best_t] = true;
    overlaps.push_back(seed.size() - best_new);
    for (std::size_t x : translate[best_t])
      if (!covered[x]) {
        covered[x] = true;
        --left;
      }
  }
  return overlaps;
}

std::size_t levels_needed(const std::vector<std::size_t>& overlaps, std::size_t k, std::uint64_t target) {
  for (std::size_t w = 1; w <= k; ++w)
    if (lower_bound(overlaps, w) >= target) return w;
  return k + 1;
}

}  // namespace

MinWeightResult min_weight_bz(const ToricCode& code, const EngineOptions& opt) {
  const FiniteField& f = *code.field;
  if (!opt.use_symmetry) return min_weight_bz(f, code.generator, opt);
  const Matrix g = row_reduce(f, code.generator);
  const std::size_t k = g.size();
  if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  if (k > opt.max_bz_k)
    throw std::invalid_argument("bz engine is configured for k <= " + std::to_string(opt.max_bz_k) + ", got " +
                                std::to_string(k));
  const std::int64_t m = f.q() - 1;
  const Torus torus(m);
  const std::size_t n = torus.size();

  auto systematic = [&](const std::vector<std::size_t>& seed) -> std::optional<Matrix> {
    std::vector<std::size_t> order = seed;
    std::vector<bool> in(n, false);
    for (std::size_t s : seed) in[s] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!in[c]) order.push_back(c);
    std::vector<std::size_t> piv;
    Matrix gm = row_reduce(f, g, order, &piv);
    for (std::size_t c : piv)
      if (!in[c]) return std::nullopt;
    return gm;
  };

  // exact tiling by the cosets of a subgroup of order k
  if (code.injective && n % k == 0 && code.monomials.size() == k) {
    for (const auto& basis : sublattices(m, static_cast<std::int64_t>(k))) {
      std::set<Coord> residues;
      for (const auto& a : code.monomials) residues.insert(reduce_mod(basis, {a[0], a[1], a[2]}));
      if (residues.size() != k) continue;
      const auto seed = subgroup(torus, basis);
      if (seed.size() != k) continue;
      auto gm = systematic(seed);
      if (!gm) continue;
      std::vector<Gamma> gammas{make_gamma(f, *gm)};
      return run_levels(f, gammas, std::vector<std::size_t>(n / k, 0), n, opt);
    }
  }

  // otherwise: the best of several information sets, each covered greedily by its
  // translates.  Seeds drawn from inside a small subgroup pack well, since their
  // translates stay inside single cosets.
  Rng rng(0x7a11);
  std::vector<std::vector<std::size_t>> orders;
  auto shuffled = [&](std::vector<std::size_t> v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  orders.push_back(all);
  for (int a = 0; a < 15; ++a) orders.push_back(shuffled(all));
  for (std::size_t h = k; h <= 4 * k && h <= n; ++h) {
    if (n % h) continue;
    auto lattices = sublattices(m, static_cast<std::int64_t>(h));
    if (lattices.size() > 32) lattices = {lattices.begin(), lattices.begin() + 32};
    for (const auto& basis : lattices) {
      const auto sub = subgroup(torus, basis);
      std::vector<bool> in(n, false);
      for (std::size_t x : sub) in[x] = true;
      std::vector<std::size_t> rest;
      for (std::size_t x = 0; x < n; ++x)
        if (!in[x]) rest.push_back(x);
      for (int v = 0; v < 2; ++v) {
        auto order = shuffled(sub);
        order.insert(order.end(), rest.begin(), rest.end());
        orders.push_back(std::move(order));
      }
    }
  }
  const std::size_t max_orders = std::max<std::size_t>(16, 4000000000ULL / (n * n * k + 1));
  if (orders.size() > max_orders) orders.resize(max_orders);

  std::vector<std::size_t> best_seed, best_overlaps;
  std::size_t best_levels = SIZE_MAX;
  std::uint64_t ub = n;
  for (const auto& order : orders) {
    std::vector<std::size_t> piv;
    const Matrix gm = row_reduce(f, g, order, &piv);
    for (const auto& r : gm) ub = std::min<std::uint64_t>(ub, detail::weight(r.data(), n));
    auto overlaps = greedy_cover(torus, piv);
    std::sort(overlaps.begin(), overlaps.end());
    const std::size_t lv = levels_needed(overlaps, k, ub);
    if (lv < best_levels || (lv == best_levels && lower_bound(overlaps, lv) > lower_bound(best_overlaps, lv))) {
      best_levels = lv;
      best_seed = piv;
      best_overlaps = overlaps;
    }
  }
  auto gm = systematic(best_seed);
  std::vector<Gamma> gammas{make_gamma(f, *gm)};
  return run_levels(f, gammas, best_overlaps, n, opt);
}

}  // namespace toric3::codes
