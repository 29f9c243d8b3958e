#include "toric3/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

#include "toric3/gfq.hpp"
#include "toric3/minklen.hpp"

namespace toric3::bounds {

namespace {

constexpr long double kTolerance = 1e-9L;

Threshold threshold(long double x) { return {x, prime_power_at_least(x)}; }

long double sq(long double x) { return x * x; }

// (c + sqrt(c^2 + k))^2
long double quadratic_root_squared(const Rational& c, long double k) {
  const long double cv = static_cast<long double>(c.numerator()) / static_cast<long double>(c.denominator());
  return sq(cv + std::sqrt(cv * cv + k));
}

std::string str(Int v) { return std::to_string(v); }
std::string str(const Rational& r) {
  return r.denominator() == 1 ? str(r.numerator()) : str(r.numerator()) + "/" + str(r.denominator());
}

}  // namespace

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

Int floor_two_sqrt(Int q) { return static_cast<Int>(isqrt(static_cast<std::uint64_t>(4 * q))); }

std::uint64_t prime_power_at_least(long double x) {
  auto q = static_cast<std::uint64_t>(std::max<long double>(2, std::ceil(x - kTolerance)));
  while (!gfq::is_prime_power(q)) ++q;
  return q;
}

bool BoundReport::hypotheses_met() const {
  for (const auto& h : hypotheses)
    if (h.met != true) return false;
  return true;
}

SpecialClass parse_special_class(const std::string& name) {
  if (name == "segment") return SpecialClass::Segment;
  if (name == "unit_triangle") return SpecialClass::UnitTriangle;
  if (name == "unit_3simplex") return SpecialClass::Unit3Simplex;
  if (name == "T0") return SpecialClass::T0;
  if (name == "S2") return SpecialClass::S2;
  if (name == "E") return SpecialClass::E;
  if (name == "K1") return SpecialClass::K1;
  if (name == "K2") return SpecialClass::K2;
  throw std::invalid_argument("unknown class: " + name +
                              " (segment, unit_triangle, unit_3simplex, T0, S2, E, K1, K2)");
}

std::string to_string(SpecialClass c) {
  switch (c) {
    case SpecialClass::Segment:
      return "segment";
    case SpecialClass::UnitTriangle:
      return "unit_triangle";
    case SpecialClass::Unit3Simplex:
      return "unit_3simplex";
    case SpecialClass::T0:
      return "T0";
    case SpecialClass::S2:
      return "S2";
    case SpecialClass::E:
      return "E";
    case SpecialClass::K1:
      return "K1";
    default:
      return "K2";
  }
}

Int special_bound(SpecialClass c, Int q) {
  const Int m = q - 1;
  switch (c) {
    case SpecialClass::Segment:
      return m * m;
    case SpecialClass::UnitTriangle:
      return m * (q - 2);
    case SpecialClass::Unit3Simplex:
      return m * m - q + 2;
    case SpecialClass::T0:
      return m * (q + floor_two_sqrt(q) - 2);
    case SpecialClass::S2:
      return m * m + 2;
    case SpecialClass::E:
      return m * m + 3;
    case SpecialClass::K1:
      return m * m + 2 * q + 2;
    default:
      return m * m + 3 * q + 2;
  }
}

Int width_one_bound(Int vol3, Int vol2_0, Int vol2_1, Int n0, Int n1, Int q) {
  if (vol3 < 0 || vol2_0 < 0 || vol2_1 < 0 || n0 < 0 || n1 < 0)
    throw std::invalid_argument("width_one_bound: inputs must be nonnegative");
  return (q - 1) * (q - 1) + (vol3 - vol2_0 - vol2_1) * q - n0 - n1;
}

Rational finite_class_bound(Int vol3, Int facets, Int q) {
  const Rational half_f(facets, 2);
  return Rational((q - 1) * (q - 1)) + (Rational(vol3) - half_f) * q + half_f;
}

Int dps_volume_bound(Int vol3, Int q) { return (q - 1) * (q - 1) + (vol3 - 2) * q + 2; }

Int maxa_bound(Int length, Int k, Int q, Int vol3, bool has_t0_factor) {
  if (k < 0 || k > length) throw std::invalid_argument("maxa_bound: need 0 <= k <= L");
  const Int base = length * (q - 1) * (q - 1);
  const Int hw = (q - 1) * (floor_two_sqrt(q) - 1);
  if (k == 0) return base;
  if (k == 1) return has_t0_factor ? base + hw : base + (vol3 - 3 * length + 1) * q + 2;
  if (k == 2) return base + 2 * hw;
  return base + 2 * k + 1;
}

CmaxThreshold cmax_threshold(Int length, Int vol3) {
  const Rational c(vol3 - 3 * length + 3, 8);
  return {c, threshold(quadratic_root_squared(c, 1))};
}

Int cmax_bound(Int length, Int q) {
  return length * (q - 1) * (q - 1) + 2 * (q - 1) * (floor_two_sqrt(q) - 1);
}

long double gl_bound(Int d, long double q) {
  const long double s = std::sqrt(q);
  return q * q + static_cast<long double>((d - 1) * (d - 2)) * q * s +
         12.0L * std::pow(static_cast<long double>(d + 3), 4) * q;
}

long double psi(Int k, Int m, Int d, long double q) {
  const long double s = std::sqrt(q);
  const Int r = d - m - k;
  return static_cast<long double>(m - k) * sq(q - 1) + static_cast<long double>(k) * q * q +
         static_cast<long double>((r + 1) * r) * q * s +
         12.0L * (std::pow(static_cast<long double>(r + 5), 4) + 625.0L * static_cast<long double>(k - 1)) * q;
}

std::pair<long double, long double> alpha_inequalities(Int length, Int d, long double q) {
  const long double s = std::sqrt(q);
  const auto L = static_cast<long double>(length);
  const auto dd = static_cast<long double>(d);
  const long double d1 = dd - L + 2;
  const long double first = (L - 1) * q * q - (dd * dd - 3 * dd - 2) * q * s -
                            (12 * std::pow(dd + 3, 4) + 2 * (L + 1)) * q - 4 * s + L + 2;
  const long double second =
      q * q - (d1 * d1 - 3 * d1 - 2) * q * s - (12 * std::pow(d1 + 3, 4) + 6) * q - 4 * s + 4;
  return {first, second};
}

Threshold alpha(Int length, Int d) {
  if (length < 2 || d < 3 || length > d) throw std::invalid_argument("alpha needs 2 <= L <= d and d >= 3");
  auto ok = [&](long double s) {
    const auto [a, b] = alpha_inequalities(length, d, s * s);
    return a >= 0 && b >= 0;
  };
  // Each left side is a quartic in sqrt(q) with sign pattern + - - - +, so it has
  // at most two positive roots and is negative at sqrt(7507); the predicate is
  // monotone from there on.
  long double lo = std::sqrt(7507.0L);
  if (ok(lo)) return threshold(7507);
  long double hi = 2 * lo;
  while (!ok(hi)) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 1e-15L * hi; ++it) {
    const long double mid = (lo + hi) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return threshold(hi * hi);
}

bool alpha_holds(Int length, Int d, long double q) { return q >= alpha(length, d).value - kTolerance; }

Int all_bound(Int length, Int q) {
  // L (q-1)^2 + 2(q-1)(2 sqrt q - 1) = L (q-1)^2 - 2(q-1) + sqrt(16 (q-1)^2 q)
  const auto root = static_cast<Int>(isqrt(static_cast<std::uint64_t>(16 * (q - 1) * (q - 1) * q)));
  return length * (q - 1) * (q - 1) - 2 * (q - 1) + root;
}

Int simplex_bound(Int length, Int q, int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("simplex_bound: n must be 2 or 3");
  Int v = length;
  for (int i = 1; i < n; ++i) v *= q - 1;
  return v;
}

BetaMode parse_beta_mode(const std::string& s) {
  if (s == "per_summand") return BetaMode::PerSummand;
  if (s == "global") return BetaMode::Global;
  throw std::invalid_argument("unknown beta mode: " + s + " (per_summand, global)");
}

BetaValue beta(const BetaInputs& in, BetaMode mode) {
  BetaValue out;
  const Rational c0 = Rational(in.vol2_0, 4) - in.length_0 + Rational(9, 4);
  const Rational c1 = Rational(in.vol2_1, 4) - in.length_1 + Rational(9, 4);
  out.big_c = std::max(c0, c1);
  const Int l0 = mode == BetaMode::PerSummand ? in.length_0 : in.length;
  const Int l1 = mode == BetaMode::PerSummand ? in.length_1 : in.length;
  out.small_c = std::min(Rational(in.vol2_0, 2) - 2 * l0 + Rational(11, 2), Rational(in.vol2_1, 2) - 2 * l1 + Rational(11, 2));
  long double b = 37;
  b = std::max(b, quadratic_root_squared(out.big_c, 2.5L));
  b = std::max(b, quadratic_root_squared(out.small_c, 3));
  b = std::max(b, sq(static_cast<long double>(in.mixed) + 1) / 4);
  out.beta = threshold(b);
  return out;
}

BetaValue beta(const geom::LatticePolytope& p0, const geom::LatticePolytope& p1, Int length, BetaMode mode) {
  BetaInputs in;
  in.vol2_0 = geom::vol2(p0);
  in.vol2_1 = geom::vol2(p1);
  in.length_0 = minklen::minkowski_length(p0).length;
  in.length_1 = minklen::minkowski_length(p1).length;
  in.mixed = geom::mixed_area(p0, p1);
  in.length = length;
  return beta(in, mode);
}

Int width_one_final_bound(Int length, Int q) {
  return length * (q - 1) * (q - 1) + (q - 1) * (floor_two_sqrt(q) - 1);
}

std::optional<WidthOneSplit> split_width_one(const geom::LatticePolytope& p) {
  if (p.dim() != 3) return std::nullopt;
  const auto w = geom::lattice_width(p);
  if (w.width != 1) return std::nullopt;
  // columns of m complete the direction to a basis, so (c1, c2, direction) as rows is unimodular
  const Matrix3 m = complete_to_unimodular(w.direction);
  Matrix3 a;
  for (int j = 0; j < 3; ++j) {
    a(0, j) = m(j, 1);
    a(1, j) = m(j, 2);
    a(2, j) = w.direction[j];
  }
  const AffineUnimodularMap lin(a, {0, 0, 0});
  Int zmin = 0;
  bool first = true;
  for (const auto& v : p.vertices()) {
    const Int z = lin(v)[2];
    zmin = first ? z : std::min(zmin, z);
    first = false;
  }
  const AffineUnimodularMap phi(a, {0, 0, -zmin});
  std::vector<LatticeVector> bottom, top;
  for (const auto& v : p.vertices()) {
    const auto x = phi(v);
    (x[2] == 0 ? bottom : top).push_back({x[0], x[1], 0});
  }
  return WidthOneSplit{geom::LatticePolytope(bottom, 2), geom::LatticePolytope(top, 2), phi};
}

Int griesmer_max_d(Int n, Int k, Int q) {
  if (k < 1 || n < k) throw std::invalid_argument("griesmer: need n >= k >= 1");
  auto length_needed = [&](Int d) {
    Int total = 0;
    __int128 qi = 1;
    for (Int i = 0; i < k; ++i) {
      if (qi >= d) {
        total += k - i;  // every remaining term is 1
        break;
      }
      total += static_cast<Int>((d + qi - 1) / qi);
      qi *= q;
    }
    return total;
  };
  Int lo = 1, hi = n;  // length_needed(1) = k <= n
  while (lo < hi) {
    const Int mid = lo + (hi - lo + 1) / 2;
    if (length_needed(mid) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Int gv_max_d(Int n, Int k, Int q) {
  using boost::multiprecision::cpp_int;
  if (k < 1 || n < k) throw std::invalid_argument("gv: need n >= k >= 1");
  cpp_int lhs = 1;
  for (Int i = 0; i < n - k; ++i) lhs *= q;
  // sum_{i=0}^{d-2} C(n-1, i) (q-1)^i, grown one term at a time
  cpp_int sum = 0, term = 1;
  Int best = 1;  // d = 1: empty sum
  for (Int d = 2; d <= n; ++d) {
    const Int i = d - 2;
    if (i > 0) term = term * (n - i) * (q - 1) / i;
    sum += term;
    if (lhs > sum)
      best = d;
    else
      break;
  }
  return best;
}

Int mindist_lower_bound(Int length, Int q, bool width_one) {
  const Int s = width_one ? 1 : 2;
  const Int m = q - 1;
  // floor(A + s m - 2 s m sqrt q) = A + s m - ceil(sqrt(4 s^2 m^2 q))
  const auto t = static_cast<std::uint64_t>(4 * s * s * m * m * q);
  const auto r = isqrt(t);
  const Int ceil_root = static_cast<Int>(r * r == t ? r : r + 1);
  return m * m * m - length * m * m + s * m - ceil_root;
}

Int simplex_degree(const geom::LatticePolytope& p) {
  const auto box = p.bounding_box();
  Int top = 0;
  bool first = true;
  for (const auto& v : p.vertices()) {
    const Int s = v[0] + v[1] + v[2];
    top = first ? s : std::max(top, s);
    first = false;
  }
  return top - box.lo[0] - box.lo[1] - box.lo[2];
}

std::vector<BoundReport> polytope_bounds(const geom::LatticePolytope& p, Int q, std::optional<std::uint64_t> n_p) {
  std::uint32_t ch = 0;
  if (!gfq::is_prime_power(static_cast<std::uint64_t>(q), &ch)) throw std::invalid_argument("q must be a prime power");
  const Int length = minklen::minkowski_length(p).length;
  const Int vol3 = p.dim() == 3 ? geom::ambient_vol3(p) : 0;
  const Int width = p.dim() == 3 ? geom::lattice_width(p).width : 0;
  const Int d = simplex_degree(p);
  const auto box = p.bounding_box();
  bool fits = true;
  for (int i = 0; i < 3; ++i) fits = fits && box.hi[i] - box.lo[i] <= q - 2;

  std::vector<BoundReport> out;
  const std::vector<std::pair<std::string, std::string>> common{
      {"q", str(q)}, {"L", str(length)}, {"Vol3", str(vol3)}, {"width", str(width)}};
  auto add = [&](std::string name, Rational value, std::vector<Hypothesis> hyp,
                 std::vector<std::pair<std::string, std::string>> extra = {}) {
    BoundReport r{std::move(name), value, std::move(hyp), common, std::nullopt};
    r.inputs.insert(r.inputs.end(), extra.begin(), extra.end());
    if (n_p) r.holds = Rational(static_cast<Int>(*n_p)) <= value;
    out.push_back(std::move(r));
  };

  add("simplex", simplex_bound(d, q, 3), {{"P inside a translate of d*Delta^3", true}}, {{"d", str(d)}});

  if (length >= 2 && d >= 3) {
    const auto a = alpha(length, d);
    add("all", all_bound(length, q),
        {{"q >= alpha(P)", static_cast<long double>(q) >= a.value - kTolerance}, {"3 <= d < q", d < q}},
        {{"d", str(d)}, {"alpha", std::to_string(static_cast<double>(a.value))}});
  }

  if (length >= 1) {
    const auto t = cmax_threshold(length, vol3);
    add("cmax", cmax_bound(length, q),
        {{"char > 41", ch > 41},
         {"q >= (c + sqrt(c^2 + 1))^2", static_cast<long double>(q) >= t.q_min.value - kTolerance},
         {"P inside [0, q-2]^3 after translation", fits},
         {"f has L absolutely irreducible factors", std::nullopt}},
        {{"c", str(t.c)}});
  }

  if (auto split = split_width_one(p)) {
    const auto b = beta(split->p0, split->p1, length);
    add("width_one_final", width_one_final_bound(length, q),
        {{"width one", true}, {"q >= beta(P)", static_cast<long double>(q) >= b.beta.value - kTolerance}},
        {{"beta", std::to_string(static_cast<double>(b.beta.value))}});
  }

  if (length == 1 && p.dim() == 3) {
    add("dps_volume", dps_volume_bound(vol3, q), {{"char > 41", ch > 41}, {"L = 1", true}, {"dim 3", true}});
    if (width > 1) {
      const auto facets = static_cast<Int>(p.facets().size());
      add("finite_class", finite_class_bound(vol3, facets, q),
          {{"char > 41", ch > 41}, {"width > 1", true}, {"L = 1", true}}, {{"F", str(facets)}});
    }
  }

  std::optional<SpecialClass> cls;
  if (p.dim() == 1 && p.size() == 2) cls = SpecialClass::Segment;
  if (p.dim() == 2 && p.size() == 3 && p.relative_volume() == 1) cls = SpecialClass::UnitTriangle;
  if (p.dim() == 3 && p.size() == 4 && vol3 == 1) cls = SpecialClass::Unit3Simplex;
  for (auto c : {SpecialClass::T0, SpecialClass::S2, SpecialClass::E, SpecialClass::K1, SpecialClass::K2}) {
    if (cls) break;
    const auto ref = geom::catalog(to_string(c));
    if (ref.size() == p.size() && geom::equivalent(ref, p)) cls = c;
  }
  if (cls) add("special:" + to_string(*cls), special_bound(*cls, q), {{"char != 2, 3", ch != 2 && ch != 3}});
  return out;
}

}  // namespace toric3::bounds
