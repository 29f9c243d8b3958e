#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "doctest.h"
#include "toric3/bounds.hpp"
#include "toric3/gfq.hpp"
#include "toric3/minklen.hpp"

using namespace toric3;
using namespace toric3::bounds;

namespace {

std::vector<Int> prime_powers(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int q = lo; q <= hi; ++q)
    if (gfq::is_prime_power(static_cast<std::uint64_t>(q))) out.push_back(q);
  return out;
}

// straight from the definitions, no shortcuts
Int griesmer_oracle(Int n, Int k, Int q) {
  Int best = 0;
  for (Int d = 1; d <= n; ++d) {
    Int total = 0, qi = 1;
    for (Int i = 0; i < k; ++i) {
      total += (d + qi - 1) / qi;
      qi = std::min<Int>(qi * q, Int(1) << 40);
    }
    if (total <= n) best = d;
  }
  return best;
}

Int gv_oracle(Int n, Int k, Int q) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> pascal(n, std::vector<cpp_int>(n, 0));
  for (Int a = 0; a < n; ++a) {
    pascal[a][0] = 1;
    for (Int b = 1; b <= a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + (b < a ? pascal[a - 1][b] : cpp_int(0));
  }
  cpp_int lhs = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - k));
  Int best = 0;
  for (Int d = 1; d <= n; ++d) {
    cpp_int sum = 0;
    for (Int i = 0; i <= d - 2; ++i) sum += pascal[n - 1][i] * boost::multiprecision::pow(cpp_int(q - 1), static_cast<unsigned>(i));
    if (lhs > sum) best = d;
  }
  return best;
}

const BoundReport* find(const std::vector<BoundReport>& r, const std::string& name) {
  for (const auto& b : r)
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("integer square roots") {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const auto r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  CHECK(floor_two_sqrt(7) == 5);
  CHECK(floor_two_sqrt(9) == 6);
  CHECK(floor_two_sqrt(11) == 6);
  CHECK(floor_two_sqrt(16) == 8);
  CHECK(prime_power_at_least(105.914L) == 107);
  CHECK(prime_power_at_least(5.0L) == 5);
  CHECK(prime_power_at_least(5.0000000001L) == 5);
  CHECK(prime_power_at_least(5.1L) == 7);
}

TEST_CASE("special classes") {
  CHECK(special_bound(SpecialClass::T0, 7) == 60);
  CHECK(special_bound(SpecialClass::K2, 7) == 59);
  for (Int q : prime_powers(2, 50)) {
    CHECK(special_bound(SpecialClass::Segment, q) == (q - 1) * (q - 1));
    CHECK(special_bound(SpecialClass::S2, q) == dps_volume_bound(2, q));
    CHECK(special_bound(SpecialClass::E, q) == dps_volume_bound(3, q) - q + 1);
    CHECK(Rational(special_bound(SpecialClass::K1, q)) == finite_class_bound(4, 4, q));
    CHECK(Rational(special_bound(SpecialClass::K2, q)) == finite_class_bound(5, 4, q));
  }
  CHECK(parse_special_class("unit_3simplex") == SpecialClass::Unit3Simplex);
  CHECK_THROWS_AS(parse_special_class("K3"), std::invalid_argument);
  for (auto c : {SpecialClass::Segment, SpecialClass::T0, SpecialClass::K2}) CHECK(parse_special_class(to_string(c)) == c);
}

TEST_CASE("planar and volume bounds") {
  for (Int q : prime_powers(3, 40)) {
    CHECK(width_one_bound(7, 3, 4, 0, 0, q) == (q - 1) * (q - 1));
    for (Int b = 1; b < 8; ++b) CHECK(width_one_bound(b, 0, 0, q - 1, q - 1, q) == dps_volume_bound(b, q));
  }
  CHECK(finite_class_bound(3, 6, 7) == Rational(39));
  CHECK(finite_class_bound(3, 5, 7) == Rational(36) + Rational(1, 2) * 7 + Rational(5, 2));
  CHECK(dps_volume_bound(3, 7) == 45);
  CHECK_THROWS_AS(width_one_bound(-1, 0, 0, 0, 0, 5), std::invalid_argument);

  // the width-one polytope T0 + [0, e1, e3] splits as T0 + [0, e1] over T0
  const auto ex = geom::catalog("EX72");
  const auto split = split_width_one(ex);
  REQUIRE(split);
  const Int v0 = geom::vol2(split->p0), v1 = geom::vol2(split->p1);
  CHECK(std::min(v0, v1) == 3);
  CHECK(std::max(v0, v1) == 7);
  CHECK(geom::mixed_area(split->p0, split->p1) == 5);
  const Int vol3 = geom::ambient_vol3(ex);
  for (Int q : {5, 7, 11}) CHECK(width_one_bound(vol3, v0, v1, 0, 0, q) == (q - 1) * (q - 1) + 5 * q);
  CHECK_FALSE(split_width_one(geom::catalog("K1")));
}

TEST_CASE("maxa cases") {
  CHECK(maxa_bound(2, 2, 7, 0, false) == 120);
  CHECK(maxa_bound(2, 0, 7, 0, false) == 72);
  for (Int l = 3; l < 7; ++l) CHECK(maxa_bound(l, l, 11, 0, false) == l * 100 + 2 * l + 1);
  CHECK_THROWS_AS(maxa_bound(2, 3, 7, 0, false), std::invalid_argument);

  const auto t = cmax_threshold(2, 3);
  CHECK(t.c == Rational(0));
  CHECK(t.q_min.value == doctest::Approx(1.0));
  const auto one = cmax_threshold(1, 8);
  CHECK(one.c == Rational(1));
  CHECK(static_cast<double>(one.q_min.value) == doctest::Approx(5.828427124746).epsilon(1e-9));
  CHECK(one.q_min.prime_power == 7);
  CHECK(cmax_bound(2, 11) == 300);
  CHECK(cmax_bound(2, 11) >= width_one_final_bound(2, 11));
}

TEST_CASE("case (3) dominates past the threshold") {
  int checked = 0, floored_misses = 0;
  for (Int l = 1; l <= 12; ++l)
    for (Int vol3 = 0; vol3 <= 200; vol3 += 3)
      for (Int q : prime_powers(37, 400)) {
        if (static_cast<long double>(q) < cmax_threshold(l, vol3).q_min.value || l > 3 * (q - 2)) continue;
        const Int three = l * (q - 1) * (q - 1) + 2 * (q - 1) * (floor_two_sqrt(q) - 1);
        CHECK(cmax_bound(l, q) == three);
        CHECK(three >= maxa_bound(l, 0, q, vol3, false));
        CHECK(three >= maxa_bound(l, 1, q, vol3, true));
        // against (2b) the threshold is exact only with the real 2 sqrt q
        const long double real_three =
            l * (q - 1) * (q - 1) + 2.0L * (q - 1) * (2 * std::sqrt(static_cast<long double>(q)) - 1);
        CHECK(real_three + 1e-6L >= maxa_bound(l, 1, q, vol3, false));
        CHECK(three + 2 * (q - 1) > maxa_bound(l, 1, q, vol3, false));
        if (three < maxa_bound(l, 1, q, vol3, false)) ++floored_misses;
        for (Int k = 3; k <= l; ++k) CHECK(three >= maxa_bound(l, k, q, vol3, false));
        ++checked;
      }
  CHECK(checked > 1000);
  CHECK(floored_misses > 0);
}

TEST_CASE("alpha and psi") {
  for (Int l = 2; l <= 5; ++l)
    for (Int d = std::max<Int>(3, l); d <= 8; ++d) {
      const auto a = alpha(l, d);
      CHECK(a.value >= 7507);
      CHECK(gfq::is_prime_power(a.prime_power));
      CHECK(alpha_holds(l, d, a.value));
      CHECK(alpha_holds(l, d, 4 * a.value));
      const auto [g1, g2] = alpha_inequalities(l, d, a.value * (1 + 1e-9L));
      CHECK(g1 >= 0);
      CHECK(g2 >= 0);
      if (a.value > 7507) CHECK_FALSE(alpha_holds(l, d, a.value * 0.999L));
    }
  // both sides grow without bound
  const auto [big1, big2] = alpha_inequalities(2, 3, 1e20L);
  CHECK(big1 > 0);
  CHECK(big2 > 0);
  CHECK_THROWS_AS(alpha(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(alpha(2, 2), std::invalid_argument);

  CHECK(gl_bound(1, 4) == doctest::Approx(16 + 0 + 12 * 256 * 4));

  int checked = 0;
  for (Int l = 3; l <= 6; ++l)
    for (Int d = 2 * (l - 1); d <= 14; ++d)
      for (Int q : {7507, 8192, 10007, 65536, 1000003}) {
        CHECK(psi(1, l - 1, d, q) >= psi(l - 1, l - 1, d, q));
        ++checked;
      }
  CHECK(checked > 50);
}

TEST_CASE("all-q and simplex bounds") {
  for (Int q : prime_powers(2, 500)) {
    const auto exact = 2 * (q - 1) * (q - 1) + 2.0L * (q - 1) * (2 * std::sqrt(static_cast<long double>(q)) - 1);
    CHECK(all_bound(2, q) == static_cast<Int>(std::floor(exact)));
  }
  CHECK(simplex_bound(1, 9, 3) == 64);
  CHECK(simplex_bound(2, 5, 2) == 8);
  CHECK(simplex_bound(3, 7, 3) == 108);
  CHECK_THROWS(simplex_bound(1, 5, 4));
  CHECK(simplex_degree(geom::catalog("Delta3:3")) == 3);
  CHECK(simplex_degree(geom::catalog("S1")) == 1);
  CHECK(simplex_degree(geom::catalog("Cube:1")) == 3);
}

TEST_CASE("beta for the width-one example") {
  BetaInputs in;
  in.vol2_0 = 7;
  in.vol2_1 = 3;
  in.length_0 = 2;
  in.length_1 = 1;
  in.mixed = 5;
  in.length = 2;
  const auto per = beta(in);
  CHECK(per.small_c == Rational(5));
  CHECK(per.big_c == Rational(2));
  CHECK(static_cast<double>(per.beta.value) == doctest::Approx(53 + 10 * std::sqrt(28.0)).epsilon(1e-12));
  CHECK(std::abs(static_cast<double>(per.beta.value) - 105.914) < 5e-3);
  CHECK(per.beta.prime_power == 107);
  const auto global = beta(in, BetaMode::Global);
  CHECK(global.small_c == Rational(3));
  CHECK(static_cast<double>(global.beta.value) == doctest::Approx(41.78).epsilon(1e-3));
  CHECK(global.beta.prime_power == 43);

  const auto split = split_width_one(geom::catalog("EX72"));
  REQUIRE(split);
  const auto from_geometry = beta(split->p0, split->p1, 2);
  CHECK(from_geometry.beta.value == per.beta.value);
  CHECK(parse_beta_mode("global") == BetaMode::Global);
  CHECK_THROWS(parse_beta_mode("local"));

  const Int row[] = {44, 96, 126, 168, 250};
  const Int qs[] = {5, 7, 8, 9, 11};
  for (int i = 0; i < 5; ++i) CHECK(width_one_final_bound(2, qs[i]) == row[i]);
}

TEST_CASE("griesmer and gilbert-varshamov") {
  CHECK(griesmer_max_d(64, 8, 5) == 47);
  CHECK(gv_max_d(64, 8, 5) == 37);
  CHECK(griesmer_max_d(216, 8, 7) == 181);
  CHECK(gv_max_d(216, 8, 7) == 159);
  CHECK(griesmer_max_d(343, 8, 8) == 296);
  CHECK(gv_max_d(343, 8, 8) == 268);
  for (Int q : {2, 3, 4, 5, 7})
    for (Int n = 1; n <= 30; ++n)
      for (Int k = 1; k <= std::min<Int>(n, 6); ++k) {
        CHECK(griesmer_max_d(n, k, q) == griesmer_oracle(n, k, q));
        CHECK(gv_max_d(n, k, q) == gv_oracle(n, k, q));
      }
  CHECK_THROWS(griesmer_max_d(3, 4, 5));
}

TEST_CASE("minimum distance lower bound") {
  CHECK(mindist_lower_bound(2, 11, true) == 743);
  for (Int q : prime_powers(2, 300))
    for (Int l = 0; l <= 4; ++l) {
      const long double s = std::sqrt(static_cast<long double>(q));
      const long double m = q - 1;
      CHECK(mindist_lower_bound(l, q, false) == static_cast<Int>(std::floor(m * m * m - l * m * m - 2 * m * (2 * s - 1))));
      // real versus floored 2 sqrt q
      const Int gap = (q - 1) * (q - 1) * (q - 1) - width_one_final_bound(l, q) - mindist_lower_bound(l, q, true);
      CHECK(gap == static_cast<Int>(std::ceil(m * (2 * s - floor_two_sqrt(q)) - 1e-12L)));
      CHECK(gap >= 0);
      CHECK(gap <= q - 1);
    }
}

TEST_CASE("monotone in q") {
  const auto qs = prime_powers(5, 300);
  for (std::size_t i = 1; i < qs.size(); ++i) {
    const Int a = qs[i - 1], b = qs[i];
    for (auto c : {SpecialClass::Segment, SpecialClass::UnitTriangle, SpecialClass::Unit3Simplex, SpecialClass::T0,
                   SpecialClass::S2, SpecialClass::E, SpecialClass::K1, SpecialClass::K2})
      CHECK(special_bound(c, a) <= special_bound(c, b));
    for (Int l = 1; l <= 4; ++l) {
      CHECK(all_bound(l, a) <= all_bound(l, b));
      CHECK(cmax_bound(l, a) <= cmax_bound(l, b));
      CHECK(width_one_final_bound(l, a) <= width_one_final_bound(l, b));
      CHECK(simplex_bound(l, a, 3) <= simplex_bound(l, b, 3));
      for (Int k = 0; k <= l; ++k) CHECK(maxa_bound(l, k, a, 3 * l, k == 1) <= maxa_bound(l, k, b, 3 * l, k == 1));
    }
    for (Int v = 1; v <= 8; ++v) {
      CHECK(dps_volume_bound(v, a) <= dps_volume_bound(v, b));
      CHECK(finite_class_bound(v, 4, a) <= finite_class_bound(v, 4, b));
    }
    CHECK(griesmer_max_d((a - 1) * (a - 1), 4, a) <= griesmer_max_d((b - 1) * (b - 1), 4, b));
  }
}

TEST_CASE("polytope reports") {
  const auto ex = geom::catalog("EX72");
  const auto r = polytope_bounds(ex, 5, 40);
  const auto* w1 = find(r, "width_one_final");
  REQUIRE(w1);
  CHECK(w1->value == Rational(44));
  CHECK(w1->holds == true);
  CHECK_FALSE(w1->hypotheses_met());  // 5 < 107
  const auto* cm = find(r, "cmax");
  REQUIRE(cm);
  CHECK(cm->hypotheses[0].met == false);
  CHECK_FALSE(cm->hypotheses.back().met.has_value());
  REQUIRE(find(r, "simplex"));
  CHECK(find(r, "simplex")->holds == true);
  CHECK_FALSE(find(r, "dps_volume"));

  const auto k1 = polytope_bounds(geom::catalog("K1"), 7);
  REQUIRE(find(k1, "special:K1"));
  CHECK(find(k1, "special:K1")->value == Rational(36 + 14 + 2));
  REQUIRE(find(k1, "dps_volume"));
  CHECK(find(k1, "dps_volume")->hypotheses[0].met == false);
  CHECK_FALSE(find(k1, "dps_volume")->holds.has_value());

  const auto t0 = polytope_bounds(geom::catalog("T0"), 7);
  REQUIRE(find(t0, "special:T0"));
  CHECK(find(t0, "special:T0")->value == Rational(60));
  CHECK(find(t0, "special:T0")->hypotheses_met());
  CHECK_THROWS(polytope_bounds(ex, 6));
}

}  // TEST_SUITE
