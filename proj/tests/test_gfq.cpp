#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "toric3/gfq.hpp"

using namespace toric3;
using namespace toric3::gfq;

namespace {

// order of a in the multiplicative group by repeated multiplication
std::uint32_t order_of(const FiniteField& f, Elem a) {
  Elem x = a;
  std::uint32_t k = 1;
  while (x != 1) x = f.mul(x, a), ++k;
  return k;
}

// multiplication straight from the modulus, digit by digit
Elem schoolbook_mul(const FiniteField& f, Elem a, Elem b) {
  const std::uint32_t p = f.p(), e = f.e();
  std::vector<std::uint64_t> x(e), y(e), z(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i) x[i] = a % p, a /= p, y[i] = b % p, b /= p;
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = 2 * e - 1; d >= e; --d) {
    const std::uint64_t c = z[d];
    for (std::uint32_t i = 0; i <= e; ++i) z[d - e + i] = (z[d - e + i] + (p - c) * m[i]) % p;
  }
  Elem r = 0;
  for (std::uint32_t i = e; i-- > 0;) r = r * p + static_cast<Elem>(z[i]);
  return r;
}

LaurentPolynomial poly(FieldPtr f, std::initializer_list<std::pair<LatticeVector, std::int64_t>> terms, int nvars = 3) {
  LaurentPolynomial g(f, nvars);
  for (const auto& [a, c] : terms) g.add_term(a, f->from_int(c));
  return g;
}

std::uint64_t brute_zeros(const LaurentPolynomial& f) {
  const std::uint32_t q = f.field().q();
  std::uint64_t n = 0;
  std::vector<Elem> pt(f.nvars());
  for (Elem x = 1; x < q; ++x)
    for (Elem y = 1; y < q; ++y)
      for (Elem z = 1; z < (f.nvars() == 3 ? q : 2u); ++z) {
        pt[0] = x, pt[1] = y;
        if (f.nvars() == 3) pt[2] = z;
        n += f.evaluate(pt) == 0;
      }
  return n;
}

LaurentPolynomial random_width_one(Rng& rng, FieldPtr f) {
  for (;;) {
    LaurentPolynomial g(f, 3);
    for (int lvl = 0; lvl < 2; ++lvl) {
      const int terms = 1 + static_cast<int>(rng.below(3));
      for (int t = 0; t < terms; ++t)
        g.add_term({rng.range(-2, 3), rng.range(-2, 3), lvl}, static_cast<Elem>(1 + rng.below(f->q() - 1)));
    }
    bool low = false, high = false;
    for (const auto& [a, c] : g.terms()) (a[2] == 0 ? low : high) = true;
    if (low && high) return g;
  }
}

}  // namespace

TEST_SUITE("gfq") {

TEST_CASE("field construction") {
  CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);

  auto f7 = make_field(7);
  CHECK(f7->is_prime());
  // smallest primitive root by direct order computation
  Elem g = 0;
  for (Elem a = 1; a < 7 && g == 0; ++a)
    if (order_of(*f7, a) == 6) g = a;
  CHECK(g == 3);
  CHECK(f7->generator() == 3);

  auto f8 = make_field(8);
  CHECK(f8->p() == 2);
  CHECK(f8->e() == 3);
  CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  auto f9 = make_field(9);
  CHECK(f9->p() == 3);
  CHECK(f9->e() == 2);
  CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(9) == f9);
}

TEST_CASE("field axioms on small fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    INFO("q = " << q);
    auto f = make_field(q);
    CHECK(order_of(*f, f->generator()) == q - 1);
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->pow(a, q - 2)) == 1);
        CHECK(f->exp(f->log(a)) == a);
        CHECK(f->mul(a, f->inv(a)) == 1);
      }
      for (Elem b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == schoolbook_mul(*f, a, b));
        CHECK(f->add(a, b) == f->add(b, a));
        for (Elem c = 0; c < q; c += 3) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("element text form") {
  auto f9 = make_field(9);
  for (Elem a = 0; a < 9; ++a) CHECK(f9->parse(f9->format(a)) == a);
  auto f7 = make_field(7);
  CHECK(f7->parse("-2") == 5);
  CHECK(f7->format(5) == "5");
  CHECK_THROWS_AS(f7->parse("g^"), std::invalid_argument);
  CHECK_THROWS_AS(f7->parse("3x"), std::invalid_argument);

  auto f = parse_polynomial("# comment\n1 0 0 0\n-2 1 2 0\ng^2 2 1 0\n", f7);
  CHECK(f.terms().size() == 3);
  CHECK(parse_polynomial(format_polynomial(f), f7) == f);
  CHECK_THROWS_AS(parse_polynomial("1 0 0\n", f7), std::invalid_argument);
}

TEST_CASE("zero counts") {
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    auto f = make_field(q);
    CHECK(count_zeros(poly(f, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}}, 2)) == q - 1);
  }
  auto f7 = make_field(7);
  auto f1 = poly(f7, {{{2, 1, 0}, 1}, {{1, 2, 0}, -2}, {{0, 0, 0}, 1}});
  auto f2 = poly(f7, {{{3, 0, 0}, 1}, {{0, 0, 1}, -2}, {{0, 0, 2}, 1}});
  CHECK(count_zeros(f1) == 54);
  CHECK(count_zeros(f2) == 54);
  CHECK(common_zero_count(f1, f2) == 12);
  CHECK(count_zeros(f1 * f2) == 96);
  CHECK(count_zeros(f1 * f2, 3) == 96);
  CHECK(common_zero_count(f1, f1) == 54);

  auto f5 = make_field(5);
  CHECK(count_zeros(poly(f5, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}})) == 12);
  CHECK_THROWS_AS(count_zeros(LaurentPolynomial(f5)), std::invalid_argument);
}

TEST_CASE("zero counts against direct evaluation") {
  Rng rng(8);
  for (std::uint32_t q : {4u, 5u, 7u, 9u}) {
    auto f = make_field(q);
    for (int t = 0; t < 10; ++t) {
      auto p = testutil::random_solid(rng, 4, -1, 2);
      auto g = random_polynomial(p, f, rng.next());
      CHECK(count_zeros(g) == brute_zeros(g));
      CHECK(count_zeros(g, 4) == count_zeros(g, 1));
    }
  }
}

TEST_CASE("inclusion-exclusion for products") {
  Rng rng(2);
  for (std::uint32_t q : {5u, 7u, 8u}) {
    auto f = make_field(q);
    for (int t = 0; t < 10; ++t) {
      auto a = random_polynomial(testutil::random_solid(rng, 4, 0, 2), f, rng.next());
      auto b = random_polynomial(testutil::random_solid(rng, 4, 0, 2), f, rng.next());
      CHECK(count_zeros(a * b) == count_zeros(a) + count_zeros(b) - common_zero_count(a, b));
    }
  }
}

TEST_CASE("monomial substitution") {
  auto f5 = make_field(5);
  auto f = poly(f5, {{{0, 0, 0}, 1}, {{1, 2, 0}, 3}});
  CHECK(monomial_substitution(f, AffineUnimodularMap::identity()) == f);

  // 1 - x^2 y^3 becomes 1 - u after the basis change sending (2,3) to e1
  auto g = poly(f5, {{{0, 0, 0}, 1}, {{2, 3, 0}, -1}}, 2);
  Matrix3 m = Matrix3::from_rows({-1, 1, 0}, {-3, 2, 0}, {0, 0, 1});
  auto h = monomial_substitution(g, AffineUnimodularMap(m, {}, 2));
  CHECK(h == poly(f5, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}}, 2));
  CHECK(count_zeros(g) == count_zeros(h));

  Rng rng(17);
  for (std::uint32_t q : {5u, 7u}) {
    auto f = make_field(q);
    for (int t = 0; t < 50; ++t) {
      auto g3 = random_polynomial(testutil::random_solid(rng, 5, 0, 3), f, rng.next());
      AffineUnimodularMap phi(testutil::random_unimodular(rng, 6), {rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)});
      CHECK(count_zeros(monomial_substitution(g3, phi)) == count_zeros(g3));
    }
  }
}

TEST_CASE("random polynomials") {
  auto f7 = make_field(7);
  auto p = geom::catalog("K1");
  CHECK(random_polynomial(p, f7, 42) == random_polynomial(p, f7, 42));
  std::set<LatticeVector> seen;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_polynomial(p, f7, seed);
    for (const auto& a : g.support()) {
      CHECK(p.contains(a));
      seen.insert(a);
    }
  }
  CHECK(seen.size() == p.size());
}

TEST_CASE("width-one split") {
  auto f7 = make_field(7);
  // 1 - x + z - x^2 y^3 z
  auto f = poly(f7, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}, {{0, 0, 1}, 1}, {{2, 3, 1}, -1}});
  auto [f0, f1] = width_one_split(f);
  CHECK(f0 == poly(f7, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}}, 2));
  CHECK(f1 == poly(f7, {{{0, 0, 0}, 1}, {{2, 3, 0}, -1}}, 2));
  CHECK_THROWS_AS(width_one_split(poly(f7, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(width_one_split(poly(f7, {{{0, 0, 0}, 1}, {{0, 0, 2}, 1}})), std::invalid_argument);

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto g = random_width_one(rng, f7);
    auto [g0, g1] = width_one_split(g);
    Int zmin = 100;
    for (const auto& [a, c] : g.terms()) zmin = std::min(zmin, a[2]);
    for (int s = 0; s < 50; ++s) {
      std::vector<Elem> pt{static_cast<Elem>(1 + rng.below(6)), static_cast<Elem>(1 + rng.below(6)),
                           static_cast<Elem>(1 + rng.below(6))};
      Elem lhs = g.evaluate(pt);
      Elem rhs = f7->add(g0.evaluate({pt[0], pt[1]}), f7->mul(pt[2], g1.evaluate({pt[0], pt[1]})));
      CHECK(lhs == f7->mul(f7->pow(pt[2], zmin), rhs));
    }
  }
}

TEST_CASE("width-one counting identity") {
  Rng rng(31);
  for (std::uint32_t q : {5u, 7u, 9u}) {
    auto f = make_field(q);
    for (int t = 0; t < 34; ++t) {
      auto g = random_width_one(rng, f);
      auto [g0, g1] = width_one_split(g);
      const std::uint64_t z0 = count_zeros(g0), z1 = count_zeros(g1), z01 = common_zero_count(g0, g1);
      const std::uint64_t m = q - 1;
      CHECK(count_zeros(g) == z01 * m + m * m - z0 - z1 + z01);
    }
  }
}

TEST_CASE("primitive segment Newton polytopes") {
  Rng rng(6);
  for (std::uint32_t q : {5u, 7u}) {
    auto f = make_field(q);
    for (int t = 0; t < 20; ++t) {
      LatticeVector u;
      do u = {rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3)};
      while (!is_primitive(u));
      LatticeVector a{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)};
      LaurentPolynomial g(f, 3);
      g.add_term(a, static_cast<Elem>(1 + rng.below(q - 1)));
      g.add_term(a + u, static_cast<Elem>(1 + rng.below(q - 1)));
      CHECK(count_zeros(g) == (q - 1) * (q - 1));
    }
  }
}

}  // TEST_SUITE
