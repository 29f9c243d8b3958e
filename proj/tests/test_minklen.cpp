#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "toric3/minklen.hpp"

using namespace toric3;
using namespace toric3::geom;
using namespace toric3::minklen;
using testutil::zonotope_fits;

namespace {

LatticePolytope sum(const std::vector<LatticePolytope>& ps) { return minkowski_sum(ps); }

// every pair of unordered lattice-point pairs compared directly
bool dps_oracle(const LatticePolytope& p) {
  const auto& x = p.points();
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) {
          if (a == c && b == d) continue;
          if (x[a] + x[b] == x[c] + x[d]) return false;
        }
  return true;
}

std::vector<LatticeVector> canonical_differences(const LatticePolytope& p) {
  std::set<LatticeVector> out;
  const auto& x = p.points();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      auto d = x[j] - x[i];
      if (is_primitive(d)) out.insert(canonical_sign(d));
    }
  return {out.begin(), out.end()};
}

// all multisets of size k of candidate directions whose zonotope fits in P
std::set<std::vector<LatticeVector>> fitting_multisets(const LatticePolytope& p, int k) {
  const auto dirs = canonical_differences(p);
  std::set<std::vector<LatticeVector>> out;
  std::vector<LatticeVector> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      if (zonotope_fits(p, cur)) out.insert(cur);
      return;
    }
    for (std::size_t i = from; i < dirs.size(); ++i) {
      cur.push_back(dirs[i]);
      if (zonotope_fits(p, cur)) rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int length_oracle(const LatticePolytope& p) {
  int k = 0;
  while (!fitting_multisets(p, k + 1).empty()) ++k;
  return k;
}

}  // namespace

TEST_SUITE("minklen") {

TEST_CASE("distinct pair sums") {
  for (const char* name : {"T0", "S1", "S2", "E", "K1", "K2", "T1", "T2", "P8", "Q8", "S"}) {
    INFO(name);
    CHECK(is_dps(catalog(name)));
  }
  CHECK_FALSE(is_dps(catalog("Delta3:2")));

  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    LatticePolytope p(testutil::random_points(rng, 2 + static_cast<int>(rng.below(5)), 0, 4));
    CHECK(is_dps(p) == dps_oracle(p));
  }
}

TEST_CASE("lengths of dilates, cubes and catalog sums") {
  for (Int d = 1; d <= 4; ++d) CHECK(minkowski_length(catalog("Delta3:" + std::to_string(d))).length == d);
  CHECK(minkowski_length(catalog("Cube:1")).length == 3);
  CHECK(minkowski_length(catalog("Cube:2")).length == 6);
  CHECK(minkowski_length(LatticePolytope({{0, 0, 0}})).length == 0);

  const auto k1 = catalog("K1"), s1 = catalog("S1"), s2 = catalog("S2"), e = catalog("E"), k2 = catalog("K2"),
             s = catalog("S");
  CHECK(minkowski_length(sum({k1, k1})).length == 2);
  CHECK(minkowski_length(sum({s2, s2, s2})).length == 3);
  CHECK(minkowski_length(sum({e, s2, s2})).length == 3);
  CHECK_FALSE(has_length_at_most(sum({k2, s, s}), 3));
  CHECK_FALSE(has_length_at_most(sum({k1, k1, s1}), 3));

  const auto k3 = sum({k1, k1, k1});
  CHECK(k3.contains({-3, -3, -3}));
  CHECK(k3.contains({1, 1, 1}));
  CHECK(minkowski_length(segment({-3, -3, -3}, {1, 1, 1})).length == 4);
  CHECK(minkowski_length(k3).length >= 4);
}

TEST_CASE("length agrees with the zonotope-fit oracle") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    LatticePolytope p(testutil::random_points(rng, 2 + static_cast<int>(rng.below(4)), 0, 2));
    INFO(to_string(p.vertices().front()));
    CHECK(minkowski_length(p).length == length_oracle(p));
  }
}

TEST_CASE("maximal decompositions") {
  auto seg = segment({0, 0, 0}, {2, 0, 0});
  auto ds = maximal_segment_decompositions(seg);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].directions == std::vector<LatticeVector>{e1, e1});

  auto d2 = catalog("Delta3:2");
  std::set<std::vector<LatticeVector>> got;
  for (const auto& d : maximal_segment_decompositions(d2)) {
    CHECK(d.length() == 2);
    CHECK(d.verify(d2));
    got.insert(d.directions);
  }
  CHECK(got == fitting_multisets(d2, 2));
  CHECK(got.count({e1, e1}) == 1);
  CHECK(got.count({e2, e1}) + got.count({e1, e2}) == 1);

  auto ex = catalog("EX72");
  CHECK(minkowski_length(ex).length == 2);
  for (const auto& d : maximal_segment_decompositions(ex)) {
    CHECK(d.length() == 2);
    CHECK(d.verify(ex));
  }
}

TEST_CASE("good polytope") {
  auto d3 = catalog("Delta3");
  auto g = good_polytope(d3, 14);
  // facet normals of the standard simplex are e1, e2, e3 and -(1,1,1)
  std::size_t count = 0;
  for (Int x = -14; x <= 14; ++x)
    for (Int y = -14; y <= 14; ++y)
      for (Int z = -14; z <= 14; ++z) {
        LatticeVector u{x, y, z};
        if (is_primitive(u) && std::llabs(x + y + z) <= 14) ++count;
      }
  CHECK(g.primitive_points().size() == count);
  CHECK(good_polytope(d3, 0).integer_points() == std::vector<LatticeVector>{{0, 0, 0}});

  auto t11 = catalog("Tab:1,1");
  bool has_diag = false;
  for (const auto& f : t11.facets()) has_diag |= canonical_sign(f.normal) == LatticeVector{1, 1, 1};
  CHECK(has_diag);
  CHECK(good_polytope(t11).contains({14, 0, 0}) == std::all_of(t11.facets().begin(), t11.facets().end(),
                                                            [](const auto& f) { return std::llabs(f.normal[0] * 14) <= 14; }));
}

TEST_CASE("segments next to planar triangles") {
  auto widest = [](const std::vector<LatticeVector>& us) {
    Int w = 0;
    for (const auto& u : us) w = std::max<Int>(w, std::llabs(u[2]));
    return w;
  };
  auto delta = catalog("Delta2");
  auto su = find_segments(delta, 2);
  CHECK(widest(su) == 14);
  for (const auto& u : su) CHECK(minkowski_length(minkowski_sum(delta, segment({0, 0, 0}, u))).length == 2);

  CHECK(widest(find_segments(catalog("T0"), 2)) == 2);
  CHECK(triangle_segment_sweep(catalog("T0"), 14) == 2);
  CHECK(triangle_segment_sweep(delta, 43) == 14);
}

TEST_CASE("triangles and tetrahedra next to T1, T2, K1") {
  auto t1 = catalog("T1");
  auto tris = find_triangles(t1);
  std::set<std::vector<LatticeVector>> want;
  for (const LatticeVector& v : {e1, e2, LatticeVector{-1, -1, 0}})
    want.insert(normal_translate(LatticePolytope({{0, 0, 0}, v, e3})).vertices());
  std::set<std::vector<LatticeVector>> got;
  for (const auto& t : tris) got.insert(t.vertices());
  CHECK(got == want);
  CHECK(find_tetra(t1).empty());

  // edges of every triangle found appear among the segments
  auto segs = find_segments(t1, 2);
  for (const auto& t : tris) {
    const auto& v = t.vertices();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        CHECK(std::binary_search(segs.begin(), segs.end(), canonical_sign(v[j] - v[i])));
  }

  CHECK(find_triangles(catalog("T2")).empty());
  CHECK_FALSE(add_triangle_huh(catalog("T2")));
  CHECK(add_triangle_huh(catalog("K1")));
}

TEST_CASE("tetrahedra next to S2, E, K2") {
  auto s2 = catalog("S2");
  std::size_t vol2 = 0;
  for (const auto& t : find_tetra(s2)) {
    if (t.dim() != 3 || normalized_volume(t) != 2) continue;
    ++vol2;
    CHECK(normal_translate(t) == normal_translate(s2));
  }
  CHECK(vol2 >= 1);

  auto fe = find_tetra(catalog("E"));
  REQUIRE(fe.size() == 1);
  CHECK(fe[0] == normal_translate(s2));

  auto fk = find_tetra(catalog("K2"));
  REQUIRE(fk.size() == 1);
  CHECK(fk[0] == normal_translate(catalog("S")));
}

TEST_CASE("pair classification") {
  auto pe = classify_pair(catalog("E"), catalog("S2"));
  CHECK(pe.label == "E_S2");
  CHECK(pe.length == 2);
  REQUIRE(pe.witness);

  auto k1 = catalog("K1");
  CHECK(classify_pair(k1, k1).label == "K1_K1");
  CHECK(classify_pair(catalog("K2"), catalog("S")).label == "K2_S");
  auto swapped = classify_pair(catalog("S"), catalog("K2"));
  CHECK(swapped.label == "K2_S");
  CHECK(swapped.swapped);
  CHECK(classify_pair(catalog("T0"), catalog("T0Q2")).label == "T0_T0Q2");
  CHECK(classify_pair(catalog("S1"), catalog("S1")).label == "S1_S1");

  // empty with six points: every triangle partner is too long
  LatticePolytope six({{0, 0, 0}, e1, e2, e3, {1, 1, 1}, {2, 3, 1}});
  CHECK(six.size() == 6);
  CHECK(is_dps(six));
  CHECK(classify_pair(six, catalog("Delta2")).label == "length>2");
  CHECK_THROWS_AS(classify_pair(catalog("Delta3:2"), k1), std::invalid_argument);

  // witness maps the inputs onto the catalog pair
  Rng rng(3);
  auto a = testutil::random_unimodular(rng, 6);
  AffineUnimodularMap phi(a, {2, -1, 0});
  auto mapped = classify_pair(catalog("E").mapped(phi), catalog("S2").mapped(phi).translated({1, 0, 0}));
  CHECK(mapped.label == "E_S2");
  REQUIRE(mapped.witness);
  auto w = *mapped.witness;
  CHECK(catalog("E").mapped(phi).mapped(w.map).translated(w.translations[0]) == catalog("E"));
}

TEST_CASE("triple classification") {
  auto s1 = catalog("S1"), s2 = catalog("S2");
  auto t = classify_triple(s1, s1, s1);
  CHECK(t.label == "i");
  CHECK(t.length == 3);
  CHECK(classify_triple(s2, s2, s2).label == "iii");
  auto iv = classify_triple(s2, catalog("E"), s2);
  CHECK(iv.label == "iv");
  CHECK(iv.order[0] == 1);
  CHECK(classify_triple(catalog("K1"), catalog("K1"), s1).label == "length!=3");
  CHECK_THROWS_AS(classify_triple(catalog("T0").translated({0, 0, 0}), s1, catalog("Delta2")), std::invalid_argument);
}

TEST_CASE("three segment width scan") {
  CHECK(three_segments_width_scan(1) == 9);
  CHECK(three_segments_width_scan(2) == 4);
  auto cube = minkowski_sum(minkowski_sum(segment({0, 0, 0}, e1), segment({0, 0, 0}, e2)), segment({0, 0, 0}, e3));
  CHECK(minkowski_length(cube).length == 3);
}

TEST_CASE("length properties") {
  Rng rng(21);
  SUBCASE("superadditivity") {
    for (int i = 0; i < 200; ++i) {
      LatticePolytope p(testutil::random_points(rng, 2 + static_cast<int>(rng.below(3)), 0, 2));
      LatticePolytope q(testutil::random_points(rng, 2 + static_cast<int>(rng.below(3)), 0, 2));
      CHECK(minkowski_length(minkowski_sum(p, q)).length >= minkowski_length(p).length + minkowski_length(q).length);
    }
  }
  SUBCASE("monotone, size bound, certificates, dps") {
    for (int i = 0; i < 150; ++i) {
      LatticePolytope q(testutil::random_points(rng, 3 + static_cast<int>(rng.below(5)), 0, 3));
      std::vector<LatticeVector> sub;
      for (const auto& v : q.vertices())
        if (rng.below(3) != 0) sub.push_back(v);
      if (sub.empty()) sub.push_back(q.vertices().front());
      LatticePolytope p(sub);
      auto lq = minkowski_length(q);
      const int lp = minkowski_length(p).length;
      CHECK(lp <= lq.length);
      const auto n = static_cast<long long>(q.size());
      CHECK(n <= static_cast<long long>(lq.length + 1) * (lq.length + 1) * (lq.length + 1));
      CHECK(lq.certificate.length() == static_cast<std::size_t>(lq.length));
      CHECK(lq.certificate.verify(q));
      CHECK(is_dps(q) == (lq.length == 1));
      CHECK(has_length_at_most(q, lq.length));
      CHECK((lq.length == 0 || !has_length_at_most(q, lq.length - 1)));
    }
  }
  SUBCASE("unimodular invariance") {
    for (int i = 0; i < 80; ++i) {
      LatticePolytope p(testutil::random_points(rng, 3 + static_cast<int>(rng.below(4)), 0, 3));
      AffineUnimodularMap phi(testutil::random_unimodular(rng), {rng.range(-3, 3), rng.range(-3, 3), 0});
      CHECK(minkowski_length(p).length == minkowski_length(p.mapped(phi)).length);
    }
  }
  SUBCASE("sub-decompositions") {
    for (int i = 0; i < 40; ++i) {
      LatticePolytope p(testutil::random_points(rng, 4 + static_cast<int>(rng.below(4)), 0, 3));
      for (const auto& d : maximal_segment_decompositions(p)) {
        REQUIRE(d.verify(p));
        const std::size_t n = d.length();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          Decomposition part{{}, d.anchor};
          for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) part.directions.push_back(d.directions[j]);
          CHECK(minkowski_length(part.zonotope()).length == static_cast<int>(part.length()));
        }
      }
    }
  }
}

}  // TEST_SUITE
