#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toric3/minklen.hpp"

namespace toric3::minklen {

using geom::HalfSpace;
using geom::RationalHalfSpaceSystem;

namespace {

int length_of(const LatticePolytope& p) { return minkowski_length(p).length; }

bool length_equals(const LatticePolytope& p, int k) {
  return has_length_at_most(p, k) && (k == 0 || !has_length_at_most(p, k - 1));
}

Int ceil_div_pos(Wide a, Wide b) { return static_cast<Int>((a + b - 1) / b); }

// Rows: two in-plane coordinates, then the primitive plane normal.
Matrix3 plane_coordinates(const LatticePolytope& p) {
  const auto& v = p.vertices();
  LatticeVector a = v[1] - v[0];
  LatticeVector m;
  for (std::size_t i = 2; i < v.size() && m.is_zero(); ++i) m = cross(a, v[i] - v[0]);
  m = canonical_sign(primitive_part(m));
  Matrix3 t = complete_to_unimodular(m, 3).transpose();
  return Matrix3::from_rows(t.row(1), t.row(2), t.row(0));
}

Int planar_bound(const LatticePolytope& p, Int bound) {
  static const LatticePolytope t0 = geom::catalog("T0");
  if (p.size() == 4 && geom::equivalent(p, t0)) return std::min<Int>(bound, 2);
  return bound;
}

LatticePolytope segment_from_origin(const LatticeVector& u) { return LatticePolytope({LatticeVector{}, u}); }

// Translate-invariant key for deduplication.
std::vector<LatticeVector> shape_key(const LatticePolytope& p) { return geom::normal_translate(p).vertices(); }

template <class Accept>
std::vector<LatticePolytope> assemble(const LatticePolytope& p, int points_needed, Int bound, Accept accept,
                                      bool stop_at_first) {
  if (p.dim() != 3) throw std::invalid_argument("triangle/tetra search needs a full-dimensional polytope");
  const int target = length_of(p) + 1;
  std::vector<LatticeVector> dirs;
  for (const auto& u : find_segments(p, target, bound)) {
    dirs.push_back(u);
    dirs.push_back(-1 * u);
  }
  std::sort(dirs.begin(), dirs.end());
  auto in_dirs = [&](const LatticeVector& d) { return std::binary_search(dirs.begin(), dirs.end(), d); };

  std::set<std::vector<LatticeVector>> seen;
  std::vector<LatticePolytope> out;
  std::vector<LatticeVector> pick{LatticeVector{}};

  // cliques in the difference graph on ±S, anchored at the origin
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == points_needed) {
      LatticePolytope t(pick);
      if (t.size() != pick.size() || !accept(t)) return false;
      auto key = shape_key(t);
      if (!seen.insert(key).second) return false;
      if (!is_dps(t)) return false;
      if (!has_length_at_most(geom::minkowski_sum(p, t), target)) return false;
      out.push_back(geom::normal_translate(t));
      return stop_at_first;
    }
    for (std::size_t i = from; i < dirs.size(); ++i) {
      const auto& c = dirs[i];
      bool ok = true;
      for (std::size_t j = 1; j < pick.size() && ok; ++j) ok = in_dirs(c - pick[j]);
      if (!ok) continue;
      pick.push_back(c);
      bool done = self(self, i + 1);
      pick.pop_back();
      if (done) return true;
    }
    return false;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertices() < b.vertices(); });
  return out;
}

// witness for (ps) -> (qs) in some order of the inputs
struct Match {
  geom::TupleWitness witness;
  std::vector<int> order;
};

std::optional<Match> match_any_order(const std::vector<LatticePolytope>& in, const std::vector<LatticePolytope>& ref) {
  std::vector<int> order(in.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  do {
    bool sizes = true;
    for (std::size_t i = 0; i < order.size(); ++i) sizes = sizes && in[order[i]].size() == ref[i].size();
    if (!sizes) continue;
    std::vector<LatticePolytope> ps;
    for (int i : order) ps.push_back(in[i]);
    if (auto w = geom::tuple_equivalent(ps, ref)) return Match{*w, order};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

const LatticePolytope& cat(const char* name) {
  static std::map<std::string, LatticePolytope> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, geom::catalog(name)).first;
  return it->second;
}

// the four empty tetrahedra inside K1 spanned by its centre and three vertices
std::vector<LatticePolytope> k1_corners() {
  const auto& v = cat("K1").vertices();
  std::vector<LatticePolytope> out;
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<LatticeVector> pts{LatticeVector{}};
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) pts.push_back(v[i]);
    out.emplace_back(pts);
  }
  return out;
}

}  // namespace

RationalHalfSpaceSystem good_polytope(const LatticePolytope& p, Int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  RationalHalfSpaceSystem g;
  if (p.dim() == 3) {
    std::vector<LatticeVector> normals;
    for (const auto& f : p.facets()) {
      g.inequalities.push_back({f.normal, -bound});
      g.inequalities.push_back({-1 * f.normal, -bound});
      normals.push_back(f.normal);
    }
    // box from any three independent normals: u = N^{-1} y with |y_i| <= bound
    Matrix3 n;
    bool found = false;
    for (std::size_t i = 0; i < normals.size() && !found; ++i)
      for (std::size_t j = i + 1; j < normals.size() && !found; ++j)
        for (std::size_t k = j + 1; k < normals.size() && !found; ++k)
          if (det3(normals[i], normals[j], normals[k]) != 0) {
            n = Matrix3::from_rows(normals[i], normals[j], normals[k]);
            found = true;
          }
    const Matrix3 adj = n.adjugate();
    const Wide det = n.det() < 0 ? -n.det() : n.det();
    for (int r = 0; r < 3; ++r) {
      Wide s = 0;
      for (int c = 0; c < 3; ++c) s += adj.m[r][c] < 0 ? -adj.m[r][c] : adj.m[r][c];
      const Int e = ceil_div_pos(s * bound, det);
      g.box.lo[r] = -e;
      g.box.hi[r] = e;
    }
    return g;
  }
  if (p.dim() != 2) throw std::invalid_argument("good_polytope needs a polytope of dimension 2 or 3");
  // Planar P: maps fixing aff(P) pointwise act by shears, so directions are
  // normalised to 0 <= w1, w2 <= w3 <= bound in coordinates w = U u.
  const Int b = planar_bound(p, bound);
  const Matrix3 u = plane_coordinates(p);
  const LatticeVector r1 = u.row(0), r2 = u.row(1), m = u.row(2);
  g.inequalities = {{m, 0}, {-1 * m, -b}, {r1, 0}, {m - r1, 0}, {r2, 0}, {m - r2, 0}};
  const Matrix3 inv = unimodular_inverse(u);
  for (int r = 0; r < 3; ++r) {
    Int s = 0;
    for (int c = 0; c < 3; ++c) s += std::llabs(inv.m[r][c]);
    g.box.lo[r] = -s * b;
    g.box.hi[r] = s * b;
  }
  return g;
}

std::vector<LatticeVector> find_segments(const LatticePolytope& p, int target_length, Int bound) {
  std::vector<LatticeVector> cand;
  for (const auto& u : good_polytope(p, bound).primitive_points()) cand.push_back(canonical_sign(u));
  if (p.dim() == 2) {
    // in-plane directions: |<n_F, inv w>| <= bound with w = (w1, w2, 0)
    const Matrix3 inv = unimodular_inverse(plane_coordinates(p));
    std::vector<std::pair<Int, Int>> forms;
    for (const auto& f : p.facets()) {
      const LatticeVector g = inv.transpose().apply(f.normal);
      forms.push_back({g[0], g[1]});
    }
    Wide det = 0;
    std::pair<Int, Int> f0, f1;
    for (std::size_t i = 0; i < forms.size() && det == 0; ++i)
      for (std::size_t j = i + 1; j < forms.size() && det == 0; ++j) {
        det = static_cast<Wide>(forms[i].first) * forms[j].second - static_cast<Wide>(forms[i].second) * forms[j].first;
        f0 = forms[i], f1 = forms[j];
      }
    if (det < 0) det = -det;
    const Int e0 = ceil_div_pos(static_cast<Wide>(std::llabs(f1.second) + std::llabs(f0.second)) * bound, det);
    const Int e1v = ceil_div_pos(static_cast<Wide>(std::llabs(f1.first) + std::llabs(f0.first)) * bound, det);
    for (Int a = -e0; a <= e0; ++a)
      for (Int c = -e1v; c <= e1v; ++c) {
        LatticeVector w{a, c, 0};
        if (!is_primitive(w)) continue;
        LatticeVector v = inv.apply(w);
        bool ok = true;
        for (const auto& f : p.facets()) ok = ok && std::llabs(dot(f.normal, v)) <= bound;
        if (ok) cand.push_back(canonical_sign(v));
      }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<LatticeVector> out;
  for (const auto& u : cand)
    if (length_equals(geom::minkowski_sum(p, segment_from_origin(u)), target_length)) out.push_back(u);
  return out;
}

std::vector<LatticePolytope> find_triangles(const LatticePolytope& p, Int bound) {
  return assemble(p, 3, bound, [](const LatticePolytope& t) { return t.dim() == 2; }, false);
}

bool add_triangle_huh(const LatticePolytope& p, Int bound) {
  return !assemble(p, 3, bound, [](const LatticePolytope& t) { return t.dim() == 2; }, true).empty();
}

std::vector<LatticePolytope> find_tetra(const LatticePolytope& p, Int bound) {
  return assemble(p, 4, bound, [](const LatticePolytope& t) { return t.dim() >= 2; }, false);
}

bool add_tetra_huh(const LatticePolytope& p, Int bound) {
  return !assemble(p, 4, bound, [](const LatticePolytope& t) { return t.dim() >= 2; }, true).empty();
}

PairClass classify_pair(const LatticePolytope& p, const LatticePolytope& q) {
  if (!is_dps(p) || !is_dps(q)) throw std::invalid_argument("classify_pair needs L(P) = L(Q) = 1");
  PairClass out;
  const auto sum = geom::minkowski_sum(p, q);
  if (!has_length_at_most(sum, 2)) {
    out.label = "length>2";
    out.length = -1;
    return out;
  }
  out.length = 2;
  if (std::min(p.size(), q.size()) <= 3) {
    out.label = "unclassified-small";
    return out;
  }

  std::vector<std::pair<std::string, std::vector<LatticePolytope>>> refs = {
      {"E_S2", {cat("E"), cat("S2")}},       {"K2_S", {cat("K2"), cat("S")}},
      {"K1_K1", {cat("K1"), cat("K1")}},     {"S2_S2", {cat("S2"), cat("S2")}},
      {"T0_T0Q1", {cat("T0"), cat("T0Q1")}}, {"T0_T0Q2", {cat("T0"), cat("T0Q2")}},
  };
  for (const auto& c : k1_corners()) refs.push_back({"K1_S1", {cat("K1"), c}});
  for (const auto& [label, ref] : refs)
    if (auto m = match_any_order({p, q}, ref)) {
      out.label = label;
      out.witness = m->witness;
      out.swapped = m->order[0] == 1;
      return out;
    }

  // empty tetrahedra: only the individual classes are pinned down
  for (const char* first : {"S1", "S2"})
    for (const char* second : {"S1", "S2"}) {
      if (std::string(first) > second) continue;
      for (bool swap : {false, true}) {
        const auto& a = swap ? q : p;
        const auto& b = swap ? p : q;
        auto phi = geom::equivalent(a, cat(first));
        if (!phi || !geom::equivalent(b, cat(second))) continue;
        auto w = geom::tuple_equivalent({a, b}, {cat(first), geom::normal_translate(b.mapped(*phi))});
        if (!w) continue;
        out.label = std::string(first) + "_" + second;
        out.witness = *w;
        out.swapped = swap;
        return out;
      }
    }
  out.label = "unclassified";
  return out;
}

TripleClass classify_triple(const LatticePolytope& p, const LatticePolytope& q, const LatticePolytope& r) {
  const std::vector<LatticePolytope> in{p, q, r};
  for (const auto& x : in) {
    if (x.size() < 4) throw std::invalid_argument("classify_triple needs at least 4 lattice points per summand");
    if (!is_dps(x)) throw std::invalid_argument("classify_triple needs L = 1 for every summand");
  }
  TripleClass out;
  const auto sum = geom::minkowski_sum(in);
  if (!has_length_at_most(sum, 3)) {
    out.label = "length!=3";
    out.length = length_of(sum);
    return out;
  }
  out.length = 3;

  const std::vector<std::pair<std::string, std::vector<LatticePolytope>>> refs = {
      {"i", {cat("S1"), cat("S1"), cat("S1")}},
      {"iii", {cat("S2"), cat("S2"), cat("S2")}},
      {"iv", {cat("E"), cat("S2"), cat("S2")}},
  };
  for (const auto& [label, ref] : refs)
    if (auto m = match_any_order(in, ref)) {
      out.label = label;
      out.witness = m->witness;
      out.order = m->order;
      return out;
    }

  // (ii): one S1 next to two translates of one S2
  for (int s1 = 0; s1 < 3; ++s1) {
    const int a = (s1 + 1) % 3, b = (s1 + 2) % 3;
    if (geom::normal_translate(in[a]) != geom::normal_translate(in[b])) continue;
    auto phi = geom::equivalent(in[a], cat("S2"));
    if (!phi || !geom::equivalent(in[s1], cat("S1"))) continue;
    auto w = geom::tuple_equivalent({in[s1], in[a], in[b]},
                                    {geom::normal_translate(in[s1].mapped(*phi)), cat("S2"), cat("S2")});
    if (!w) continue;
    out.label = "ii";
    out.witness = *w;
    out.order = {s1, a, b};
    return out;
  }
  out.label = "unclassified";
  return out;
}

Int three_segments_width_scan(int which_case, Int limit) {
  if (which_case != 1 && which_case != 2) throw std::invalid_argument("case must be 1 or 2");
  const LatticePolytope base = geom::minkowski_sum(segment_from_origin(e1),
                                                   segment_from_origin(which_case == 1 ? e2 : LatticeVector{1, 2, 0}));
  for (Int c = limit; c >= 1; --c)
    for (Int b = 0; b < c; ++b)
      for (Int a = 0; a <= b; ++a) {
        LatticeVector u{a, b, c};
        if (is_primitive(u) && has_length_at_most(geom::minkowski_sum(base, segment_from_origin(u)), 3)) return c;
      }
  return 0;
}

Int triangle_segment_sweep(const LatticePolytope& triangle, Int limit) {
  for (const auto& v : triangle.vertices())
    if (v[2] != 0) throw std::invalid_argument("sweep expects a triangle in the plane z = 0");
  const int target = length_of(triangle) + 1;
  for (Int r = limit; r >= 1; --r)
    for (Int p = 0; p <= r; ++p)
      for (Int q = 0; q <= r; ++q) {
        LatticeVector u{p, q, r};
        if (!is_primitive(u)) continue;
        if (has_length_at_most(geom::minkowski_sum(triangle, segment_from_origin(u)), target)) return r;
      }
  return 0;
}

}  // namespace toric3::minklen
