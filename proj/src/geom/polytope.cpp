#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "toric3/geom.hpp"

namespace toric3 {

std::string to_string(const LatticeVector& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

namespace geom {

namespace {

struct Hull {
  int dim = 0;
  std::vector<LatticeVector> vertices;
  std::vector<HalfSpace> facets;
  std::vector<HalfSpace> equations;
  Int volume = 0;
};

HalfSpace make_halfspace(const LatticeVector& normal, const LatticeVector& through) {
  LatticeVector n = primitive_part(normal);
  return {n, dot(n, through)};
}

Hull hull_point(const LatticeVector& p) {
  Hull h;
  h.dim = 0;
  h.vertices = {p};
  h.equations = {{e1, p[0]}, {e2, p[1]}, {e3, p[2]}};
  h.volume = 1;
  return h;
}

Hull hull_segment(const std::vector<LatticeVector>& pts, const LatticeVector& p0, const LatticeVector& p1) {
  LatticeVector d = canonical_sign(primitive_part(p1 - p0));
  Int dd = dot(d, d);
  Int tmin = 0, tmax = 0;
  LatticeVector vmin = p0, vmax = p0;
  for (const auto& x : pts) {
    Int t = dot(x - p0, d) / dd;
    if (t < tmin) tmin = t, vmin = x;
    if (t > tmax) tmax = t, vmax = x;
  }
  Hull h;
  h.dim = 1;
  h.vertices = {vmin, vmax};
  std::sort(h.vertices.begin(), h.vertices.end());
  const LatticeVector rows[3] = {{0, d[2], -d[1]}, {-d[2], 0, d[0]}, {d[1], -d[0], 0}};
  for (const auto& r : rows)
    if (!r.is_zero()) h.equations.push_back(make_halfspace(r, p0));
  std::sort(h.equations.begin(), h.equations.end());
  h.equations.erase(std::unique(h.equations.begin(), h.equations.end()), h.equations.end());
  h.facets = {{d, dot(d, vmin)}, {-d, -dot(d, vmax)}};
  std::sort(h.facets.begin(), h.facets.end());
  h.volume = tmax - tmin;
  return h;
}

Hull hull_planar(const std::vector<LatticeVector>& pts, LatticeVector n) {
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::llabs(n[i]) > std::llabs(n[axis])) axis = i;
  const int a = (axis + 1) % 3, b = (axis + 2) % 3;

  std::vector<LatticeVector> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [&](const LatticeVector& x, const LatticeVector& y) {
    return std::pair(x[a], x[b]) < std::pair(y[a], y[b]);
  });
  auto turn = [&](const LatticeVector& o, const LatticeVector& p, const LatticeVector& q) {
    return (p[a] - o[a]) * (q[b] - o[b]) - (p[b] - o[b]) * (q[a] - o[a]);
  };
  // Andrew's monotone chain, strictly convex turns only
  std::vector<LatticeVector> ring(2 * sorted.size());
  std::size_t k = 0;
  for (const auto& p : sorted) {
    while (k >= 2 && turn(ring[k - 2], ring[k - 1], p) <= 0) --k;
    ring[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(ring[k - 2], ring[k - 1], sorted[i]) <= 0) --k;
    ring[k++] = sorted[i];
  }
  ring.resize(k - 1);
  // counterclockwise in the projection; flip so the orientation agrees with n
  if (n[axis] < 0) std::reverse(ring.begin(), ring.end());

  Hull h;
  h.dim = 2;
  h.equations = {make_halfspace(n, pts.front())};
  const Int nn = dot(n, n);
  Int twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& p = ring[i];
    const auto& q = ring[(i + 1) % ring.size()];
    h.facets.push_back(make_halfspace(cross(n, q - p), p));
    if (i >= 1 && i + 1 < ring.size()) twice += dot(cross(ring[i] - ring[0], ring[i + 1] - ring[0]), n) / nn;
  }
  std::sort(h.facets.begin(), h.facets.end());
  h.volume = twice;
  h.vertices = ring;
  std::sort(h.vertices.begin(), h.vertices.end());
  return h;
}

Hull hull_solid(const std::vector<LatticeVector>& pts, const int init[4]) {
  struct Face {
    int v[3];
    bool alive;
  };
  std::vector<Face> faces;
  std::unordered_map<std::uint64_t, int> edge_face;
  auto key = [](int x, int y) { return (std::uint64_t(std::uint32_t(x)) << 32) | std::uint32_t(y); };
  auto orient = [&](const Face& f, const LatticeVector& x) {
    const auto& o = pts[f.v[0]];
    return det3(pts[f.v[1]] - o, pts[f.v[2]] - o, x - o);
  };
  auto add_face = [&](int x, int y, int z) {
    faces.push_back({{x, y, z}, true});
    int id = static_cast<int>(faces.size()) - 1;
    edge_face[key(x, y)] = id;
    edge_face[key(y, z)] = id;
    edge_face[key(z, x)] = id;
  };

  for (int skip = 0; skip < 4; ++skip) {
    int tri[3], t = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri[t++] = init[i];
    Face f{{tri[0], tri[1], tri[2]}, true};
    if (orient(f, pts[init[skip]]) > 0) std::swap(tri[1], tri[2]);
    add_face(tri[0], tri[1], tri[2]);
  }

  std::vector<char> visible;
  std::vector<std::pair<int, int>> horizon;
  for (int idx = 0; idx < static_cast<int>(pts.size()); ++idx) {
    if (idx == init[0] || idx == init[1] || idx == init[2] || idx == init[3]) continue;
    const auto& x = pts[idx];
    visible.assign(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].alive && orient(faces[f], x) > 0) visible[f] = 1, any = true;
    }
    if (!any) continue;
    horizon.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) {
        int u = faces[f].v[e], w = faces[f].v[(e + 1) % 3];
        int nb = edge_face.at(key(w, u));
        if (!visible[nb]) horizon.emplace_back(u, w);
      }
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      faces[f].alive = false;
      for (int e = 0; e < 3; ++e) {
        auto it = edge_face.find(key(faces[f].v[e], faces[f].v[(e + 1) % 3]));
        if (it != edge_face.end() && it->second == static_cast<int>(f)) edge_face.erase(it);
      }
    }
    for (auto [u, w] : horizon) add_face(u, w, idx);
  }

  Hull h;
  h.dim = 3;
  Wide six = 0;
  std::vector<int> used;
  const auto& o = pts[init[0]];
  for (const auto& f : faces) {
    if (!f.alive) continue;
    const auto &p = pts[f.v[0]], &q = pts[f.v[1]], &r = pts[f.v[2]];
    h.facets.push_back(make_halfspace(-cross(q - p, r - p), p));
    six += det3(p - o, q - o, r - o);
    used.insert(used.end(), f.v, f.v + 3);
  }
  std::sort(h.facets.begin(), h.facets.end());
  h.facets.erase(std::unique(h.facets.begin(), h.facets.end()), h.facets.end());
  h.volume = narrow(six);

  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int id : used) {
    const auto& x = pts[id];
    std::vector<LatticeVector> tight;
    for (const auto& hs : h.facets)
      if (hs.tight(x)) tight.push_back(hs.normal);
    bool corner = false;
    for (std::size_t i = 0; i < tight.size() && !corner; ++i)
      for (std::size_t j = i + 1; j < tight.size() && !corner; ++j)
        for (std::size_t k = j + 1; k < tight.size() && !corner; ++k)
          corner = det3(tight[i], tight[j], tight[k]) != 0;
    if (corner) h.vertices.push_back(x);
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  return h;
}

Hull compute_hull(std::vector<LatticeVector> pts, int ambient) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto& p0 = pts[0];
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < static_cast<int>(pts.size()) && i1 < 0; ++i)
    if (pts[i] != p0) i1 = i;
  if (i1 < 0) return hull_point(p0);
  for (int i = i1 + 1; i < static_cast<int>(pts.size()) && i2 < 0; ++i)
    if (!cross(pts[i1] - p0, pts[i] - p0).is_zero()) i2 = i;
  if (i2 < 0) return hull_segment(pts, p0, pts[i1]);
  for (int i = i2 + 1; i < static_cast<int>(pts.size()) && i3 < 0; ++i)
    if (det3(pts[i1] - p0, pts[i2] - p0, pts[i] - p0) != 0) i3 = i;
  if (i3 < 0) {
    LatticeVector n = primitive_part(cross(pts[i1] - p0, pts[i2] - p0));
    n = ambient == 2 ? LatticeVector{0, 0, 1} : canonical_sign(n);
    return hull_planar(pts, n);
  }
  const int init[4] = {0, i1, i2, i3};
  return hull_solid(pts, init);
}

}  // namespace

std::vector<LatticeVector> enumerate_points(const std::vector<HalfSpace>& inequalities,
                                            const std::vector<HalfSpace>& equations, const Box& box) {
  std::vector<LatticeVector> out;
  if (box.empty()) return out;
  for (Int x = box.lo[0]; x <= box.hi[0]; ++x) {
    for (Int y = box.lo[1]; y <= box.hi[1]; ++y) {
      Int lo = box.lo[2], hi = box.hi[2];
      bool ok = true;
      for (const auto& h : equations) {
        Int r = h.offset - h.normal[0] * x - h.normal[1] * y;
        Int c = h.normal[2];
        if (c == 0) {
          if (r != 0) ok = false;
        } else if (r % c != 0) {
          ok = false;
        } else {
          lo = std::max(lo, r / c);
          hi = std::min(hi, r / c);
        }
        if (!ok || lo > hi) break;
      }
      if (!ok || lo > hi) continue;
      for (const auto& h : inequalities) {
        Int r = h.offset - h.normal[0] * x - h.normal[1] * y;
        Int c = h.normal[2];
        if (c > 0) {
          lo = std::max(lo, ceil_div(r, c));
        } else if (c < 0) {
          hi = std::min(hi, floor_div(r, c));
        } else if (r > 0) {
          ok = false;
        }
        if (!ok || lo > hi) break;
      }
      if (!ok || lo > hi) continue;
      for (Int z = lo; z <= hi; ++z) out.emplace_back(x, y, z);
    }
  }
  return out;
}

LatticePolytope::LatticePolytope(std::vector<LatticeVector> points, int ambient) : ambient_(ambient) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point list");
  if (ambient != 2 && ambient != 3) throw std::invalid_argument("ambient dimension must be 2 or 3");
  for (const auto& p : points) {
    for (int i = 0; i < 3; ++i)
      if (std::llabs(p[i]) > kMaxCoordinate) throw std::domain_error("coordinate magnitude too large");
    if (ambient == 2 && p[2] != 0) throw std::invalid_argument("planar point with nonzero z");
  }
  Hull h = compute_hull(std::move(points), ambient);
  dim_ = h.dim;
  vertices_ = std::move(h.vertices);
  facets_ = std::move(h.facets);
  equations_ = std::move(h.equations);
  volume_ = h.volume;
  points_ = enumerate_points(facets_, equations_, bounding_box());
}

Box LatticePolytope::bounding_box() const {
  Box b{vertices_.front(), vertices_.front()};
  for (const auto& v : vertices_)
    for (int i = 0; i < 3; ++i) {
      b.lo[i] = std::min(b.lo[i], v[i]);
      b.hi[i] = std::max(b.hi[i], v[i]);
    }
  return b;
}

bool LatticePolytope::contains(const LatticeVector& x) const {
  for (const auto& h : equations_)
    if (!h.tight(x)) return false;
  for (const auto& h : facets_)
    if (!h.satisfied(x)) return false;
  return true;
}

bool LatticePolytope::in_relative_interior(const LatticeVector& x) const {
  if (dim_ == 0) return contains(x);
  for (const auto& h : equations_)
    if (!h.tight(x)) return false;
  for (const auto& h : facets_)
    if (dot(h.normal, x) <= h.offset) return false;
  return true;
}

LatticePolytope LatticePolytope::translated(const LatticeVector& t) const {
  std::vector<LatticeVector> v;
  v.reserve(vertices_.size());
  for (const auto& x : vertices_) v.push_back(x + t);
  return LatticePolytope(std::move(v), ambient_);
}

LatticePolytope LatticePolytope::mapped(const AffineUnimodularMap& phi) const {
  if (ambient_ == 2 && phi.dim() != 2) throw std::invalid_argument("planar polytope needs a planar map");
  std::vector<LatticeVector> v;
  v.reserve(vertices_.size());
  for (const auto& x : vertices_) v.push_back(phi(x));
  return LatticePolytope(std::move(v), ambient_);
}

LatticePolytope convex_hull(const std::vector<LatticeVector>& points, int ambient) {
  return LatticePolytope(points, ambient);
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p) { return p.points(); }

LatticePolytope segment(const LatticeVector& a, const LatticeVector& b, int ambient) {
  return LatticePolytope({a, b}, ambient);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("dimension tag mismatch");
  std::vector<LatticeVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return LatticePolytope(std::move(sums), p.ambient_dim());
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& summands) {
  if (summands.empty()) throw std::invalid_argument("empty Minkowski sum");
  LatticePolytope acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) acc = minkowski_sum(acc, summands[i]);
  return acc;
}

LatticePolytope dilate(const LatticePolytope& p, Int k) {
  if (k < 0) throw std::invalid_argument("negative dilation factor");
  std::vector<LatticeVector> v;
  for (const auto& x : p.vertices()) v.push_back(k * x);
  return LatticePolytope(std::move(v), p.ambient_dim());
}

Int normalized_volume(const LatticePolytope& p) { return p.relative_volume(); }

Int ambient_vol3(const LatticePolytope& p) { return p.dim() == 3 ? p.relative_volume() : 0; }

Int vol2(const LatticePolytope& p) {
  if (p.dim() != 2) return 0;
  return p.relative_volume();
}

Int mixed_area(const LatticePolytope& p0, const LatticePolytope& p1) {
  if (p0.ambient_dim() != 2 || p1.ambient_dim() != 2) throw std::invalid_argument("mixed_area needs planar polytopes");
  Int twice = vol2(minkowski_sum(p0, p1)) - vol2(p0) - vol2(p1);
  return twice / 2;
}

Int width_in_direction(const LatticePolytope& p, const LatticeVector& v) {
  if (!is_primitive(v)) throw std::invalid_argument("width direction is not primitive");
  Int lo = dot(p.vertices().front(), v), hi = lo;
  for (const auto& x : p.vertices()) {
    Int s = dot(x, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

/*
 * If w_v(P) <= B then |<v, p_i - p_0>| <= B for every vertex, in particular for an
 * affinely independent tuple p_0..p_n.  With M the matrix of rows p_i - p_0 this
 * reads |M v|_inf <= B, so v = adj(M) y / det(M) lies in an explicit box.
 */
LatticeWidth lattice_width(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  if (p.dim() != n) throw std::invalid_argument("lattice_width needs a full-dimensional polytope");
  const auto& vs = p.vertices();
  std::vector<LatticeVector> rows;
  for (std::size_t i = 1; i < vs.size() && static_cast<int>(rows.size()) < n; ++i) {
    LatticeVector d = vs[i] - vs[0];
    if (rows.empty()) {
      rows.push_back(d);
    } else if (rows.size() == 1) {
      if (!cross(rows[0], d).is_zero()) rows.push_back(d);
    } else if (det3(rows[0], rows[1], d) != 0) {
      rows.push_back(d);
    }
  }
  if (n == 2) rows.push_back(e3);
  Matrix3 m = Matrix3::from_rows(rows[0], rows[1], rows[2]);
  Wide det = m.det();
  Matrix3 adj = m.adjugate();
  Int bound = INT64_MAX;
  for (int i = 0; i < n; ++i) bound = std::min(bound, width_in_direction(p, i == 0 ? e1 : i == 1 ? e2 : e3));

  LatticeVector ext;
  for (int j = 0; j < 3; ++j) {
    Wide s = 0;
    for (int i = 0; i < n; ++i) s += Wide(std::llabs(adj(j, i)));
    Wide absdet = det < 0 ? -det : det;
    ext[j] = j < n ? narrow(Wide(bound) * s / absdet) : 0;
  }
  LatticeWidth best{bound, n == 2 ? e2 : e3};
  bool found = false;
  for (Int x = -ext[0]; x <= ext[0]; ++x)
    for (Int y = -ext[1]; y <= ext[1]; ++y)
      for (Int z = -ext[2]; z <= ext[2]; ++z) {
        LatticeVector v{x, y, z};
        if (!is_canonical(v) || !is_primitive(v)) continue;
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) inside = std::llabs(dot(rows[i], v)) <= bound;
        if (!inside) continue;
        Int w = width_in_direction(p, v);
        if (!found || w < best.width || (w == best.width && v < best.direction)) {
          best = {w, v};
          found = true;
        }
      }
  return best;
}

std::vector<LatticeVector> erode(const std::vector<LatticeVector>& points, const LatticeVector& u) {
  std::vector<LatticeVector> out;
  for (const auto& x : points)
    if (std::binary_search(points.begin(), points.end(), x + u)) out.push_back(x);
  return out;
}

ShapeInfo shape_predicates(const LatticePolytope& p) {
  ShapeInfo s;
  for (const auto& x : p.points()) {
    if (p.dim() > 0 && p.in_relative_interior(x))
      ++s.interior_count;
    else
      ++s.boundary_count;
  }
  s.is_empty = p.points().size() == p.vertices().size();
  s.is_clean = s.boundary_count == p.vertices().size();
  s.facet_count = p.facets().size();
  return s;
}

std::vector<LatticePolytope> facet_polytopes(const LatticePolytope& p) {
  std::vector<LatticePolytope> out;
  for (const auto& h : p.facets()) {
    std::vector<LatticeVector> on;
    for (const auto& x : p.vertices())
      if (h.tight(x)) on.push_back(x);
    out.emplace_back(std::move(on), p.ambient_dim());
  }
  return out;
}

LatticePolytope normal_translate(const LatticePolytope& p) { return p.translated(-p.vertices().front()); }

bool RationalHalfSpaceSystem::contains(const LatticeVector& x) const {
  for (const auto& h : inequalities)
    if (!h.satisfied(x)) return false;
  return true;
}

std::vector<LatticeVector> RationalHalfSpaceSystem::integer_points() const {
  return enumerate_points(inequalities, {}, box);
}

std::vector<LatticeVector> RationalHalfSpaceSystem::primitive_points() const {
  std::vector<LatticeVector> out;
  for (const auto& x : integer_points())
    if (is_primitive(x)) out.push_back(x);
  return out;
}

}  // namespace geom
}  // namespace toric3
