#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric3/lattice.hpp"
#include "toric3/unimodular.hpp"

namespace toric3::geom {

// <normal, x> >= offset  (or == offset when used as an equation)
struct HalfSpace {
  LatticeVector normal;
  Int offset = 0;

  bool satisfied(const LatticeVector& x) const { return dot(normal, x) >= offset; }
  bool tight(const LatticeVector& x) const { return dot(normal, x) == offset; }
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct Box {
  LatticeVector lo, hi;  // inclusive
  bool empty() const { return lo[0] > hi[0] || lo[1] > hi[1] || lo[2] > hi[2]; }
};

// Integer points of {x in box : all inequalities and equations hold}, lex sorted.
std::vector<LatticeVector> enumerate_points(const std::vector<HalfSpace>& inequalities,
                                            const std::vector<HalfSpace>& equations, const Box& box);

class LatticePolytope {
 public:
  // Convex hull of a nonempty point list. ambient is 2 (all z = 0) or 3.
  explicit LatticePolytope(std::vector<LatticeVector> points, int ambient = 3);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<LatticeVector>& points() const { return points_; }
  // Inward primitive normals.  For lower-dimensional P these are the facets of P
  // inside aff(P); equations() then cut out aff(P).
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<HalfSpace>& equations() const { return equations_; }
  // Normalized volume measured in the lattice of aff(P); 1 for a point.
  Int relative_volume() const { return volume_; }
  std::size_t size() const { return points_.size(); }
  Box bounding_box() const;

  bool contains(const LatticeVector& x) const;
  bool in_relative_interior(const LatticeVector& x) const;

  LatticePolytope translated(const LatticeVector& t) const;
  LatticePolytope mapped(const AffineUnimodularMap& phi) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  int ambient_ = 3;
  int dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<LatticeVector> points_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equations_;
  Int volume_ = 0;
};

LatticePolytope convex_hull(const std::vector<LatticeVector>& points, int ambient = 3);
std::vector<LatticeVector> lattice_points(const LatticePolytope& p);

LatticePolytope segment(const LatticeVector& a, const LatticeVector& b, int ambient = 3);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& summands);
LatticePolytope dilate(const LatticePolytope& p, Int k);

Int normalized_volume(const LatticePolytope& p);
Int ambient_vol3(const LatticePolytope& p);
// normalized area of a polygon; 0 when dim < 2
Int vol2(const LatticePolytope& p);
Int mixed_area(const LatticePolytope& p0, const LatticePolytope& p1);

Int width_in_direction(const LatticePolytope& p, const LatticeVector& v);

struct LatticeWidth {
  Int width = 0;
  LatticeVector direction;
};
LatticeWidth lattice_width(const LatticePolytope& p);

// {x in S : x + u in S}; S must be lex sorted
std::vector<LatticeVector> erode(const std::vector<LatticeVector>& points, const LatticeVector& u);

struct ShapeInfo {
  bool is_empty = false;
  bool is_clean = false;
  std::size_t interior_count = 0;
  std::size_t boundary_count = 0;
  std::size_t facet_count = 0;
};
ShapeInfo shape_predicates(const LatticePolytope& p);

// Facets of a full-dimensional polytope as lattice polytopes.
std::vector<LatticePolytope> facet_polytopes(const LatticePolytope& p);

std::optional<AffineUnimodularMap> equivalent(const LatticePolytope& p, const LatticePolytope& q);

// phi(P_i) + translations[i] = Q_i, one shared linear map phi.
struct TupleWitness {
  AffineUnimodularMap map;
  std::vector<LatticeVector> translations;
};
std::optional<TupleWitness> tuple_equivalent(const std::vector<LatticePolytope>& ps,
                                             const std::vector<LatticePolytope>& qs);

// Translate so the lex-smallest vertex sits at the origin.
LatticePolytope normal_translate(const LatticePolytope& p);

// Bounded region given by inequalities; only its integer points are exposed.
struct RationalHalfSpaceSystem {
  std::vector<HalfSpace> inequalities;
  Box box;  // integer box known to contain the region

  bool contains(const LatticeVector& x) const;
  std::vector<LatticeVector> integer_points() const;
  std::vector<LatticeVector> primitive_points() const;
};

LatticePolytope catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace toric3::geom
