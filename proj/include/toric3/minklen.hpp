#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric3/geom.hpp"

namespace toric3::minklen {

using geom::LatticePolytope;

// anchor + sum of [0, u] over directions sits inside the host polytope
struct Decomposition {
  std::vector<LatticeVector> directions;  // canonical sign, sorted
  LatticeVector anchor;

  std::size_t length() const { return directions.size(); }
  bool verify(const LatticePolytope& host) const;
  LatticePolytope zonotope() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct LengthResult {
  int length = 0;
  Decomposition certificate;
};

LengthResult minkowski_length(const LatticePolytope& p);
bool has_length_at_most(const LatticePolytope& p, int k);
std::vector<Decomposition> maximal_segment_decompositions(const LatticePolytope& p);
bool is_dps(const LatticePolytope& p);

// Region of directions u with |<u, n_F>| <= bound on every facet normal.
geom::RationalHalfSpaceSystem good_polytope(const LatticePolytope& p, Int bound = 14);
std::vector<LatticeVector> find_segments(const LatticePolytope& p, int target_length, Int bound = 14);
std::vector<LatticePolytope> find_triangles(const LatticePolytope& p, Int bound = 14);
bool add_triangle_huh(const LatticePolytope& p, Int bound = 14);
std::vector<LatticePolytope> find_tetra(const LatticePolytope& p, Int bound = 14);
bool add_tetra_huh(const LatticePolytope& p, Int bound = 14);

struct PairClass {
  std::string label;  // e.g. "K1_S1"; "length>2", "unclassified-small", "unclassified"
  int length = 0;     // L(P + Q)
  std::optional<geom::TupleWitness> witness;  // maps (P, Q) or (Q, P) onto the catalog pair
  bool swapped = false;                       // witness maps (Q, P)
};
PairClass classify_pair(const LatticePolytope& p, const LatticePolytope& q);

struct TripleClass {
  std::string label;  // "i".."iv", "length!=3", "unclassified"
  int length = 0;
  std::optional<geom::TupleWitness> witness;
  std::vector<int> order;  // witness maps (input[order[0]], input[order[1]], input[order[2]])
};
TripleClass classify_triple(const LatticePolytope& p, const LatticePolytope& q, const LatticePolytope& r);

// Largest c over u3 = (a, b, c), 0 <= a <= b < c <= 14, primitive, with
// L(I1 + I2 + [0, u3]) = 3; case 1 uses the unit square, case 2 [0,e1]+[0,(1,2,0)].
Int three_segments_width_scan(int which_case, Int limit = 14);

// Max z-coordinate r over primitive u = (p, q, r), 0 <= p, q <= r <= limit, with
// L(P + [0, u]) = 2.  P is a lattice triangle in the plane z = 0.
Int triangle_segment_sweep(const LatticePolytope& triangle, Int limit);

}  // namespace toric3::minklen
