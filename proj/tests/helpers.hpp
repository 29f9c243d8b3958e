#pragma once

#include <vector>

#include "toric3/geom.hpp"
#include "toric3/rng.hpp"

namespace testutil {

using toric3::Int;
using toric3::LatticeVector;
using toric3::geom::LatticePolytope;

inline std::vector<LatticeVector> random_points(toric3::Rng& rng, int count, Int lo, Int hi, bool planar = false) {
  std::vector<LatticeVector> pts;
  for (int i = 0; i < count; ++i)
    pts.push_back({rng.range(lo, hi), rng.range(lo, hi), planar ? 0 : rng.range(lo, hi)});
  return pts;
}

// random full-dimensional polytope from `count` points in [lo, hi]^3
inline LatticePolytope random_solid(toric3::Rng& rng, int count, Int lo, Int hi) {
  for (;;) {
    LatticePolytope p(random_points(rng, count, lo, hi));
    if (p.dim() == 3) return p;
  }
}

inline LatticePolytope random_polygon(toric3::Rng& rng, int count, Int lo, Int hi, int ambient = 2) {
  for (;;) {
    LatticePolytope p(random_points(rng, count, lo, hi, true), ambient);
    if (p.dim() == 2) return p;
  }
}

// product of elementary matrices with small multipliers, random signs and swaps
inline toric3::Matrix3 random_unimodular(toric3::Rng& rng, int steps = 4, int dim = 3) {
  toric3::Matrix3 a = toric3::Matrix3::identity();
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng.below(dim)), j = static_cast<int>(rng.below(dim));
    if (i == j) continue;
    toric3::Matrix3 e = toric3::Matrix3::identity();
    e(i, j) = rng.range(-1, 1);
    a = e * a;
  }
  if (rng.below(2)) {
    toric3::Matrix3 f = toric3::Matrix3::identity();
    f(0, 0) = -1;
    a = f * a;
  }
  return a;
}

// some translate of sum [0, u_i] fits in P; brute force over subset sums
inline bool zonotope_fits(const LatticePolytope& p, const std::vector<LatticeVector>& dirs) {
  for (const auto& t : toric3::geom::enumerate_points({}, {}, p.bounding_box())) {
    bool all = true;
    for (unsigned mask = 0; mask < (1u << dirs.size()) && all; ++mask) {
      LatticeVector x = t;
      for (std::size_t i = 0; i < dirs.size(); ++i)
        if (mask & (1u << i)) x += dirs[i];
      all = p.contains(x);
    }
    if (all) return true;
  }
  return false;
}

}  // namespace testutil
