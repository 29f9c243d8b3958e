#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric3/geom.hpp"

namespace toric3::bounds {

using Rational = boost::rational<Int>;

// floor(sqrt(x)) and floor(2 sqrt(q)), exact
std::uint64_t isqrt(std::uint64_t x);
Int floor_two_sqrt(Int q);

// smallest prime power >= x - 1e-9
std::uint64_t prime_power_at_least(long double x);

struct Threshold {
  long double value = 0;
  std::uint64_t prime_power = 0;  // smallest prime power >= value
};

struct Hypothesis {
  std::string flag;
  std::optional<bool> met;  // nullopt when it cannot be decided from the inputs
};

struct BoundReport {
  std::string name;
  Rational value;  // integral except for finite_class with odd F
  std::vector<Hypothesis> hypotheses;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<bool> holds;  // value >= N_P, when N_P is known
  bool hypotheses_met() const;
};

enum class SpecialClass { Segment, UnitTriangle, Unit3Simplex, T0, S2, E, K1, K2 };
SpecialClass parse_special_class(const std::string& name);
std::string to_string(SpecialClass c);

Int special_bound(SpecialClass c, Int q);
Int width_one_bound(Int vol3, Int vol2_0, Int vol2_1, Int n0, Int n1, Int q);
Rational finite_class_bound(Int vol3, Int facets, Int q);
Int dps_volume_bound(Int vol3, Int q);
Int maxa_bound(Int length, Int k, Int q, Int vol3, bool has_t0_factor);

struct CmaxThreshold {
  Rational c;
  Threshold q_min;
};
CmaxThreshold cmax_threshold(Int length, Int vol3);
Int cmax_bound(Int length, Int q);

long double gl_bound(Int d, long double q);
long double psi(Int k, Int m, Int d, long double q);
// left-hand sides of the two inequalities defining alpha
std::pair<long double, long double> alpha_inequalities(Int length, Int d, long double q);
Threshold alpha(Int length, Int d);
bool alpha_holds(Int length, Int d, long double q);
// L (q-1)^2 + 2 (q-1)(2 sqrt q - 1), floored
Int all_bound(Int length, Int q);

Int simplex_bound(Int length, Int q, int n);

enum class BetaMode { PerSummand, Global };
BetaMode parse_beta_mode(const std::string& s);
struct BetaInputs {
  Int vol2_0 = 0, vol2_1 = 0;  // normalized areas of P0, P1
  Int length_0 = 0, length_1 = 0;
  Int mixed = 0;   // V(P0, P1)
  Int length = 0;  // L(P)
};
struct BetaValue {
  Rational big_c, small_c;
  Threshold beta;
};
BetaValue beta(const BetaInputs& in, BetaMode mode = BetaMode::PerSummand);
BetaValue beta(const geom::LatticePolytope& p0, const geom::LatticePolytope& p1, Int length,
               BetaMode mode = BetaMode::PerSummand);
Int width_one_final_bound(Int length, Int q);

// P = conv(P0 x {0}, P1 x {1}) after a unimodular change of coordinates.
struct WidthOneSplit {
  geom::LatticePolytope p0, p1;  // planar, ambient 2
  AffineUnimodularMap map;
};
std::optional<WidthOneSplit> split_width_one(const geom::LatticePolytope& p);

Int griesmer_max_d(Int n, Int k, Int q);
Int gv_max_d(Int n, Int k, Int q);

// floor of (q-1)^3 - L (q-1)^2 - s (q-1)(2 sqrt q - 1) with s = 1 (width one) or 2
Int mindist_lower_bound(Int length, Int q, bool width_one);

// smallest d with P inside a translate of d * Delta^3
Int simplex_degree(const geom::LatticePolytope& p);

// Every bound that speaks about N_P for this P and q, with hypothesis flags.
std::vector<BoundReport> polytope_bounds(const geom::LatticePolytope& p, Int q,
                                         std::optional<std::uint64_t> n_p = std::nullopt);

}  // namespace toric3::bounds
