#include <algorithm>
#include <functional>

#include "toric3/minklen.hpp"

namespace toric3::minklen {

namespace {

/*
 * Every positive-dimensional summand of a Minkowski sum inside P contains a
 * primitive lattice segment, so L(P) is the largest m for which a zonotope
 * t + [0,u_1] + ... + [0,u_m] with primitive u_i and integer t fits in P.  Such a
 * zonotope fits iff the erosion chain S_0 = P cap Z^3, S_k = {x in S_{k-1} :
 * x + u_k in S_{k-1}} ends nonempty.  Each S_k is again the lattice-point set of a
 * convex body, so a primitive u_{k+1} can be taken among the differences of S_k,
 * and any such difference keeps S_{k+1} nonempty.  Directions are visited in
 * canonical order as non-decreasing sequences.
 */
class ChainSearch {
 public:
  explicit ChainSearch(const std::vector<LatticeVector>& pts) : pts_(pts) {
    lo_ = hi_ = pts_.front();
    for (const auto& x : pts_)
      for (int i = 0; i < 3; ++i) lo_[i] = std::min(lo_[i], x[i]), hi_[i] = std::max(hi_[i], x[i]);
    for (int i = 0; i < 3; ++i) ext_[i] = hi_[i] - lo_[i] + 1;
    level_.assign(static_cast<std::size_t>(ext_[0] * ext_[1] * ext_[2]), -1);
    cell_.resize(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      cell_[i] = cell(pts_[i]);
      level_[cell_[i]] = 0;
    }
  }

  enum class Mode { Longest, Exists, Enumerate };

  int longest(Decomposition* best) {
    mode_ = Mode::Longest;
    best_len_ = -1;
    run();
    if (best) *best = best_;
    return best_len_;
  }

  bool exists(int target, Decomposition* witness) {
    mode_ = Mode::Exists;
    target_ = target;
    found_ = false;
    run();
    if (found_ && witness) *witness = best_;
    return found_;
  }

  std::vector<Decomposition> enumerate(int target) {
    mode_ = Mode::Enumerate;
    target_ = target;
    all_.clear();
    run();
    return all_;
  }

 private:
  std::size_t cell(const LatticeVector& x) const {
    return static_cast<std::size_t>(((x[0] - lo_[0]) * ext_[1] + (x[1] - lo_[1])) * ext_[2] + (x[2] - lo_[2]));
  }

  bool in_grid(const LatticeVector& x) const {
    for (int i = 0; i < 3; ++i)
      if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
    return true;
  }

  // upper bound on further directions from the set s
  int headroom(const std::vector<int>& s) const {
    LatticeVector lo = pts_[s.front()], hi = lo;
    for (int id : s)
      for (int i = 0; i < 3; ++i) lo[i] = std::min(lo[i], pts_[id][i]), hi[i] = std::max(hi[i], pts_[id][i]);
    Int widths = (hi[0] - lo[0]) + (hi[1] - lo[1]) + (hi[2] - lo[2]);
    return static_cast<int>(std::min<Int>(widths, static_cast<Int>(s.size()) - 1));
  }

  void run() {
    std::vector<int> s0(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) s0[i] = static_cast<int>(i);
    path_.clear();
    stop_ = false;
    dfs(s0, 0);
  }

  void record(const std::vector<int>& s) {
    Decomposition d{path_, pts_[s.front()]};
    if (mode_ == Mode::Enumerate)
      all_.push_back(std::move(d));
    else
      best_ = std::move(d);
  }

  void dfs(const std::vector<int>& s, int depth) {
    if (mode_ == Mode::Longest && depth > best_len_) {
      best_len_ = depth;
      record(s);
    }
    if ((mode_ == Mode::Exists || mode_ == Mode::Enumerate) && depth == target_) {
      if (mode_ == Mode::Exists) found_ = stop_ = true;
      record(s);
      return;
    }
    const int room = headroom(s);
    if (mode_ == Mode::Longest && depth + room <= best_len_) return;
    if (mode_ != Mode::Longest && depth + room < target_) return;

    std::vector<LatticeVector> dirs;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        LatticeVector d = pts_[s[b]] - pts_[s[a]];
        if (!path_.empty() && d < path_.back()) continue;
        if (gcd3(d) != 1) continue;
        dirs.push_back(d);
      }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    std::vector<int> next;
    for (const auto& u : dirs) {
      next.clear();
      for (int id : s) {
        LatticeVector y = pts_[id] + u;
        if (in_grid(y) && level_[cell(y)] >= depth) next.push_back(id);
      }
      for (int id : next) level_[cell_[id]] = depth + 1;
      path_.push_back(u);
      dfs(next, depth + 1);
      path_.pop_back();
      for (int id : next) level_[cell_[id]] = depth;
      if (stop_) return;
      if (mode_ == Mode::Longest && best_len_ == depth + room) return;
    }
  }

  std::vector<LatticeVector> pts_;
  LatticeVector lo_, hi_;
  Int ext_[3] = {0, 0, 0};
  std::vector<int> level_;
  std::vector<std::size_t> cell_;

  Mode mode_ = Mode::Longest;
  int target_ = 0;
  int best_len_ = -1;
  bool found_ = false;
  bool stop_ = false;
  std::vector<LatticeVector> path_;
  Decomposition best_;
  std::vector<Decomposition> all_;
};

}  // namespace

bool Decomposition::verify(const LatticePolytope& host) const {
  if (directions.size() > 20) throw std::invalid_argument("too many directions to verify by subset sums");
  for (const auto& u : directions)
    if (!is_primitive(u) || canonical_sign(u) != u) return false;
  if (!std::is_sorted(directions.begin(), directions.end())) return false;
  for (std::uint32_t mask = 0; mask < (1u << directions.size()); ++mask) {
    LatticeVector x = anchor;
    for (std::size_t i = 0; i < directions.size(); ++i)
      if (mask & (1u << i)) x += directions[i];
    if (!host.contains(x)) return false;
  }
  return true;
}

LatticePolytope Decomposition::zonotope() const {
  std::vector<LatticeVector> corners;
  for (std::uint32_t mask = 0; mask < (1u << directions.size()); ++mask) {
    LatticeVector x = anchor;
    for (std::size_t i = 0; i < directions.size(); ++i)
      if (mask & (1u << i)) x += directions[i];
    corners.push_back(x);
  }
  return LatticePolytope(corners);
}

LengthResult minkowski_length(const LatticePolytope& p) {
  if (p.dim() == 0) return {0, {{}, p.vertices().front()}};
  ChainSearch search(p.points());
  LengthResult r;
  r.length = search.longest(&r.certificate);
  return r;
}

bool has_length_at_most(const LatticePolytope& p, int k) {
  if (k < 0) return false;
  // (L + 1)^3 >= |P| for every lattice polytope
  const auto n = static_cast<long long>(p.size());
  if (n > static_cast<long long>(k + 1) * (k + 1) * (k + 1)) return false;
  if (p.dim() == 0) return true;
  ChainSearch search(p.points());
  return !search.exists(k + 1, nullptr);
}

std::vector<Decomposition> maximal_segment_decompositions(const LatticePolytope& p) {
  const int l = minkowski_length(p).length;
  if (l == 0) return {{{}, p.vertices().front()}};
  ChainSearch search(p.points());
  return search.enumerate(l);
}

bool is_dps(const LatticePolytope& p) {
  if (p.dim() == 0) return false;  // L = 0
  const auto& pts = p.points();
  std::vector<LatticeVector> sums;
  sums.reserve(pts.size() * (pts.size() + 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) sums.push_back(pts[i] + pts[j]);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace toric3::minklen
