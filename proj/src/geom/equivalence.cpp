#include <algorithm>
#include <functional>

#include "toric3/geom.hpp"

namespace toric3::geom {

namespace {

// Rank of a set of vectors in Z^3 together with an independent subset.
std::vector<LatticeVector> independent_subset(const std::vector<LatticeVector>& vs) {
  std::vector<LatticeVector> basis;
  for (const auto& d : vs) {
    if (d.is_zero()) continue;
    if (basis.empty()) {
      basis.push_back(d);
    } else if (basis.size() == 1) {
      if (!cross(basis[0], d).is_zero()) basis.push_back(d);
    } else if (basis.size() == 2) {
      if (det3(basis[0], basis[1], d) != 0) basis.push_back(d);
    }
  }
  return basis;
}

// U in GL(3,Z), fixing e3 when n = 2, sending the saturation of span(basis)
// onto Z^r x 0.
Matrix3 adapted_coordinates(const std::vector<LatticeVector>& basis, int n) {
  const std::size_t r = basis.size();
  if (r == 0 || static_cast<int>(r) == n) return Matrix3::identity();
  if (r == 1) return unimodular_inverse(complete_to_unimodular(primitive_part(basis[0]), n));
  // n = 3, r = 2: the last row must be the primitive normal of the plane
  LatticeVector m = primitive_part(cross(basis[0], basis[1]));
  Matrix3 t = complete_to_unimodular(m, 3).transpose();
  return Matrix3::from_rows(t.row(1), t.row(2), t.row(0));
}

std::vector<LatticeVector> apply_all(const Matrix3& a, const std::vector<LatticeVector>& vs) {
  std::vector<LatticeVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(a.apply(v));
  return out;
}


// A P_i + v_i = Q_i for all i, with v_i read off from lex-min vertices.
std::optional<std::vector<LatticeVector>> matching_translations(const Matrix3& a,
                                                                const std::vector<LatticePolytope>& ps,
                                                                const std::vector<LatticePolytope>& qs) {
  std::vector<LatticeVector> ts;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto img = apply_all(a, ps[i].vertices());
    std::sort(img.begin(), img.end());
    const auto& target = qs[i].vertices();
    LatticeVector t = target.front() - img.front();
    for (std::size_t j = 0; j < img.size(); ++j)
      if (img[j] + t != target[j]) return std::nullopt;
    ts.push_back(t);
  }
  return ts;
}

}  // namespace

std::optional<TupleWitness> tuple_equivalent(const std::vector<LatticePolytope>& ps,
                                             const std::vector<LatticePolytope>& qs) {
  if (ps.size() != qs.size()) throw std::invalid_argument("tuple lengths differ");
  if (ps.empty()) throw std::invalid_argument("empty tuple");
  const int n = ps.front().ambient_dim();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].ambient_dim() != n || qs[i].ambient_dim() != n) throw std::invalid_argument("dimension tag mismatch");
    if (ps[i].dim() != qs[i].dim() || ps[i].size() != qs[i].size() ||
        ps[i].vertices().size() != qs[i].vertices().size() ||
        ps[i].relative_volume() != qs[i].relative_volume())
      return std::nullopt;
  }

  // identity first, so that equivalent(P, P) is the identity
  if (auto ts = matching_translations(Matrix3::identity(), ps, qs))
    return TupleWitness{AffineUnimodularMap::identity(n), *ts};

  std::vector<LatticeVector> dp, dq;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (const auto& v : ps[i].vertices()) dp.push_back(v - ps[i].vertices().front());
    for (const auto& v : qs[i].vertices()) dq.push_back(v - qs[i].vertices().front());
  }
  const auto bp = independent_subset(dp), bq = independent_subset(dq);
  if (bp.size() != bq.size()) return std::nullopt;
  const int r = static_cast<int>(bp.size());

  const Matrix3 up = adapted_coordinates(bp, n), uq = adapted_coordinates(bq, n);
  const Matrix3 uq_inv = unimodular_inverse(uq);
  std::vector<std::vector<LatticeVector>> pv, qv;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    pv.push_back(apply_all(up, ps[i].vertices()));
    qv.push_back(apply_all(uq, qs[i].vertices()));
  }

  // pick (member, vertex) pairs whose differences from the member's first
  // vertex span Z^r x 0 rationally
  struct Pick {
    std::size_t member;
    std::size_t vertex;
  };
  std::vector<Pick> picks;
  {
    std::vector<LatticeVector> acc;
    for (std::size_t i = 0; i < pv.size() && static_cast<int>(acc.size()) < r; ++i)
      for (std::size_t j = 1; j < pv[i].size() && static_cast<int>(acc.size()) < r; ++j) {
        auto trial = acc;
        trial.push_back(pv[i][j] - pv[i][0]);
        if (independent_subset(trial).size() == trial.size()) {
          acc = trial;
          picks.push_back({i, j});
        }
      }
  }
  std::vector<std::size_t> members;
  for (const auto& pk : picks)
    if (members.empty() || members.back() != pk.member) members.push_back(pk.member);

  Matrix3 dpm = Matrix3::identity();
  for (int k = 0; k < r; ++k) {
    LatticeVector d = pv[picks[k].member][picks[k].vertex] - pv[picks[k].member][0];
    for (int row = 0; row < 3; ++row) dpm(row, k) = d[row];
  }
  const Wide det_p = dpm.det();
  const Matrix3 adj_p = dpm.adjugate();

  // image choice per pick: index into the member's Q vertex list; base image per member
  std::vector<std::size_t> base_img(ps.size(), 0), pick_img(picks.size(), 0);
  std::optional<TupleWitness> found;

  auto try_candidate = [&]() -> bool {
    Matrix3 dqm = Matrix3::identity();
    for (int k = 0; k < r; ++k) {
      auto mi = picks[k].member;
      LatticeVector d = qv[mi][pick_img[k]] - qv[mi][base_img[mi]];
      for (int row = 0; row < 3; ++row) dqm(row, k) = d[row];
    }
    // A = Dq adj(Dp) / det(Dp)
    Matrix3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Wide s = 0;
        for (int k = 0; k < 3; ++k) s += Wide(dqm(i, k)) * adj_p(k, j);
        if (s % det_p != 0) return false;
        a(i, j) = narrow(s / det_p);
      }
    Wide d = a.det();
    if (d != 1 && d != -1) return false;
    Matrix3 full = uq_inv * a * up;
    auto ts = matching_translations(full, ps, qs);
    if (!ts) return false;
    found = TupleWitness{AffineUnimodularMap(full, {}, n), *ts};
    return true;
  };

  // depth-first over members, choosing ordered distinct vertex images
  std::function<bool(std::size_t)> choose_member = [&](std::size_t mpos) -> bool {
    if (mpos == members.size()) return try_candidate();
    std::size_t mi = members[mpos];
    std::vector<std::size_t> slots;
    for (std::size_t k = 0; k < picks.size(); ++k)
      if (picks[k].member == mi) slots.push_back(k);
    const std::size_t nv = qv[mi].size();
    std::vector<char> taken(nv, 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t s) -> bool {
      if (s == slots.size()) return choose_member(mpos + 1);
      for (std::size_t v = 0; v < nv; ++v) {
        if (taken[v]) continue;
        taken[v] = 1;
        pick_img[slots[s]] = v;
        bool ok = assign(s + 1);
        taken[v] = 0;
        if (ok) return true;
      }
      return false;
    };
    for (std::size_t b = 0; b < nv; ++b) {
      base_img[mi] = b;
      taken[b] = 1;
      bool ok = assign(0);
      taken[b] = 0;
      if (ok) return true;
    }
    return false;
  };

  choose_member(0);
  return found;
}

std::optional<AffineUnimodularMap> equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  auto w = tuple_equivalent({p}, {q});
  if (!w) return std::nullopt;
  return AffineUnimodularMap(w->map.matrix(), w->translations.front(), w->map.dim());
}

}  // namespace toric3::geom
