#include "toric3/unimodular.hpp"

#include <cstdlib>
#include <utility>

namespace toric3 {

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Matrix3 Matrix3::from_rows(const LatticeVector& r0, const LatticeVector& r1, const LatticeVector& r2) {
  Matrix3 r;
  const LatticeVector* rows[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (*rows[i])[j];
  return r;
}

Matrix3 Matrix3::from_columns(const LatticeVector& c0, const LatticeVector& c1, const LatticeVector& c2) {
  return from_rows(c0, c1, c2).transpose();
}

LatticeVector Matrix3::apply(const LatticeVector& x) const {
  LatticeVector r;
  for (int i = 0; i < 3; ++i) {
    Int s = 0;
    for (int j = 0; j < 3; ++j) s = checked_add(s, checked_mul(m[i][j], x[j]));
    r[i] = s;
  }
  return r;
}

Wide Matrix3::det() const { return det3(row(0), row(1), row(2)); }

Matrix3 Matrix3::adjugate() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r.m[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return r;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s = checked_add(s, checked_mul(a.m[i][k], b.m[k][j]));
      r.m[i][j] = s;
    }
  return r;
}

Matrix3 unimodular_inverse(const Matrix3& a) {
  Wide d = a.det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
  Matrix3 r = a.adjugate();
  if (d == -1)
    for (auto& row : r.m)
      for (auto& x : row) x = -x;
  return r;
}

AffineUnimodularMap::AffineUnimodularMap() : a_(Matrix3::identity()) {}

AffineUnimodularMap::AffineUnimodularMap(const Matrix3& matrix, const LatticeVector& translation, int dim)
    : a_(matrix), t_(translation), dim_(dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("map dimension must be 2 or 3");
  Wide d = a_.det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix determinant is not +-1");
  if (dim == 2) {
    if (a_(0, 2) != 0 || a_(1, 2) != 0 || a_(2, 0) != 0 || a_(2, 1) != 0 || a_(2, 2) != 1 || t_[2] != 0)
      throw std::invalid_argument("planar map must fix the third coordinate");
  }
}

AffineUnimodularMap AffineUnimodularMap::identity(int dim) { return {Matrix3::identity(), {}, dim}; }

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& inner) const {
  if (inner.dim_ != dim_) throw std::invalid_argument("map dimension mismatch");
  return {a_ * inner.a_, a_.apply(inner.t_) + t_, dim_};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  Matrix3 inv = unimodular_inverse(a_);
  return {inv, -inv.apply(t_), dim_};
}

Matrix3 complete_to_unimodular(const LatticeVector& v, int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (dim == 2 && v[2] != 0) throw std::invalid_argument("planar vector has nonzero third coordinate");
  if (gcd3(v) != 1) throw std::invalid_argument("vector is not primitive");

  // Row-reduce v to +-e_i with elementary operations U, tracking U^{-1}; then
  // U^{-1} has v as its i-th column.
  LatticeVector w = v;
  Matrix3 inv = Matrix3::identity();
  for (;;) {
    int piv = -1;
    int nonzero = 0;
    for (int i = 0; i < dim; ++i) {
      if (w[i] == 0) continue;
      ++nonzero;
      if (piv < 0 || std::llabs(w[i]) < std::llabs(w[piv])) piv = i;
    }
    if (nonzero == 1) {
      // w = s * e_piv with s = +-1; move to column 0 and fix the sign
      if (piv != 0) {
        for (int r = 0; r < 3; ++r) std::swap(inv.m[r][0], inv.m[r][piv]);
      }
      if (w[piv] < 0)
        for (int r = 0; r < 3; ++r) inv.m[r][0] = -inv.m[r][0];
      break;
    }
    for (int j = 0; j < dim; ++j) {
      if (j == piv || w[j] == 0) continue;
      Int q = w[j] / w[piv];
      w[j] -= q * w[piv];
      // row_j -= q row_piv  <=>  inverse gets col_piv += q col_j
      for (int r = 0; r < 3; ++r) inv.m[r][piv] += q * inv.m[r][j];
    }
  }
  return inv;
}

}  // namespace toric3
