#pragma once

#include "toric3/lattice.hpp"

namespace toric3 {

struct Matrix3 {
  std::array<std::array<Int, 3>, 3> m{};

  static Matrix3 identity();
  static Matrix3 from_rows(const LatticeVector& r0, const LatticeVector& r1, const LatticeVector& r2);
  static Matrix3 from_columns(const LatticeVector& c0, const LatticeVector& c1, const LatticeVector& c2);

  Int operator()(int i, int j) const { return m[i][j]; }
  Int& operator()(int i, int j) { return m[i][j]; }
  LatticeVector row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  LatticeVector column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

  LatticeVector apply(const LatticeVector& x) const;
  Wide det() const;
  Matrix3 adjugate() const;
  Matrix3 transpose() const;

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

// x -> A x + t with det A = +-1.  For dim 2 the matrix acts on the first two
// coordinates and fixes the third.
class AffineUnimodularMap {
 public:
  AffineUnimodularMap();
  AffineUnimodularMap(const Matrix3& matrix, const LatticeVector& translation, int dim = 3);

  static AffineUnimodularMap identity(int dim = 3);

  LatticeVector operator()(const LatticeVector& x) const { return a_.apply(x) + t_; }
  LatticeVector linear(const LatticeVector& x) const { return a_.apply(x); }

  // (*this)(inner(x))
  AffineUnimodularMap compose(const AffineUnimodularMap& inner) const;
  AffineUnimodularMap inverse() const;

  const Matrix3& matrix() const { return a_; }
  const LatticeVector& translation() const { return t_; }
  int dim() const { return dim_; }

  friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

 private:
  Matrix3 a_;
  LatticeVector t_;
  int dim_ = 3;
};

// Unimodular matrix whose first column is the primitive vector v (in Z^dim).
Matrix3 complete_to_unimodular(const LatticeVector& v, int dim = 3);

// Exact inverse of a matrix with determinant +-1.
Matrix3 unimodular_inverse(const Matrix3& a);

}  // namespace toric3
