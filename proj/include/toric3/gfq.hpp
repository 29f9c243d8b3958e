#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "toric3/geom.hpp"

namespace toric3::gfq {

// Elements are encoded as integers: sum of c_i p^i for the residue
// c_0 + c_1 t + ... + c_{e-1} t^{e-1} modulo the field's modulus.  0 and 1 are
// the field's zero and one.
using Elem = std::uint32_t;

class FiniteField {
 public:
  // q = p^e <= 2^20; throws std::invalid_argument otherwise
  explicit FiniteField(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  // monic, low degree first (size e + 1)
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // a^k for any integer k (a nonzero when k <= 0)
  Elem pow(Elem a, std::int64_t k) const;

  // discrete logarithm base the generator, in [0, q-1)
  std::uint32_t log(Elem a) const;
  // g^k for any integer k
  Elem exp(std::int64_t k) const;

  // image of an integer in the prime subfield
  Elem from_int(std::int64_t v) const;

  // integer for prime fields, "g^k" otherwise ("0" for zero)
  std::string format(Elem a) const;
  // integer (mapped to the prime subfield) or "g^k"
  Elem parse(const std::string& s) const;

 private:
  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;           // size 2(q-1)
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Cached per q.
FieldPtr make_field(std::uint32_t q);
bool is_prime_power(std::uint64_t q, std::uint32_t* p = nullptr, std::uint32_t* e = nullptr);

class LaurentPolynomial {
 public:
  LaurentPolynomial(FieldPtr field, int nvars = 3);

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int nvars() const { return nvars_; }
  const std::map<LatticeVector, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // adds c x^a (removing the term if it cancels)
  void add_term(const LatticeVector& a, Elem c);
  Elem coefficient(const LatticeVector& a) const;

  std::vector<LatticeVector> support() const;
  geom::LatticePolytope newton_polytope() const;

  Elem evaluate(const std::vector<Elem>& point) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g);
  friend LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);
  friend bool operator==(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return f.field_->q() == g.field_->q() && f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

 private:
  FieldPtr field_;
  int nvars_;
  std::map<LatticeVector, Elem> terms_;
};

// Text form: one term per line, "c a1 a2 [a3]"; '#' starts a comment.
LaurentPolynomial parse_polynomial(const std::string& text, FieldPtr field, int nvars = 3);
std::string format_polynomial(const LaurentPolynomial& f);

// Torus points are ordered lexicographically by the discrete logs (i, j[, k])
// of their coordinates; point index = i (q-1)^2 + j (q-1) + k.
std::uint64_t torus_size(std::uint32_t q, int nvars);
std::vector<Elem> torus_point(const FiniteField& field, int nvars, std::uint64_t index);

// Row per exponent, column per torus point: value of x^a at the point.
std::vector<std::vector<Elem>> evaluation_matrix(const FiniteField& field, const std::vector<LatticeVector>& exponents,
                                                 int nvars);

std::uint64_t count_zeros(const LaurentPolynomial& f, unsigned threads = 1);
std::uint64_t common_zero_count(const LaurentPolynomial& f, const LaurentPolynomial& g, unsigned threads = 1);

LaurentPolynomial monomial_substitution(const LaurentPolynomial& f, const AffineUnimodularMap& phi);

// Uniform coefficients on the lattice points of P, not all zero.
LaurentPolynomial random_polynomial(const geom::LatticePolytope& p, FieldPtr field, std::uint64_t seed);

// f = z^m (f0 + z f1) with f0, f1 bivariate and nonzero; throws unless the
// support has z-width exactly one.
std::pair<LaurentPolynomial, LaurentPolynomial> width_one_split(const LaurentPolynomial& f);

}  // namespace toric3::gfq
