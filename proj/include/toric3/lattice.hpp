#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric3 {

using Int = std::int64_t;
using Wide = __int128;

// Coordinates are kept below this magnitude so that cross products, normals and
// dot products of normals with points all fit comfortably in 64 bits.
inline constexpr Int kMaxCoordinate = Int{1} << 16;

struct LatticeVector {
  std::array<Int, 3> c{0, 0, 0};

  constexpr LatticeVector() = default;
  constexpr LatticeVector(Int x, Int y, Int z = 0) : c{x, y, z} {}

  constexpr Int operator[](std::size_t i) const { return c[i]; }
  constexpr Int& operator[](std::size_t i) { return c[i]; }

  friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  constexpr LatticeVector& operator+=(const LatticeVector& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr LatticeVector& operator-=(const LatticeVector& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend constexpr LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend constexpr LatticeVector operator-(const LatticeVector& a) { return {-a[0], -a[1], -a[2]}; }
  friend constexpr LatticeVector operator*(Int s, const LatticeVector& a) { return {s * a[0], s * a[1], s * a[2]}; }

  constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

inline constexpr LatticeVector e1{1, 0, 0};
inline constexpr LatticeVector e2{0, 1, 0};
inline constexpr LatticeVector e3{0, 0, 1};

constexpr Int dot(const LatticeVector& a, const LatticeVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Wide det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return Wide(a[0]) * (Wide(b[1]) * c[2] - Wide(b[2]) * c[1]) -
         Wide(a[1]) * (Wide(b[0]) * c[2] - Wide(b[2]) * c[0]) +
         Wide(a[2]) * (Wide(b[0]) * c[1] - Wide(b[1]) * c[0]);
}

inline Int gcd3(const LatticeVector& v) { return std::gcd(std::gcd(v[0], v[1]), v[2]); }

inline bool is_primitive(const LatticeVector& v) { return gcd3(v) == 1; }

// v / gcd(v); zero stays zero
inline LatticeVector primitive_part(const LatticeVector& v) {
  Int g = gcd3(v);
  if (g == 0) return v;
  return {v[0] / g, v[1] / g, v[2] / g};
}

// first nonzero coordinate positive
inline LatticeVector canonical_sign(const LatticeVector& v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return -v;
  }
  return v;
}

inline bool is_canonical(const LatticeVector& v) { return canonical_sign(v) == v && !v.is_zero(); }

constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int narrow(Wide w) {
  if (w > Wide(INT64_MAX) || w < Wide(INT64_MIN)) throw std::overflow_error("value exceeds 64 bits");
  return static_cast<Int>(w);
}

std::string to_string(const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 3; ++i) {
      h ^= static_cast<std::uint64_t>(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace toric3
