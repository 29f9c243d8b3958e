#include "kernel.hpp"

#include <stdexcept>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define TORIC3_X86 1
#endif

namespace toric3::codes::detail {

namespace {

#if defined(TORIC3_X86) && !defined(__clang__)
#define TORIC3_CLONES __attribute__((target_clones("avx2", "default")))
#else
#define TORIC3_CLONES
#endif

// Portable loops; zero counts are accumulated per block in a byte so the
// compiler can keep everything in vector registers.
constexpr std::size_t kBlock = 240;

TORIC3_CLONES
std::size_t prime_scalar(std::uint8_t* __restrict dst, const std::uint8_t* __restrict src, std::size_t n,
                         std::uint8_t p) {
  std::size_t zeros = 0;
  for (std::size_t b = 0; b < n; b += kBlock) {
    const std::size_t e = b + kBlock < n ? b + kBlock : n;
    std::uint8_t z = 0;
    for (std::size_t i = b; i < e; ++i) {
      auto s = static_cast<std::uint8_t>(dst[i] + src[i]);
      s = static_cast<std::uint8_t>(s >= p ? s - p : s);
      dst[i] = s;
      z += s == 0;
    }
    zeros += z;
  }
  return n - zeros;
}

TORIC3_CLONES
std::size_t xor_scalar(std::uint8_t* __restrict dst, const std::uint8_t* __restrict src, std::size_t n) {
  std::size_t zeros = 0;
  for (std::size_t b = 0; b < n; b += kBlock) {
    const std::size_t e = b + kBlock < n ? b + kBlock : n;
    std::uint8_t z = 0;
    for (std::size_t i = b; i < e; ++i) {
      const std::uint8_t s = dst[i] ^ src[i];
      dst[i] = s;
      z += s == 0;
    }
    zeros += z;
  }
  return n - zeros;
}

// two base-p digits in the two nibbles of a byte
TORIC3_CLONES
std::size_t nibble_scalar(std::uint8_t* __restrict dst, const std::uint8_t* __restrict src, std::size_t n,
                          std::uint8_t p) {
  const auto ph = static_cast<std::uint8_t>(p << 4);
  std::size_t zeros = 0;
  for (std::size_t b = 0; b < n; b += kBlock) {
    const std::size_t e = b + kBlock < n ? b + kBlock : n;
    std::uint8_t z = 0;
    for (std::size_t i = b; i < e; ++i) {
      const auto s = static_cast<std::uint8_t>(dst[i] + src[i]);
      auto lo = static_cast<std::uint8_t>(s & 0x0F);
      auto hi = static_cast<std::uint8_t>(s & 0xF0);
      lo = static_cast<std::uint8_t>(lo >= p ? lo - p : lo);
      hi = static_cast<std::uint8_t>(hi >= ph ? hi - ph : hi);
      const auto r = static_cast<std::uint8_t>(lo | hi);
      dst[i] = r;
      z += r == 0;
    }
    zeros += z;
  }
  return n - zeros;
}

std::size_t table_scalar(std::uint8_t* __restrict dst, const std::uint8_t* __restrict src, std::size_t n,
                         const std::uint8_t* table, std::size_t q) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t s = table[dst[i] * q + src[i]];
    dst[i] = s;
    zeros += s == 0;
  }
  return n - zeros;
}

#ifdef TORIC3_X86
#define TORIC3_AVX512 __attribute__((target("avx512f,avx512bw,bmi2,popcnt")))

// min(s, s - p) reduces s in [0, 2p) modulo p, because s - p wraps past s when s < p.
TORIC3_AVX512 inline __m512i reduce_prime(__m512i s, __m512i vp) { return _mm512_min_epu8(s, _mm512_sub_epi8(s, vp)); }

TORIC3_AVX512 inline __m512i reduce_nibble(__m512i s, __m512i vp, __m512i vph) {
  const __m512i lo = _mm512_and_si512(s, _mm512_set1_epi8(0x0F));
  const __m512i hi = _mm512_and_si512(s, _mm512_set1_epi8(static_cast<char>(0xF0)));
  return _mm512_or_si512(reduce_prime(lo, vp), reduce_prime(hi, vph));
}

template <int Op>
TORIC3_AVX512 inline __m512i wide_step(__m512i a, __m512i b, __m512i vp, __m512i vph) {
  if constexpr (Op == 0) return reduce_prime(_mm512_add_epi8(a, b), vp);
  if constexpr (Op == 1) return _mm512_xor_si512(a, b);
  if constexpr (Op == 2) return reduce_nibble(_mm512_add_epi8(a, b), vp, vph);
}

template <int Op>
TORIC3_AVX512 std::size_t wide(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t p) {
  const __m512i vp = _mm512_set1_epi8(static_cast<char>(p));
  const __m512i vph = _mm512_set1_epi8(static_cast<char>(p << 4));
  std::size_t nz = 0, i = 0;
  for (; i + 64 <= n; i += 64) {
    const __m512i s = wide_step<Op>(_mm512_loadu_si512(dst + i), _mm512_loadu_si512(src + i), vp, vph);
    _mm512_storeu_si512(dst + i, s);
    nz += static_cast<std::size_t>(__builtin_popcountll(_mm512_test_epi8_mask(s, s)));
  }
  if (i < n) {
    const __mmask64 m = _bzhi_u64(~0ULL, static_cast<unsigned>(n - i));
    const __m512i s =
        wide_step<Op>(_mm512_maskz_loadu_epi8(m, dst + i), _mm512_maskz_loadu_epi8(m, src + i), vp, vph);
    _mm512_mask_storeu_epi8(dst + i, m, s);
    nz += static_cast<std::size_t>(__builtin_popcountll(_mm512_mask_test_epi8_mask(m, s, s)));
  }
  return nz;
}
#endif

}  // namespace

AddKernel::AddKernel(const gfq::FiniteField& f) : q_(f.q()) {
  if (f.q() > 256) throw std::invalid_argument("codes support q <= 256");
  p_ = static_cast<std::uint8_t>(f.p());
  if (f.is_prime() && f.p() < 128) {  // a + b must fit in a byte
    kind_ = Kind::Prime;
  } else if (f.p() == 2) {
    kind_ = Kind::Char2;
  } else if (f.e() == 2 && f.p() <= 7) {
    kind_ = Kind::Nibble;
  } else {
    kind_ = Kind::Table;
    table_.resize(q_ * q_);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = 0; b < q_; ++b)
        table_[a * q_ + b] = static_cast<std::uint8_t>(f.add(static_cast<gfq::Elem>(a), static_cast<gfq::Elem>(b)));
  }
#ifdef TORIC3_X86
  wide_ = __builtin_cpu_supports("avx512bw") && __builtin_cpu_supports("bmi2");
#endif
}

std::vector<std::uint8_t> AddKernel::encode(const std::vector<std::uint8_t>& row) const {
  if (kind_ != Kind::Nibble) return row;
  std::vector<std::uint8_t> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = static_cast<std::uint8_t>((row[i] % p_) | ((row[i] / p_) << 4));
  return out;
}

std::vector<std::uint8_t> AddKernel::decode(const std::vector<std::uint8_t>& row) const {
  if (kind_ != Kind::Nibble) return row;
  std::vector<std::uint8_t> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = static_cast<std::uint8_t>((row[i] & 0x0F) + p_ * (row[i] >> 4));
  return out;
}

std::size_t AddKernel::add_weight(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) const {
#ifdef TORIC3_X86
  if (wide_) {
    switch (kind_) {
      case Kind::Prime:
        return wide<0>(dst, src, n, p_);
      case Kind::Char2:
        return wide<1>(dst, src, n, p_);
      case Kind::Nibble:
        return wide<2>(dst, src, n, p_);
      default:
        break;
    }
  }
#endif
  switch (kind_) {
    case Kind::Prime:
      return prime_scalar(dst, src, n, p_);
    case Kind::Char2:
      return xor_scalar(dst, src, n);
    case Kind::Nibble:
      return nibble_scalar(dst, src, n, p_);
    default:
      return table_scalar(dst, src, n, table_.data(), q_);
  }
}

std::size_t weight(const std::uint8_t* v, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += v[i] != 0;
  return w;
}

std::vector<std::uint8_t> scaled(const gfq::FiniteField& f, const std::vector<std::uint8_t>& row, gfq::Elem s) {
  std::vector<std::uint8_t> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = static_cast<std::uint8_t>(f.mul(row[i], s));
  return out;
}

}  // namespace toric3::codes::detail
