#include <algorithm>
#include <mutex>
#include <sstream>

#include "toric3/gfq.hpp"

namespace toric3::gfq {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic-or-not b over GF(p)
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // inverse of the leading coefficient
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (static_cast<std::uint64_t>(x) * b.back() % p == 1) lead_inv = x;
  while (a.size() > db) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * b[i]) % p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  Poly a(e);
  for (std::uint32_t i = 0; i < e; ++i) a[i] = v % p, v /= p;
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  // trial division by monic polynomials of degree 1..e/2
  for (std::uint32_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = decode(static_cast<std::uint32_t>(c), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_power(std::uint64_t q, std::uint32_t* p_out, std::uint32_t* e_out) {
  if (q < 2) return false;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) q /= p, ++e;
  if (q != 1) return false;
  if (p_out) *p_out = static_cast<std::uint32_t>(p);
  if (e_out) *e_out = e;
  return true;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q > (1u << 20) || !is_prime_power(q, &p_, &e_))
    throw std::invalid_argument("field size must be a prime power <= 2^20, got " + std::to_string(q));

  // smallest irreducible monic modulus in the integer encoding
  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t c = 0; c < q_; ++c) {
      Poly f = decode(c, p_, e_);
      f.push_back(1);
      if (f[0] != 0 && irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    Poly x = decode(a, p_, e_), y = decode(b, p_, e_), z(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j) z[i + j] = static_cast<std::uint32_t>((z[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    z = poly_mod(z, modulus_, p_);
    z.resize(e_, 0);
    return encode(z, p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  // smallest primitive element
  const std::uint32_t n = q_ - 1;
  const auto factors = prime_factors(n);
  std::uint32_t g = 0;
  for (std::uint32_t c = 1; c < q_ && g == 0; ++c) {
    if (n == 1) {
      g = 1;
      break;
    }
    bool ok = true;
    for (auto r : factors) ok = ok && slow_pow(c, n / r) != 1;
    if (ok) g = c;
  }

  exp_.resize(2 * static_cast<std::size_t>(n));
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = exp_[k + n] = x;
    log_[x] = k;
    x = slow_mul(x, g);
  }
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (e_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_, b /= p_, scale *= p_;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_, scale *= p_;
  }
  return r;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k <= 0) throw std::domain_error("non-positive power of zero");
    return 0;
  }
  return exp(static_cast<std::int64_t>(log_[a]) * (k % static_cast<std::int64_t>(q_ - 1)));
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0 || a >= q_) throw std::domain_error("log of zero or out-of-range element");
  return log_[a];
}

Elem FiniteField::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  k %= n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

Elem FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  v %= p;
  if (v < 0) v += p;
  return static_cast<Elem>(v);
}

std::string FiniteField::format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "g^" + std::to_string(log(a));
}

Elem FiniteField::parse(const std::string& s) const {
  if (s.size() > 2 && s[0] == 'g' && s[1] == '^') {
    std::size_t used = 0;
    std::int64_t k = 0;
    try {
      k = std::stoll(s.substr(2), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() - 2) throw std::invalid_argument("malformed field element: " + s);
    return exp(k);
  }
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("malformed field element: " + s);
  return from_int(v);
}

FieldPtr make_field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FiniteField>(q);
  cache.emplace(q, f);
  return f;
}

}  // namespace toric3::gfq
