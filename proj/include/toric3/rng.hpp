#pragma once

#include <cstdint>
#include <random>

namespace toric3 {

// mt19937_64 is fully specified by the standard; the bounded draws below avoid
// std::uniform_int_distribution so that sequences agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, n), n > 0, by rejection
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return x % n;
    }
  }

  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toric3
