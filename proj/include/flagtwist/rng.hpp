#pragma once

#include <cstdint>
#include <random>

#include "flagtwist/gauss_rat.hpp"

namespace flagtwist {

// Mixes a base seed with an index; used to give every trial its own stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded generator with portable output. mt19937_64 output is pinned by the
// standard; the bounded draw below avoids the implementation-defined
// std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [lo, hi], inclusive, via rejection.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  // Rational from the standard coordinate pool: numerators in [-20, 20],
  // denominators in [1, 10].
  mpq_class rational() {
    mpq_class q(uniform(-20, 20), uniform(1, 10));
    q.canonicalize();
    return q;
  }

  GaussRat gauss_rat() { return GaussRat(rational(), rational()); }

  GaussRat nonzero_gauss_rat() {
    for (;;) {
      GaussRat g = gauss_rat();
      if (!g.is_zero()) return g;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace flagtwist
