#pragma once

#include <cmath>
#include <cstdint>

#include "conelab/types.hpp"

namespace conelab {

// splitmix64: tiny, seedable, identical output on every platform.  The
// standard library distributions are implementation-defined, which would break
// byte-for-byte report reproducibility across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for trial `index` of a suite seeded with `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    return Rng(mix.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  double gaussian() {
    // Box-Muller; deterministic, no cached spare.
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Random rational p/q with p in [-num_bound, num_bound], q in [1, den_bound].
  Rational rational(long num_bound, long den_bound = 1) {
    long p = uniform_int(-num_bound, num_bound);
    long q = den_bound > 1 ? uniform_int(1, den_bound) : 1;
    return Rational(p, q);
  }

  QVec rational_vector(Index n, long num_bound, long den_bound = 1) {
    QVec v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(num_bound, den_bound);
    return v;
  }

  QMat rational_matrix(Index rows, Index cols, long num_bound, long den_bound = 1) {
    QMat m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = rational(num_bound, den_bound);
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace conelab
