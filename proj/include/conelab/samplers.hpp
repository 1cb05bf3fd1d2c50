#pragma once

#include <cmath>

#include "conelab/elim.hpp"
#include "conelab/rng.hpp"
#include "conelab/types.hpp"

namespace conelab {

// Random invertible generator matrix with positive first coordinates; a float
// conditioning pre-screen (|det| >= 1e-3) runs before the exact commitment.
inline QMat random_generator_matrix(Rng& rng, Index d) {
  for (;;) {
    QMat g(d, d);
    for (Index j = 0; j < d; ++j) {
      g(0, j) = rng.uniform_int(1, 3);
      for (Index i = 1; i < d; ++i) g(i, j) = rng.rational(3, 2);
    }
    if (std::abs(to_double(g).determinant()) < 1e-3) continue;
    if (exact_det(g) != 0) return g;
  }
}

// Strictly upper triangular with nonnegative rational entries, about half of
// them zero.
inline QMat upper_nilpotent(Rng& rng, Index d, long num_bound) {
  QMat n = QMat::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      if (rng.uniform_int(0, 1) == 1) n(i, j) = Rational(rng.uniform_int(1, num_bound));
  return n;
}

}  // namespace conelab
