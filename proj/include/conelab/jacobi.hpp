#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "conelab/types.hpp"

namespace conelab {

// Cyclic Jacobi eigenvalue iteration for small symmetric matrices, ascending
// order.  Self-contained so the eigenvalue floor used in certificates does not
// depend on any particular LAPACK/solver build.
inline DVec symmetric_eigenvalues(DMat a, int max_sweeps = 64, double tol = 1e-14) {
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionError("symmetric_eigenvalues: matrix not square");
  if (n == 0) return DVec(0);
  double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return DVec::Zero(n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= tol * scale) break;
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (Index i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  DVec r(n);
  for (Index i = 0; i < n; ++i) r(i) = ev[i];
  return r;
}

inline double lambda_min_sym(const DMat& a) {
  DVec ev = symmetric_eigenvalues(a);
  return ev.size() ? ev(0) : 0.0;
}

}  // namespace conelab
