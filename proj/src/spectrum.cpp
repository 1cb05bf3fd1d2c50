#include "conelab/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "conelab/cone.hpp"
#include "conelab/elim.hpp"

namespace conelab {

namespace {

bool matrix_is_zero(const QMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

SpectrumReport spectrum(const LinearMap& t) {
  const Index n = t.dim();
  if (n > kMaxAmbientDim) throw DimensionError("spectrum: matrix too large");
  SpectrumReport report;
  const DMat m = to_double(t.matrix);
  Eigen::EigenSolver<DMat> solver(m);
  report.eigenvalues.resize(n);
  for (Index i = 0; i < n; ++i) report.eigenvalues[i] = solver.eigenvalues()(i);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  double residual = 0.0;
  for (const auto& ev : report.eigenvalues) {
    Eigen::MatrixXcd shifted = m.cast<std::complex<double>>();
    shifted.diagonal().array() -= ev;
    residual = std::max(residual, std::abs(shifted.determinant()));
  }
  report.residual = residual;
  const Rational candidate = t.matrix.trace() / n;
  report.exact_singleton = std::make_pair(candidate, is_spectrum_singleton(t, candidate));
  return report;
}

bool is_spectrum_singleton(const LinearMap& t, const Rational& lambda) {
  const Index n = t.dim();
  QMat power = QMat::Identity(n, n);
  const QMat shifted = t.matrix - lambda * QMat::Identity(n, n);
  for (Index k = 0; k < n; ++k) power = power * shifted;
  return matrix_is_zero(power);
}

JordanProfile jordan_profile(const LinearMap& t, const Rational& lambda) {
  const Index n = t.dim();
  JordanProfile profile;
  profile.lambda = lambda;
  const QMat shifted = t.matrix - lambda * QMat::Identity(n, n);
  QMat power = QMat::Identity(n, n);
  profile.rank_sequence.reserve(n + 1);
  for (Index k = 0; k <= n; ++k) {
    profile.rank_sequence.push_back(exact_rank(power));
    if (k < n) power = power * shifted;
  }
  // Blocks of size >= s number rank((T-l)^{s-1}) - rank((T-l)^s).
  std::vector<int> at_least(n + 1, 0);
  for (Index s = 1; s <= n; ++s)
    at_least[s] = profile.rank_sequence[s - 1] - profile.rank_sequence[s];
  for (Index s = 1; s <= n; ++s) {
    int exactly = at_least[s] - (s < n ? at_least[s + 1] : 0);
    for (int i = 0; i < exactly; ++i) profile.block_sizes.push_back(static_cast<int>(s));
  }
  std::sort(profile.block_sizes.begin(), profile.block_sizes.end());
  return profile;
}

}  // namespace conelab
