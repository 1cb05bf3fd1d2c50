#pragma once

#include <complex>
#include <vector>

#include "conelab/linear_map.hpp"

namespace conelab {

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted by (re, im)
  // lambda = trace/n, the only possible singleton; holds iff (T - lambda I)^n = 0.
  std::optional<std::pair<Rational, bool>> exact_singleton;
  double residual = 0.0;  // max |det(T - lambda I)| over reported eigenvalues
};

SpectrumReport spectrum(const LinearMap& t);

// Exact: true iff (T - lambda I)^n = 0.
bool is_spectrum_singleton(const LinearMap& t, const Rational& lambda);

struct JordanProfile {
  Rational lambda;
  std::vector<int> rank_sequence;  // ranks of (T - lambda I)^k, k = 0..n
  std::vector<int> block_sizes;    // ascending
  int largest_block() const { return block_sizes.empty() ? 0 : block_sizes.back(); }
};

JordanProfile jordan_profile(const LinearMap& t, const Rational& lambda);

}  // namespace conelab
