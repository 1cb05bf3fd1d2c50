#pragma once

#include <string>
#include <vector>

#include "conelab/positivity.hpp"
#include "conelab/spectrum.hpp"
#include "conelab/theorems.hpp"

namespace conelab {

// The three stock cases: the Loewner cone of complex Hermitian 2x2 matrices
// (ambient dim 4), its real-symmetric restriction (ambient dim 3), and a
// four-ray polyhedral cone in R^3.
enum class GalleryCase { IceCream4, IceCream3, FourRay };

std::string gallery_case_name(GalleryCase c);
std::optional<GalleryCase> gallery_case_from_name(const std::string& name);

Cone gallery_cone(GalleryCase c);
LinearMap gallery_map(GalleryCase c);

// A positive map with spectrum {1} that does not dominate the identity,
// together with everything needed to re-check that claim independently.
struct CounterexampleRecord {
  Cone cone;
  LinearMap t;
  PositivityVerdict positivity;
  SpectrumReport spectrum;
  OrderViolation violation;
  JordanProfile jordan;  // at lambda = 1; largest block is always >= 3
  std::optional<double> growth_exponent;
};

// Builds and fully verifies the record for one case; any certificate failure
// throws (this is the regression alarm).
CounterexampleRecord run_gallery(GalleryCase c);

enum class SearchStrategy { Enumerate, Sample };

struct SearchConfig {
  Cone cone;
  long entry_bound = 1;
  std::uint64_t seed = 0;
  long max_trials = 1000;
  SearchStrategy strategy = SearchStrategy::Enumerate;
};

// Candidates T = id + N with N nilpotent (integer-entried on polyhedral
// cones, congruence-style on the curved cones); keeps those that are
// certified positive yet fail to dominate the identity.  Deterministic:
// enumeration order or seed order.
std::vector<CounterexampleRecord> search_counterexamples(const SearchConfig& config);

// Regression: on random simplicial cones, unipotent nonnegative conjugates
// must always dominate the identity; failures would be an implementation bug.
SuiteReport simplicial_sanity(long trials, std::uint64_t seed);

// Least-squares slope of log ||T^n||_F against log n over n in {2^4..2^10}.
double growth_exponent(const QMat& t);

}  // namespace conelab
