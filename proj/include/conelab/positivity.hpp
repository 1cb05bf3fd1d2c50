#pragma once

#include <cstdint>

#include "conelab/linear_map.hpp"
#include "conelab/membership.hpp"

namespace conelab {

enum class Positivity { Positive, NotPositive, Unknown };
enum class PositivityMethod {
  GeneratorCheck,
  MuCertificate,
  CongruenceForm,
  FalsifiedBySample,
  Inconclusive
};

// Witness of T(C) ⊄ C relative to S: v ∈ C but (T-S)v ∉ C, both certified.
struct OrderViolation {
  QVec v;
  QVec w;  // (T - S) v
  MembershipVerdict v_inside;
  MembershipVerdict w_outside;
};

// Certificate that T^T J T - mu J is PSD (J = diag(1,-1,...,-1)), which
// together with T e1 in the cone proves positivity on the second-order cone.
struct MuCertificate {
  double mu = 0.0;
  double floor = 0.0;                // lambda_min at mu (float view)
  std::optional<Rational> exact_mu;  // set when the exact PSD check passed
  bool concave_on_grid = true;       // empirical concavity of the sweep
  double mu_max = 0.0;
};

struct PositivityVerdict {
  Positivity verdict = Positivity::Unknown;
  PositivityMethod method = PositivityMethod::Inconclusive;
  std::vector<MembershipVerdict> generator_images;  // GeneratorCheck
  std::optional<MuCertificate> mu;                  // MuCertificate
  std::optional<OrderViolation> violation;          // FalsifiedBySample
  bool nappe_checked = false;                       // T e1 membership (SOC)

  bool positive() const { return verdict == Positivity::Positive; }
};

struct PositivityOpts {
  std::uint64_t seed = 0;
  double mu_max = -1.0;  // negative: use ||T||_F^2
  long falsifier_rays = 10000;
  double tol = 1e-9;
};

PositivityVerdict is_positive(const LinearMap& t, const Cone& cone,
                              const PositivityOpts& opts = {});

// Positivity of T - S ("S <= T").
PositivityVerdict order_leq(const LinearMap& s, const LinearMap& t, const Cone& cone,
                            const PositivityOpts& opts = {});

std::optional<OrderViolation> find_violation(const LinearMap& s, const LinearMap& t,
                                             const Cone& cone,
                                             const PositivityOpts& opts = {});

// Smallest m <= m_max with (id - T)^m applied to the identity equal to zero,
// where T is congruence by L.  Exact.
std::optional<int> m_isometry_order(const CQMat& l, int m_max);

// Exact rational boundary ray of SecondOrder(u.size() + 2):
// ((|u|^2+1)/2, u, (|u|^2-1)/2).
QVec soc_boundary_lift(const QVec& u);

// Independent re-check of a positivity verdict and its certificates.
bool verify_positivity(const LinearMap& t, const Cone& cone,
                       const PositivityVerdict& verdict);

bool verify_violation(const LinearMap& s, const LinearMap& t, const Cone& cone,
                      const OrderViolation& violation);

}  // namespace conelab
