#pragma once

#include <variant>
#include <vector>

#include "conelab/cone.hpp"

namespace conelab {

// Certificate payload vector: exact when produced by the rational path,
// always carrying a float view for reporting.
struct VecValue {
  std::optional<QVec> exact;
  DVec approx;

  VecValue() = default;
  explicit VecValue(const QVec& v) : exact(v), approx(to_double(v)) {}
  explicit VecValue(const DVec& v) : approx(v) {}
};

// Inside, polyhedral: v = sum_i coeffs_i * g_i with coeffs >= 0.
struct CoeffsCert {
  VecValue coeffs;
};

// Outside: <y, g> >= 0 on the cone but <y, v> < 0.
struct FarkasCert {
  VecValue y;
};

// Psd cones: the eigenvalue floor; char_poly holds the exact monic
// characteristic-polynomial coefficients (highest degree first) whose sign
// pattern backs the exact decision.  Empty in approx mode.
struct EigenFloorCert {
  ScalarValue lambda_min;
  std::vector<Rational> char_poly;
};

// Second-order cones, inside: the margin x1 - ||rest||.
struct SocMarginCert {
  ScalarValue margin;
};

using Certificate = std::variant<CoeffsCert, FarkasCert, EigenFloorCert, SocMarginCert>;

struct MembershipVerdict {
  bool inside = false;
  ScalarValue margin;
  Certificate cert;
  Mode mode = Mode::Exact;
};

struct MemberOpts {
  double tol = 1e-9;
  // In strict exact mode, an inexpressible exact margin (irrational
  // eigenvalue floor or SOC norm) raises ExactnessError instead of silently
  // degrading to a float.  Decision-only callers relax this.
  bool strict_exact_margin = true;
};

MembershipVerdict membership(const Cone& cone, const QVec& v, Mode mode,
                             const MemberOpts& opts = {});
MembershipVerdict membership_approx(const Cone& cone, const DVec& v, double tol = 1e-9);

// Exact decision with exact certificates; margin may be informational float.
MembershipVerdict exact_member_verdict(const Cone& cone, const QVec& v);
bool exact_member(const Cone& cone, const QVec& v);

// Independent re-check of an emitted verdict: re-decides membership and
// re-validates the certificate against its invariants.
bool verify_membership(const Cone& cone, const QVec& v, const MembershipVerdict& verdict,
                       double tol = 1e-9);
bool verify_membership_approx(const Cone& cone, const DVec& v,
                              const MembershipVerdict& verdict, double tol = 1e-9);

// Exact PSD machinery shared with positivity checks.
// Monic characteristic polynomial of a symmetric rational matrix, highest
// degree first (Faddeev–LeVerrier).
std::vector<Rational> char_poly_sym(const QMat& a);
bool psd_exact_sym(const QMat& a);
// Real embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix; PSD iff the
// embedding is.
QMat complex_embed(const CQMat& a);
bool psd_exact_herm(const CQMat& a);

}  // namespace conelab
