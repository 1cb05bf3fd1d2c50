#include "conelab/positivity.hpp"

#include <algorithm>
#include <cmath>

#include "conelab/elim.hpp"
#include "conelab/herm.hpp"
#include "conelab/jacobi.hpp"
#include "conelab/rng.hpp"

namespace conelab {

QVec soc_boundary_lift(const QVec& u) {
  const Index n = u.size() + 2;
  Rational s = 0;
  for (Index i = 0; i < u.size(); ++i) s += u(i) * u(i);
  QVec x(n);
  x(0) = (s + 1) / 2;
  for (Index i = 0; i < u.size(); ++i) x(i + 1) = u(i);
  x(n - 1) = (s - 1) / 2;
  return x;
}

namespace {

QMat soc_j(Index n) {
  QMat j = QMat::Identity(n, n);
  for (Index i = 1; i < n; ++i) j(i, i) = -1;
  return j;
}

// --- Candidate ray streams for the falsifier -------------------------------

// Deterministic candidate members of the cone: canonical rays first, then
// seeded random rays.  All exact rational.
std::vector<QVec> candidate_rays(const Cone& cone, long count, std::uint64_t seed) {
  std::vector<QVec> rays;
  const Index n = cone.ambient_dim();
  Rng rng(seed);
  switch (cone.kind()) {
    case ConeKind::PolyhedralV:
    case ConeKind::PolyhedralH: {
      const QMat& g = cone.generators();
      for (Index j = 0; j < g.cols(); ++j) rays.push_back(g.col(j));
      while (static_cast<long>(rays.size()) < count) {
        QVec c(g.cols());
        bool zero = true;
        for (Index i = 0; i < c.size(); ++i) {
          c(i) = rng.uniform_int(0, 6);
          if (c(i) != 0) zero = false;
        }
        if (zero) continue;
        rays.push_back(QVec(g * c));
      }
      break;
    }
    case ConeKind::SecondOrder: {
      QVec e1 = QVec::Zero(n);
      e1(0) = 1;
      rays.push_back(e1);
      // Small deterministic boundary grid, then random rational boundary rays.
      for (long a = -2; a <= 2; ++a) {
        QVec u = QVec::Zero(n - 2);
        if (u.size() > 0) u(0) = a;
        rays.push_back(soc_boundary_lift(u));
      }
      while (static_cast<long>(rays.size()) < count) {
        QVec u(n - 2);
        for (Index i = 0; i < u.size(); ++i) u(i) = rng.rational(12, 4);
        rays.push_back(soc_boundary_lift(u));
      }
      break;
    }
    case ConeKind::Psd: {
      if (cone.psd_field() == MatrixField::Complex) {
        QVec id(4);
        id << 1, 1, 0, 0;
        rays.push_back(id);
        auto rank1 = [](const Rational& x1r, const Rational& x1i, const Rational& x2r,
                        const Rational& x2i) {
          QVec c(4);
          c(0) = x1r * x1r + x1i * x1i;
          c(1) = x2r * x2r + x2i * x2i;
          // b = x1 * conj(x2)
          c(2) = x1r * x2r + x1i * x2i;
          c(3) = x1i * x2r - x1r * x2i;
          return c;
        };
        for (long a = -1; a <= 1; ++a)
          for (long b = -1; b <= 1; ++b)
            for (long c2 = 0; c2 <= 1; ++c2) {
              QVec c = rank1(Rational(a), Rational(b), Rational(1), Rational(c2));
              if (!is_zero(c)) rays.push_back(c);
            }
        while (static_cast<long>(rays.size()) < count) {
          QVec c = QVec::Zero(4);
          const int terms = static_cast<int>(rng.uniform_int(1, 2));
          for (int t = 0; t < terms; ++t)
            c += rank1(rng.rational(5, 2), rng.rational(5, 2), rng.rational(5, 2),
                       rng.rational(5, 2));
          if (!is_zero(c)) rays.push_back(c);
        }
      } else {
        const Index k = cone.psd_k();
        QVec id = QVec::Zero(n);
        for (Index i = 0; i < k; ++i) id(i) = 1;
        rays.push_back(id);
        auto rank1 = [k](const QVec& x) {
          QMat a = x * x.transpose();
          return sym_to_coords(a);
        };
        for (Index i = 0; i < k; ++i) {
          QVec x = QVec::Zero(k);
          x(i) = 1;
          rays.push_back(rank1(x));
        }
        while (static_cast<long>(rays.size()) < count) {
          QVec c = QVec::Zero(n);
          const int terms = static_cast<int>(rng.uniform_int(1, 2));
          for (int t = 0; t < terms; ++t) c += rank1(rng.rational_vector(k, 5, 2));
          if (!is_zero(c)) rays.push_back(c);
        }
      }
      break;
    }
  }
  if (static_cast<long>(rays.size()) > count) rays.resize(count);
  return rays;
}

std::optional<OrderViolation> violation_at(const QMat& diff, const Cone& cone,
                                           const QVec& v) {
  const QVec w = diff * v;
  if (exact_member(cone, w)) return std::nullopt;
  if (!exact_member(cone, v)) return std::nullopt;
  OrderViolation hit;
  hit.v = v;
  hit.w = w;
  hit.v_inside = exact_member_verdict(cone, v);
  hit.w_outside = exact_member_verdict(cone, w);
  return hit;
}

// Margin of (T-S)v in float, for the descent phase.
double image_margin(const QMat& diff_d, const Cone& cone, const DVec& v) {
  const DVec w = diff_d.cast<double>() * v;
  return membership_approx(cone, w, 1e-12).margin.as_double();
}

// Coordinate descent on a nonnegative parameterization of cone rays,
// minimizing the image margin; candidates are rationalized and re-verified
// exactly before acceptance.
std::optional<OrderViolation> descent_violation(const QMat& diff, const Cone& cone,
                                                std::uint64_t seed) {
  const Index n = cone.ambient_dim();
  const DMat diff_d = to_double(diff);
  Rng rng(seed ^ 0x5eedULL);
  // Parameterization: polyhedral -> nonneg generator coefficients;
  // SOC -> boundary-lift parameter u; Psd -> rank-1 vector (real embedding).
  Index params = 0;
  switch (cone.kind()) {
    case ConeKind::PolyhedralV:
    case ConeKind::PolyhedralH:
      params = cone.generators().cols();
      break;
    case ConeKind::SecondOrder:
      params = n - 2;
      break;
    case ConeKind::Psd:
      params = cone.psd_field() == MatrixField::Complex ? 4 : cone.psd_k();
      break;
  }
  if (params == 0) return std::nullopt;
  auto make_ray_d = [&](const DVec& p) -> DVec {
    switch (cone.kind()) {
      case ConeKind::PolyhedralV:
      case ConeKind::PolyhedralH:
        return to_double(cone.generators()) * p.cwiseMax(0.0);
      case ConeKind::SecondOrder: {
        DVec x(n);
        const double s = p.squaredNorm();
        x(0) = (s + 1) / 2;
        x.segment(1, n - 2) = p;
        x(n - 1) = (s - 1) / 2;
        return x;
      }
      case ConeKind::Psd: {
        if (cone.psd_field() == MatrixField::Complex) {
          DVec c(4);
          c(0) = p(0) * p(0) + p(1) * p(1);
          c(1) = p(2) * p(2) + p(3) * p(3);
          c(2) = p(0) * p(2) + p(1) * p(3);
          c(3) = p(1) * p(2) - p(0) * p(3);
          return c;
        }
        DMat a = p * p.transpose();
        const Index k = cone.psd_k();
        DVec c(n);
        for (Index i = 0; i < k; ++i) c(i) = a(i, i);
        Index t = k;
        for (Index i = 0; i < k; ++i)
          for (Index j = i + 1; j < k; ++j) c(t++) = a(i, j);
        return c;
      }
    }
    return DVec::Zero(n);
  };
  auto make_ray_q = [&](const DVec& p) -> QVec {
    QVec pq(p.size());
    for (Index i = 0; i < p.size(); ++i) pq(i) = rationalize(p(i), BigInt(10000));
    switch (cone.kind()) {
      case ConeKind::PolyhedralV:
      case ConeKind::PolyhedralH: {
        for (Index i = 0; i < pq.size(); ++i)
          if (pq(i) < 0) pq(i) = 0;
        return QVec(cone.generators() * pq);
      }
      case ConeKind::SecondOrder:
        return soc_boundary_lift(pq);
      case ConeKind::Psd: {
        if (cone.psd_field() == MatrixField::Complex) {
          QVec c(4);
          c(0) = pq(0) * pq(0) + pq(1) * pq(1);
          c(1) = pq(2) * pq(2) + pq(3) * pq(3);
          c(2) = pq(0) * pq(2) + pq(1) * pq(3);
          c(3) = pq(1) * pq(2) - pq(0) * pq(3);
          return c;
        }
        return sym_to_coords(QMat(pq * pq.transpose()));
      }
    }
    return QVec::Zero(n);
  };
  for (int restart = 0; restart < 8; ++restart) {
    DVec p(params);
    for (Index i = 0; i < params; ++i) p(i) = rng.gaussian();
    if (cone.polyhedral()) p = p.cwiseAbs();
    double best = image_margin(diff_d, cone, make_ray_d(p));
    double step = 0.5;
    for (int iter = 0; iter < 400 && step > 1e-7; ++iter) {
      bool improved = false;
      for (Index i = 0; i < params; ++i) {
        for (double sign : {1.0, -1.0}) {
          DVec q = p;
          q(i) += sign * step;
          const double m = image_margin(diff_d, cone, make_ray_d(q));
          if (m < best - 1e-15) {
            best = m;
            p = q;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (best < 1e-7) {
      // Promote to an exact candidate and verify; small perturbations of the
      // parameters are tried as well since rationalization shifts the ray.
      for (int jitter = 0; jitter < 3; ++jitter) {
        QVec v = make_ray_q(p);
        if (!is_zero(v)) {
          if (auto hit = violation_at(diff, cone, v)) return hit;
        }
        for (Index i = 0; i < params; ++i) p(i) += 1e-6 * rng.gaussian();
      }
    }
  }
  return std::nullopt;
}

std::optional<OrderViolation> search_violation(const QMat& diff, const Cone& cone,
                                               const PositivityOpts& opts) {
  if (cone.polyhedral()) {
    // Generator images decide membership of diff(C) in C completely: a
    // violating generator is a witness, and none violating means none exists.
    const QMat& g = cone.generators();
    for (Index j = 0; j < g.cols(); ++j) {
      if (auto hit = violation_at(diff, cone, g.col(j))) return hit;
    }
    return std::nullopt;
  }
  for (const QVec& v : candidate_rays(cone, opts.falsifier_rays, opts.seed)) {
    if (auto hit = violation_at(diff, cone, v)) return hit;
  }
  return descent_violation(diff, cone, opts.seed);
}

// --- SOC mu-certificate ----------------------------------------------------

std::optional<MuCertificate> soc_mu_certificate(const QMat& t, const PositivityOpts& opts) {
  const Index n = t.rows();
  const QMat j = soc_j(n);
  const QMat h = t.transpose() * j * t;
  const DMat hd = to_double(h);
  const DMat jd = to_double(j);
  double mu_max = opts.mu_max;
  if (mu_max < 0) {
    mu_max = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k) mu_max += to_double(t(i, k)) * to_double(t(i, k));
    mu_max = std::max(mu_max, 1.0);
  }
  auto floor_at = [&](double mu) { return lambda_min_sym(hd - mu * jd); };
  // Concave in mu (pointwise min of affine functions): coarse grid to bracket
  // the max, then ternary refinement.
  const int grid = 129;
  int best_i = 0;
  double best_f = -1e300;
  std::vector<double> vals(grid);
  for (int i = 0; i < grid; ++i) {
    const double mu = mu_max * i / (grid - 1);
    vals[i] = floor_at(mu);
    if (vals[i] > best_f) { best_f = vals[i]; best_i = i; }
  }
  bool concave = true;
  for (int i = 1; i + 1 < grid; ++i)
    if (vals[i - 1] + vals[i + 1] - 2 * vals[i] > 1e-7 * (1.0 + std::abs(vals[i])))
      concave = false;
  double lo = mu_max * std::max(0, best_i - 1) / (grid - 1);
  double hi = mu_max * std::min(grid - 1, best_i + 1) / (grid - 1);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (floor_at(m1) < floor_at(m2)) lo = m1;
    else hi = m2;
  }
  const double mu_star = (lo + hi) / 2;
  const double f_star = floor_at(mu_star);
  MuCertificate cert;
  cert.mu = mu_star;
  cert.floor = f_star;
  cert.concave_on_grid = concave;
  cert.mu_max = mu_max;
  // Exact upgrade: try continued-fraction convergents of mu*.
  for (long den : {1L, 2L, 4L, 8L, 100L, 10000L, 1000000L}) {
    const Rational mu_r = rationalize(mu_star, BigInt(den));
    if (mu_r < 0) continue;
    if (psd_exact_sym(QMat(h - mu_r * j))) {
      cert.exact_mu = mu_r;
      break;
    }
  }
  if (cert.exact_mu || f_star >= -opts.tol) return cert;
  return std::nullopt;
}

// --- Congruence-form recognition -------------------------------------------

bool congruence_matches(const LinearMap& t, const Cone& cone) {
  if (!t.provenance) return false;
  const auto* cp = std::get_if<CongruenceProvenance>(&*t.provenance);
  if (!cp) return false;
  if (cone.kind() == ConeKind::Psd) {
    if (cp->via_soc_iso) return false;
    if (cone.psd_field() == MatrixField::Complex) {
      if (!cp->complex_factor || cone.psd_k() != 2) return false;
      return congruence_map(cp->L).matrix == t.matrix;
    }
    if (cp->complex_factor) return false;
    if (cp->L_real.rows() != cone.psd_k()) return false;
    return congruence_map_real(cp->L_real).matrix == t.matrix;
  }
  if (cone.kind() == ConeKind::SecondOrder && cp->via_soc_iso) {
    // The map is a congruence conjugated through the order isomorphism.
    if (cone.ambient_dim() == 3 && !cp->complex_factor && cp->L_real.rows() == 2) {
      const QMat s = sym2_to_soc_matrix();
      const QMat s_inv = *exact_inverse(s);
      return QMat(s * congruence_map_real(cp->L_real).matrix * s_inv) == t.matrix;
    }
    if (cone.ambient_dim() == 4 && cp->complex_factor) {
      const QMat s = herm_to_soc_matrix();
      const QMat s_inv = *exact_inverse(s);
      return QMat(s * congruence_map(cp->L).matrix * s_inv) == t.matrix;
    }
  }
  return false;
}

}  // namespace

// --- Public operations ------------------------------------------------------

PositivityVerdict is_positive(const LinearMap& t, const Cone& cone,
                              const PositivityOpts& opts) {
  if (t.dim() != cone.ambient_dim())
    throw DimensionError("is_positive: map/cone dimension mismatch");
  PositivityVerdict verdict;
  if (cone.polyhedral()) {
    verdict.method = PositivityMethod::GeneratorCheck;
    const QMat& g = cone.generators();
    for (Index j = 0; j < g.cols(); ++j) {
      MembershipVerdict mv = exact_member_verdict(cone, QVec(t.matrix * g.col(j)));
      verdict.generator_images.push_back(mv);
      if (!mv.inside) {
        verdict.verdict = Positivity::NotPositive;
        verdict.method = PositivityMethod::FalsifiedBySample;
        OrderViolation violation;
        violation.v = g.col(j);
        violation.w = t.matrix * g.col(j);
        violation.v_inside = exact_member_verdict(cone, violation.v);
        violation.w_outside = mv;
        verdict.violation = violation;
        return verdict;
      }
    }
    verdict.verdict = Positivity::Positive;
    return verdict;
  }
  if (congruence_matches(t, cone)) {
    verdict.verdict = Positivity::Positive;
    verdict.method = PositivityMethod::CongruenceForm;
    return verdict;
  }
  if (cone.kind() == ConeKind::SecondOrder) {
    // The mu-certificate is cheap (float eigenvalue sweeps); try it before
    // the exact sampling falsifier.
    QVec e1 = QVec::Zero(cone.ambient_dim());
    e1(0) = 1;
    const bool nappe = exact_member(cone, QVec(t.matrix * e1));
    verdict.nappe_checked = nappe;
    if (nappe) {
      if (auto mu = soc_mu_certificate(t.matrix, opts)) {
        verdict.verdict = Positivity::Positive;
        verdict.method = PositivityMethod::MuCertificate;
        verdict.mu = mu;
        return verdict;
      }
    }
    if (auto hit = search_violation(t.matrix, cone, opts)) {
      verdict.verdict = Positivity::NotPositive;
      verdict.method = PositivityMethod::FalsifiedBySample;
      verdict.violation = hit;
      return verdict;
    }
    verdict.verdict = Positivity::Unknown;
    verdict.method = PositivityMethod::Inconclusive;
    return verdict;
  }
  // Psd cone, raw matrix form: sampling falsifier, else unknown (tri-state).
  if (auto hit = search_violation(t.matrix, cone, opts)) {
    verdict.verdict = Positivity::NotPositive;
    verdict.method = PositivityMethod::FalsifiedBySample;
    verdict.violation = hit;
    return verdict;
  }
  verdict.verdict = Positivity::Unknown;
  verdict.method = PositivityMethod::Inconclusive;
  return verdict;
}

PositivityVerdict order_leq(const LinearMap& s, const LinearMap& t, const Cone& cone,
                            const PositivityOpts& opts) {
  if (s.dim() != t.dim()) throw DimensionError("order_leq: map dimensions differ");
  return is_positive(map_from_matrix(QMat(t.matrix - s.matrix)), cone, opts);
}

std::optional<OrderViolation> find_violation(const LinearMap& s, const LinearMap& t,
                                             const Cone& cone,
                                             const PositivityOpts& opts) {
  if (s.dim() != t.dim() || s.dim() != cone.ambient_dim())
    throw DimensionError("find_violation: dimension mismatch");
  return search_violation(QMat(t.matrix - s.matrix), cone, opts);
}

std::optional<int> m_isometry_order(const CQMat& l, int m_max) {
  const Index k = l.rows();
  if (l.cols() != k) throw DimensionError("m_isometry_order: factor must be square");
  CQMat y = CQMat::Identity(k, k);
  for (int m = 1; m <= m_max; ++m) {
    y = y - CQMat(l.adjoint() * y * l);  // apply (id - T)
    bool zero = true;
    for (Index i = 0; i < k && zero; ++i)
      for (Index j = 0; j < k; ++j)
        if (y(i, j) != CRational(0, 0)) { zero = false; break; }
    if (zero) return m;
  }
  return std::nullopt;
}

bool verify_positivity(const LinearMap& t, const Cone& cone,
                       const PositivityVerdict& verdict) {
  switch (verdict.method) {
    case PositivityMethod::GeneratorCheck: {
      if (!cone.polyhedral() || verdict.verdict != Positivity::Positive) return false;
      const QMat& g = cone.generators();
      if (static_cast<Index>(verdict.generator_images.size()) != g.cols()) return false;
      for (Index j = 0; j < g.cols(); ++j) {
        const MembershipVerdict& mv = verdict.generator_images[j];
        if (!mv.inside || !verify_membership(cone, QVec(t.matrix * g.col(j)), mv))
          return false;
      }
      return true;
    }
    case PositivityMethod::CongruenceForm:
      return verdict.verdict == Positivity::Positive && congruence_matches(t, cone);
    case PositivityMethod::MuCertificate: {
      if (cone.kind() != ConeKind::SecondOrder || !verdict.mu ||
          verdict.verdict != Positivity::Positive)
        return false;
      const Index n = cone.ambient_dim();
      const QMat j = soc_j(n);
      const QMat h = t.matrix.transpose() * j * t.matrix;
      QVec e1 = QVec::Zero(n);
      e1(0) = 1;
      if (!exact_member(cone, QVec(t.matrix * e1))) return false;
      if (verdict.mu->exact_mu) {
        return *verdict.mu->exact_mu >= 0 &&
               psd_exact_sym(QMat(h - *verdict.mu->exact_mu * j));
      }
      const double floor = lambda_min_sym(to_double(h) - verdict.mu->mu * to_double(j));
      return verdict.mu->mu >= 0 && std::abs(floor - verdict.mu->floor) <= 1e-6 &&
             floor >= -1e-6;
    }
    case PositivityMethod::FalsifiedBySample: {
      if (verdict.verdict != Positivity::NotPositive || !verdict.violation) return false;
      const Index n = cone.ambient_dim();
      const LinearMap zero = map_from_matrix(QMat::Zero(n, n));
      return verify_violation(zero, t, cone, *verdict.violation);
    }
    case PositivityMethod::Inconclusive:
      return verdict.verdict == Positivity::Unknown;
  }
  return false;
}

bool verify_violation(const LinearMap& s, const LinearMap& t, const Cone& cone,
                      const OrderViolation& violation) {
  const QVec w = QVec((t.matrix - s.matrix) * violation.v);
  if (w != violation.w) return false;
  if (!violation.v_inside.inside || violation.w_outside.inside) return false;
  return verify_membership(cone, violation.v, violation.v_inside) &&
         verify_membership(cone, violation.w, violation.w_outside);
}

}  // namespace conelab
