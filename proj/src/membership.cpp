#include "conelab/membership.hpp"

#include <algorithm>
#include <cmath>

#include "conelab/elim.hpp"
#include "conelab/herm.hpp"
#include "conelab/jacobi.hpp"

namespace conelab {

// --- Exact PSD machinery ---------------------------------------------------

std::vector<Rational> char_poly_sym(const QMat& a) {
  const Index k = a.rows();
  if (a.cols() != k) throw DimensionError("char_poly_sym: matrix not square");
  // Faddeev–LeVerrier: M1 = A, c_j = -tr(M_j)/j, M_{j+1} = A(M_j + c_j I).
  std::vector<Rational> coeffs(k + 1);
  coeffs[0] = 1;
  QMat m = a;
  for (Index j = 1; j <= k; ++j) {
    Rational c = -m.trace() / j;
    coeffs[j] = c;
    if (j < k) m = a * (m + c * QMat::Identity(k, k));
  }
  return coeffs;
}

bool psd_exact_sym(const QMat& a) {
  // A symmetric matrix is PSD iff its characteristic polynomial has no
  // negative roots, i.e. the coefficients alternate: (-1)^i c_i >= 0.
  auto coeffs = char_poly_sym(a);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    Rational signed_c = (i % 2 == 0) ? coeffs[i] : -coeffs[i];
    if (signed_c < 0) return false;
  }
  return true;
}

QMat complex_embed(const CQMat& a) {
  const Index k = a.rows();
  QMat e(2 * k, 2 * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      e(i, j) = a(i, j).real();
      e(i, j + k) = -a(i, j).imag();
      e(i + k, j) = a(i, j).imag();
      e(i + k, j + k) = a(i, j).real();
    }
  return e;
}

bool psd_exact_herm(const CQMat& a) { return psd_exact_sym(complex_embed(a)); }

// --- Polyhedral ------------------------------------------------------------

namespace {

Rational polyhedral_margin_exact(const Cone& cone, const QVec& v) {
  const QMat& d = cone.dual_rays();
  Rational margin;
  bool first = true;
  for (Index j = 0; j < d.cols(); ++j) {
    Rational m = d.col(j).dot(v);
    if (first || m < margin) { margin = m; first = false; }
  }
  if (first) throw ConeError("polyhedral cone with empty dual description");
  return margin;
}

// First dual ray attaining the minimum inner product (deterministic).
QVec worst_dual_ray(const Cone& cone, const QVec& v) {
  const QMat& d = cone.dual_rays();
  Index best = 0;
  Rational bm = d.col(0).dot(v);
  for (Index j = 1; j < d.cols(); ++j) {
    Rational m = d.col(j).dot(v);
    if (m < bm) { bm = m; best = j; }
  }
  return d.col(best);
}

// Carathéodory: search independent generator subsets, smallest first, for a
// nonnegative exact combination.
std::optional<QVec> coeffs_exact(const Cone& cone, const QVec& v) {
  const QMat& g = cone.generators();
  const Index m = g.cols();
  if (is_zero(v)) return QVec::Zero(m);
  if (cone.simplicial()) {
    QVec c = cone.gen_inverse() * v;
    if (is_nonneg(c)) return c;
    return std::nullopt;
  }
  const Index max_size = std::min<Index>(m, cone.ambient_dim());
  std::vector<Index> idx;
  // Iterate subsets by size, lexicographic within a size.
  for (Index size = 1; size <= max_size; ++size) {
    idx.assign(size, 0);
    for (Index i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      QMat sub(g.rows(), size);
      for (Index i = 0; i < size; ++i) sub.col(i) = g.col(idx[i]);
      if (auto c = solve_unique(sub, v); c && is_nonneg(*c)) {
        QVec full = QVec::Zero(m);
        for (Index i = 0; i < size; ++i) full(idx[i]) = (*c)(i);
        return full;
      }
      // next combination
      Index i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (Index j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<DVec> coeffs_approx(const Cone& cone, const DVec& v, double tol) {
  const DMat g = to_double(cone.generators());
  const Index m = g.cols();
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (v.cwiseAbs().maxCoeff() <= tol) return DVec::Zero(m);
  const Index max_size = std::min<Index>(m, cone.ambient_dim());
  std::vector<Index> idx;
  for (Index size = 1; size <= max_size; ++size) {
    idx.assign(size, 0);
    for (Index i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      DMat sub(g.rows(), size);
      for (Index i = 0; i < size; ++i) sub.col(i) = g.col(idx[i]);
      DVec c = sub.colPivHouseholderQr().solve(v);
      if ((sub * c - v).cwiseAbs().maxCoeff() <= 1e4 * tol * scale && c.minCoeff() >= -tol) {
        DVec full = DVec::Zero(m);
        for (Index i = 0; i < size; ++i) full(idx[i]) = c(i);
        return full;
      }
      Index i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (Index j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

MembershipVerdict polyhedral_exact(const Cone& cone, const QVec& v) {
  MembershipVerdict verdict;
  verdict.mode = Mode::Exact;
  Rational margin = polyhedral_margin_exact(cone, v);
  verdict.margin = ScalarValue(margin);
  verdict.inside = margin >= 0;
  if (verdict.inside) {
    auto c = coeffs_exact(cone, v);
    if (!c) throw Error("internal: member of a polyhedral cone has no conic combination");
    verdict.cert = CoeffsCert{VecValue(*c)};
  } else {
    verdict.cert = FarkasCert{VecValue(QVec(worst_dual_ray(cone, v)))};
  }
  return verdict;
}

MembershipVerdict polyhedral_approx(const Cone& cone, const DVec& v, double tol) {
  MembershipVerdict verdict;
  verdict.mode = Mode::Approx;
  const DMat d = to_double(cone.dual_rays());
  double margin = 0.0;
  Index worst = 0;
  for (Index j = 0; j < d.cols(); ++j) {
    double m = d.col(j).dot(v);
    if (j == 0 || m < margin) { margin = m; worst = j; }
  }
  verdict.margin = ScalarValue(margin);
  verdict.inside = margin >= -tol;
  if (verdict.inside) {
    auto c = coeffs_approx(cone, v, tol);
    if (!c) throw Error("approx membership could not assemble a Coeffs certificate");
    verdict.cert = CoeffsCert{VecValue(*c)};
  } else {
    verdict.cert = FarkasCert{VecValue(QVec(cone.dual_rays().col(worst)))};
  }
  return verdict;
}

// --- Second-order ----------------------------------------------------------

Rational soc_rest_sq(const QVec& v) {
  Rational s = 0;
  for (Index i = 1; i < v.size(); ++i) s += v(i) * v(i);
  return s;
}

// Exact Farkas witness for v outside the SOC: y = (t, -rest) with
// ||rest|| <= t (so y is in the self-dual cone) and <y, v> = t*x1 - S < 0.
QVec soc_farkas_exact(const QVec& v) {
  const Index n = v.size();
  const Rational x1 = v(0);
  const Rational s = soc_rest_sq(v);
  QVec y = QVec::Zero(n);
  if (s == 0) {
    y(0) = 1;  // v = x1*e1 with x1 < 0
    return y;
  }
  Rational t;
  if (x1 <= 0) {
    t = Rational((s + 1) / 2);  // t^2 >= s for every s >= 0
    if (t < 1) t = 1;
  } else {
    // AM-GM midpoint: t = (x1 + s/x1)/2 gives t^2 >= s, and t < s/x1
    // precisely because x1^2 < s.
    t = (x1 + s / x1) / 2;
  }
  y(0) = t;
  for (Index i = 1; i < n; ++i) y(i) = -v(i);
  return y;
}

MembershipVerdict soc_exact(const QVec& v) {
  MembershipVerdict verdict;
  verdict.mode = Mode::Exact;
  const Rational x1 = v(0);
  const Rational s = soc_rest_sq(v);
  verdict.inside = x1 >= 0 && x1 * x1 >= s;
  if (auto root = exact_sqrt(s))
    verdict.margin = ScalarValue(Rational(x1 - *root));
  else
    verdict.margin = ScalarValue(to_double(x1) - std::sqrt(to_double(s)));
  if (verdict.inside)
    verdict.cert = SocMarginCert{verdict.margin};
  else
    verdict.cert = FarkasCert{VecValue(soc_farkas_exact(v))};
  return verdict;
}

MembershipVerdict soc_approx(const DVec& v, double tol) {
  MembershipVerdict verdict;
  verdict.mode = Mode::Approx;
  const double rest = v.tail(v.size() - 1).norm();
  const double margin = v(0) - rest;
  verdict.margin = ScalarValue(margin);
  verdict.inside = margin >= -tol;
  if (verdict.inside) {
    verdict.cert = SocMarginCert{verdict.margin};
  } else if (rest == 0.0) {
    DVec y = DVec::Zero(v.size());
    y(0) = 1.0;
    verdict.cert = FarkasCert{VecValue(y)};
  } else {
    DVec y(v.size());
    y(0) = rest;
    y.tail(v.size() - 1) = -v.tail(v.size() - 1);
    verdict.cert = FarkasCert{VecValue(y)};
  }
  return verdict;
}

// --- Psd -------------------------------------------------------------------

struct PsdExact {
  bool inside;
  std::vector<Rational> char_poly;      // of the k x k matrix itself
  std::optional<Rational> exact_floor;  // when representable
  double approx_floor;
};

PsdExact psd_decide_exact(const Cone& cone, const QVec& v) {
  PsdExact out;
  if (cone.psd_field() == MatrixField::Complex || cone.psd_k() == 2) {
    Rational a, c, offdiag_sq;
    if (cone.psd_field() == MatrixField::Complex) {
      a = v(0); c = v(1);
      offdiag_sq = v(2) * v(2) + v(3) * v(3);
    } else {
      a = v(0); c = v(1);
      offdiag_sq = v(2) * v(2);
    }
    const Rational tr = a + c;
    const Rational det = a * c - offdiag_sq;
    out.char_poly = {Rational(1), -tr, det};
    out.inside = tr >= 0 && det >= 0;
    const Rational disc = tr * tr - 4 * det;
    if (auto root = exact_sqrt(disc)) {
      out.exact_floor = (tr - *root) / 2;
      out.approx_floor = to_double(*out.exact_floor);
    } else {
      out.approx_floor = (to_double(tr) - std::sqrt(to_double(disc))) / 2.0;
    }
    return out;
  }
  const QMat m = sym_from_coords(v, cone.psd_k());
  out.char_poly = char_poly_sym(m);
  out.inside = true;
  for (std::size_t i = 1; i < out.char_poly.size(); ++i) {
    Rational signed_c = (i % 2 == 0) ? out.char_poly[i] : -out.char_poly[i];
    if (signed_c < 0) { out.inside = false; break; }
  }
  bool diagonal = true;
  Rational diag_min = m(0, 0);
  for (Index i = 0; i < m.rows() && diagonal; ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) != 0) { diagonal = false; break; }
      if (i == j && m(i, i) < diag_min) diag_min = m(i, i);
    }
  if (diagonal) {
    out.exact_floor = diag_min;
    out.approx_floor = to_double(diag_min);
  } else {
    out.approx_floor = lambda_min_sym(to_double(m));
  }
  return out;
}

MembershipVerdict psd_exact(const Cone& cone, const QVec& v, bool strict) {
  PsdExact d = psd_decide_exact(cone, v);
  MembershipVerdict verdict;
  verdict.mode = Mode::Exact;
  verdict.inside = d.inside;
  if (d.exact_floor)
    verdict.margin = ScalarValue(*d.exact_floor);
  else if (strict)
    throw ExactnessError(
        "exact mode: eigenvalue floor is irrational; rerun in approx mode "
        "or use the decision-only interface");
  else
    verdict.margin = ScalarValue(d.approx_floor);
  verdict.cert = EigenFloorCert{verdict.margin, d.char_poly};
  return verdict;
}

DMat psd_matrix_approx(const Cone& cone, const DVec& v) {
  if (cone.psd_field() == MatrixField::Complex) {
    // Real embedding of [[a, p+iq], [p-iq, c]].
    DMat e(4, 4);
    e << v(0), v(2), 0, -v(3),
         v(2), v(1), v(3), 0,
         0, v(3), v(0), v(2),
        -v(3), 0, v(2), v(1);
    return e;
  }
  const Index k = cone.psd_k();
  DMat m(k, k);
  for (Index i = 0; i < k; ++i) m(i, i) = v(i);
  Index t = k;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) {
      m(i, j) = v(t);
      m(j, i) = v(t);
      ++t;
    }
  return m;
}

MembershipVerdict psd_approx(const Cone& cone, const DVec& v, double tol) {
  MembershipVerdict verdict;
  verdict.mode = Mode::Approx;
  const double floor = lambda_min_sym(psd_matrix_approx(cone, v));
  verdict.margin = ScalarValue(floor);
  verdict.inside = floor >= -tol;
  verdict.cert = EigenFloorCert{verdict.margin, {}};
  return verdict;
}

void check_dim(const Cone& cone, Index got) {
  if (got != cone.ambient_dim())
    throw DimensionError("membership: vector dimension does not match the cone");
}

}  // namespace

// --- Public entry points ---------------------------------------------------

MembershipVerdict membership(const Cone& cone, const QVec& v, Mode mode,
                             const MemberOpts& opts) {
  check_dim(cone, v.size());
  if (mode == Mode::Approx) return membership_approx(cone, to_double(v), opts.tol);
  switch (cone.kind()) {
    case ConeKind::PolyhedralV:
    case ConeKind::PolyhedralH:
      return polyhedral_exact(cone, v);
    case ConeKind::SecondOrder:
      return soc_exact(v);
    case ConeKind::Psd:
      return psd_exact(cone, v, opts.strict_exact_margin);
  }
  throw Error("membership: unknown cone kind");
}

MembershipVerdict membership_approx(const Cone& cone, const DVec& v, double tol) {
  check_dim(cone, v.size());
  switch (cone.kind()) {
    case ConeKind::PolyhedralV:
    case ConeKind::PolyhedralH:
      return polyhedral_approx(cone, v, tol);
    case ConeKind::SecondOrder:
      return soc_approx(v, tol);
    case ConeKind::Psd:
      return psd_approx(cone, v, tol);
  }
  throw Error("membership: unknown cone kind");
}

MembershipVerdict exact_member_verdict(const Cone& cone, const QVec& v) {
  MemberOpts opts;
  opts.strict_exact_margin = false;
  return membership(cone, v, Mode::Exact, opts);
}

bool exact_member(const Cone& cone, const QVec& v) {
  check_dim(cone, v.size());
  switch (cone.kind()) {
    case ConeKind::PolyhedralV:
    case ConeKind::PolyhedralH:
      return polyhedral_margin_exact(cone, v) >= 0;
    case ConeKind::SecondOrder:
      return v(0) >= 0 && v(0) * v(0) >= soc_rest_sq(v);
    case ConeKind::Psd:
      return psd_decide_exact(cone, v).inside;
  }
  throw Error("membership: unknown cone kind");
}

// --- Verification ----------------------------------------------------------

namespace {

bool soc_member_exact_vec(const QVec& y) {
  return y(0) >= 0 && y(0) * y(0) >= soc_rest_sq(y);
}

bool verify_cert_exact(const Cone& cone, const QVec& v, const MembershipVerdict& verdict,
                       double tol) {
  if (const auto* cc = std::get_if<CoeffsCert>(&verdict.cert)) {
    if (!verdict.inside || !cone.polyhedral()) return false;
    if (cc->coeffs.exact) {
      const QVec& c = *cc->coeffs.exact;
      if (c.size() != cone.generators().cols() || !is_nonneg(c)) return false;
      return QVec(cone.generators() * c) == v;
    }
    const DVec& c = cc->coeffs.approx;
    if (c.size() != cone.generators().cols() || c.minCoeff() < -10 * tol) return false;
    return (to_double(cone.generators()) * c - to_double(v)).cwiseAbs().maxCoeff() <=
           1e4 * tol;
  }
  if (const auto* fc = std::get_if<FarkasCert>(&verdict.cert)) {
    if (verdict.inside) return false;
    if (fc->y.exact) {
      const QVec& y = *fc->y.exact;
      if (y.size() != v.size()) return false;
      if (y.dot(v) >= 0) return false;
      if (cone.polyhedral()) {
        for (Index j = 0; j < cone.generators().cols(); ++j)
          if (y.dot(cone.generators().col(j)) < 0) return false;
        return true;
      }
      if (cone.kind() == ConeKind::SecondOrder) return soc_member_exact_vec(y);
      return false;
    }
    const DVec y = fc->y.approx;
    const DVec vd = to_double(v);
    if (y.dot(vd) >= 0) return false;
    if (cone.polyhedral()) {
      const DMat g = to_double(cone.generators());
      for (Index j = 0; j < g.cols(); ++j)
        if (y.dot(g.col(j)) < -tol) return false;
      return true;
    }
    if (cone.kind() == ConeKind::SecondOrder)
      return y(0) >= y.tail(y.size() - 1).norm() - tol;
    return false;
  }
  if (const auto* ec = std::get_if<EigenFloorCert>(&verdict.cert)) {
    if (cone.kind() != ConeKind::Psd) return false;
    PsdExact d = psd_decide_exact(cone, v);
    if (d.inside != verdict.inside) return false;
    if (!ec->char_poly.empty() && ec->char_poly != d.char_poly) return false;
    if (ec->lambda_min.exact()) {
      if (!d.exact_floor || *d.exact_floor != ec->lambda_min.rational()) return false;
    } else if (std::abs(ec->lambda_min.as_double() - d.approx_floor) > 1e-6) {
      return false;
    }
    return true;
  }
  if (const auto* sc = std::get_if<SocMarginCert>(&verdict.cert)) {
    if (cone.kind() != ConeKind::SecondOrder || !verdict.inside) return false;
    const Rational s = soc_rest_sq(v);
    if (sc->margin.exact()) {
      auto root = exact_sqrt(s);
      return root && Rational(v(0) - *root) == sc->margin.rational();
    }
    const double recomputed = to_double(v(0)) - std::sqrt(to_double(s));
    return std::abs(recomputed - sc->margin.as_double()) <= 1e-6;
  }
  return false;
}

// Certificate checks against float input data; exact payloads are viewed
// through their float projection.
bool verify_cert_approx(const Cone& cone, const DVec& v, const MembershipVerdict& verdict,
                        double tol) {
  if (const auto* cc = std::get_if<CoeffsCert>(&verdict.cert)) {
    if (!verdict.inside || !cone.polyhedral()) return false;
    const DVec& c = cc->coeffs.approx;
    if (c.size() != cone.generators().cols() || c.minCoeff() < -10 * tol) return false;
    const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    return (to_double(cone.generators()) * c - v).cwiseAbs().maxCoeff() <= 1e4 * tol * scale;
  }
  if (const auto* fc = std::get_if<FarkasCert>(&verdict.cert)) {
    if (verdict.inside) return false;
    const DVec& y = fc->y.approx;
    if (y.size() != v.size() || y.dot(v) >= 0) return false;
    if (cone.polyhedral()) {
      const DMat g = to_double(cone.generators());
      for (Index j = 0; j < g.cols(); ++j)
        if (y.dot(g.col(j)) < -tol) return false;
      return true;
    }
    if (cone.kind() == ConeKind::SecondOrder)
      return y(0) >= y.tail(y.size() - 1).norm() - tol;
    return false;
  }
  if (const auto* ec = std::get_if<EigenFloorCert>(&verdict.cert)) {
    if (cone.kind() != ConeKind::Psd) return false;
    const double floor = lambda_min_sym(psd_matrix_approx(cone, v));
    if (std::abs(ec->lambda_min.as_double() - floor) > 1e-6) return false;
    return verdict.inside == (floor >= -10 * tol) ||
           std::abs(floor) <= 10 * tol;
  }
  if (const auto* sc = std::get_if<SocMarginCert>(&verdict.cert)) {
    if (cone.kind() != ConeKind::SecondOrder || !verdict.inside) return false;
    const double recomputed = v(0) - v.tail(v.size() - 1).norm();
    return std::abs(recomputed - sc->margin.as_double()) <= 1e-6;
  }
  return false;
}

}  // namespace

bool verify_membership(const Cone& cone, const QVec& v, const MembershipVerdict& verdict,
                       double tol) {
  if (v.size() != cone.ambient_dim()) return false;
  if (verdict.mode == Mode::Approx) return verify_membership_approx(cone, to_double(v), verdict, tol);
  if (exact_member(cone, v) != verdict.inside) return false;
  return verify_cert_exact(cone, v, verdict, tol);
}

bool verify_membership_approx(const Cone& cone, const DVec& v,
                              const MembershipVerdict& verdict, double tol) {
  if (v.size() != cone.ambient_dim()) return false;
  const MembershipVerdict re = membership_approx(cone, v, tol);
  // Tolerance re-decision: allow disagreement only inside the boundary band.
  if (re.inside != verdict.inside && std::abs(re.margin.as_double()) > 10 * tol)
    return false;
  return verify_cert_approx(cone, v, verdict, tol);
}

}  // namespace conelab
