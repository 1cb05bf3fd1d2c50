#include "conelab/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "conelab/elim.hpp"

namespace conelab {

QVec canonical_ray(const QVec& r) {
  BigInt l = 1;
  for (Index i = 0; i < r.size(); ++i) l = lcm(l, denominator(r(i)));
  BigInt g = 0;
  std::vector<BigInt> ints(r.size());
  for (Index i = 0; i < r.size(); ++i) {
    ints[i] = numerator(r(i)) * (l / denominator(r(i)));
    g = gcd(g, abs(ints[i]));
  }
  if (g == 0) return QVec::Zero(r.size());
  QVec out(r.size());
  for (Index i = 0; i < r.size(); ++i) out(i) = Rational(ints[i] / g);
  return out;
}

QMat canonical_ray_set(const QMat& rays) {
  std::vector<QVec> cols;
  for (Index j = 0; j < rays.cols(); ++j) {
    QVec c = canonical_ray(rays.col(j));
    if (is_zero(c)) continue;
    cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end(), lex_less);
  cols.erase(std::unique(cols.begin(), cols.end(),
                         [](const QVec& a, const QVec& b) { return a == b; }),
             cols.end());
  QMat out(rays.rows(), static_cast<Index>(cols.size()));
  for (Index j = 0; j < out.cols(); ++j) out.col(j) = cols[j];
  return out;
}

namespace {

struct DDRay {
  QVec v;
  std::uint64_t active;  // bitmask over processed rows with <a_i, v> = 0
};

Rational dot(const QVec& a, const QVec& b) { return a.dot(b); }

}  // namespace

RaySystem extreme_rays_of_system(const QMat& a) {
  const Index n = a.cols(), m = a.rows();
  if (m > 63) throw DimensionError("double description: too many inequality rows");
  std::vector<QVec> lin;
  for (Index i = 0; i < n; ++i) {
    QVec e = QVec::Zero(n);
    e(i) = 1;
    lin.push_back(e);
  }
  std::vector<DDRay> rays;
  for (Index r = 0; r < m; ++r) {
    const QVec row = a.row(r).transpose();
    const std::uint64_t bit = std::uint64_t(1) << r;
    // If some lineality direction violates the row, pivot it out: the
    // lineality space shrinks by one and contributes the new extreme ray.
    Index piv = -1;
    for (Index k = 0; k < static_cast<Index>(lin.size()); ++k)
      if (dot(row, lin[k]) != 0) { piv = k; break; }
    if (piv >= 0) {
      QVec l0 = lin[piv];
      Rational d0 = dot(row, l0);
      if (d0 < 0) { l0 = -l0; d0 = -d0; }
      lin.erase(lin.begin() + piv);
      for (auto& l : lin) {
        Rational d = dot(row, l);
        if (d != 0) l = canonical_ray(QVec(l - (d / d0) * l0));
      }
      for (auto& ray : rays) {
        Rational d = dot(row, ray.v);
        if (d != 0) ray.v = canonical_ray(QVec(ray.v - (d / d0) * l0));
        ray.active |= bit;
      }
      // All earlier rows vanish on the old lineality space, so they are
      // active on the pivoted-out ray.
      DDRay fresh{canonical_ray(l0), bit - 1};
      rays.push_back(fresh);
      continue;
    }
    // Row is zero on the lineality space: classic partition step.
    std::vector<Index> pos, neg;
    std::vector<Rational> val(rays.size());
    for (Index k = 0; k < static_cast<Index>(rays.size()); ++k) {
      val[k] = dot(row, rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      else if (val[k] < 0) neg.push_back(k);
      else rays[k].active |= bit;
    }
    if (neg.empty()) continue;
    std::vector<DDRay> next;
    for (Index k = 0; k < static_cast<Index>(rays.size()); ++k)
      if (val[k] >= 0) next.push_back(rays[k]);
    for (Index p : pos) {
      for (Index q : neg) {
        const std::uint64_t common = rays[p].active & rays[q].active;
        // Combinatorial adjacency: no third extreme ray is tight on every
        // row the pair shares.
        bool adjacent = true;
        for (Index k = 0; k < static_cast<Index>(rays.size()); ++k) {
          if (k == p || k == q) continue;
          if ((common & ~rays[k].active) == 0) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        QVec w = canonical_ray(QVec(val[p] * rays[q].v - val[q] * rays[p].v));
        if (is_zero(w)) continue;
        next.push_back(DDRay{w, common | bit});
      }
    }
    rays = std::move(next);
  }
  RaySystem out;
  out.rays = QMat(n, static_cast<Index>(rays.size()));
  for (Index k = 0; k < static_cast<Index>(rays.size()); ++k) out.rays.col(k) = rays[k].v;
  out.rays = canonical_ray_set(out.rays);
  out.lineality = QMat(n, static_cast<Index>(lin.size()));
  for (Index k = 0; k < static_cast<Index>(lin.size()); ++k) out.lineality.col(k) = lin[k];
  return out;
}

namespace {

// Rays plus +/- pairs for each lineality direction, canonicalized.
QMat fold_lineality(const RaySystem& sys) {
  QMat all(sys.rays.rows(), sys.rays.cols() + 2 * sys.lineality.cols());
  all.leftCols(sys.rays.cols()) = sys.rays;
  for (Index j = 0; j < sys.lineality.cols(); ++j) {
    all.col(sys.rays.cols() + 2 * j) = sys.lineality.col(j);
    all.col(sys.rays.cols() + 2 * j + 1) = -sys.lineality.col(j);
  }
  return canonical_ray_set(all);
}

}  // namespace

QMat dual_generators(const Cone& cone) {
  if (!cone.polyhedral()) throw ConeError("dual_generators: polyhedral cones only");
  return cone.dual_rays();
}

Cone v_to_h(const Cone& cone) {
  if (cone.kind() != ConeKind::PolyhedralV)
    throw ConeError("v_to_h: expected a V-representation cone");
  return Cone::polyhedral_h(cone.dual_rays().transpose());
}

Cone h_to_v(const Cone& cone) {
  if (cone.kind() != ConeKind::PolyhedralH)
    throw ConeError("h_to_v: expected an H-representation cone");
  return Cone::polyhedral_v(cone.generators());
}

// --- Cone construction -----------------------------------------------------

Cone Cone::polyhedral_v(const QMat& generators) {
  Cone c;
  c.kind_ = ConeKind::PolyhedralV;
  c.ambient_ = generators.rows();
  if (c.ambient_ < 1 || c.ambient_ > kMaxAmbientDim)
    throw ConeError("polyhedral cone: ambient dimension out of range");
  if (generators.cols() < 1) throw ConeError("polyhedral cone: no generators");
  for (Index j = 0; j < generators.cols(); ++j)
    if (is_zero(generators.col(j))) throw ConeError("polyhedral cone: zero generator");
  c.generators_ = generators;
  // Dual description: rays of {y : <g_j, y> >= 0 for all generators}.
  RaySystem dual = extreme_rays_of_system(QMat(generators.transpose()));
  // Pointedness: C is pointed iff its dual spans the ambient space.
  QMat span(c.ambient_, dual.rays.cols() + dual.lineality.cols());
  span.leftCols(dual.rays.cols()) = dual.rays;
  span.rightCols(dual.lineality.cols()) = dual.lineality;
  if (exact_rank(span) != static_cast<int>(c.ambient_))
    throw ConeError("polyhedral cone: contains a line (not pointed)");
  c.dual_rays_ = fold_lineality(dual);
  c.ineq_rows_ = c.dual_rays_.transpose();
  if (generators.rows() == generators.cols()) {
    auto inv = exact_inverse(generators);
    if (inv) c.gen_inverse_ = *inv;
  }
  return c;
}

Cone Cone::polyhedral_h(const QMat& rows) {
  Cone c;
  c.kind_ = ConeKind::PolyhedralH;
  c.ambient_ = rows.cols();
  if (c.ambient_ < 1 || c.ambient_ > kMaxAmbientDim)
    throw ConeError("polyhedral cone: ambient dimension out of range");
  if (rows.rows() < 1) throw ConeError("polyhedral cone: no inequality rows");
  for (Index i = 0; i < rows.rows(); ++i)
    if (is_zero(QVec(rows.row(i).transpose())))
      throw ConeError("polyhedral cone: zero inequality row");
  if (exact_rank(rows) != static_cast<int>(c.ambient_))
    throw ConeError("polyhedral cone: inequality rows do not pin a pointed cone");
  c.ineq_rows_ = rows;
  c.dual_rays_ = canonical_ray_set(QMat(rows.transpose()));
  RaySystem sys = extreme_rays_of_system(rows);
  if (sys.lineality.cols() != 0)
    throw ConeError("polyhedral cone: contains a line (not pointed)");
  if (sys.rays.cols() == 0)
    throw ConeError("polyhedral cone: inequality system has only the origin");
  c.generators_ = sys.rays;
  if (c.generators_.rows() == c.generators_.cols()) {
    auto inv = exact_inverse(c.generators_);
    if (inv) c.gen_inverse_ = *inv;
  }
  return c;
}

Cone Cone::second_order(Index n) {
  Cone c;
  c.kind_ = ConeKind::SecondOrder;
  if (n < 2 || n > kMaxAmbientDim)
    throw ConeError("second-order cone: dimension must be in [2, 16]");
  c.ambient_ = n;
  return c;
}

Cone Cone::psd(Index k, MatrixField field) {
  Cone c;
  c.kind_ = ConeKind::Psd;
  if (field == MatrixField::Complex && k != 2)
    throw ConeError("psd cone: complex field requires k = 2");
  if (k < 1 || psd_ambient_dim(k, field) > kMaxAmbientDim)
    throw ConeError("psd cone: matrix size out of range");
  c.psd_k_ = k;
  c.psd_field_ = field;
  c.ambient_ = psd_ambient_dim(k, field);
  return c;
}

}  // namespace conelab
