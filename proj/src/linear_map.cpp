#include "conelab/linear_map.hpp"

#include "conelab/herm.hpp"

namespace conelab {

LinearMap map_from_matrix(const QMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("linear map: matrix not square");
  return LinearMap{m, std::nullopt};
}

LinearMap identity_map(Index n) { return map_from_matrix(QMat::Identity(n, n)); }

QVec apply(const LinearMap& t, const QVec& v) {
  if (t.matrix.cols() != v.size()) throw DimensionError("apply: dimension mismatch");
  return t.matrix * v;
}

LinearMap lift_two_sided(const QMat& l, const QMat& r) {
  if (l.rows() != l.cols() || r.rows() != r.cols())
    throw DimensionError("lift: factors must be square");
  if (l.rows() != r.rows()) throw DimensionError("lift: factor sizes differ");
  LinearMap t;
  t.matrix = kronecker(QMat(r.transpose()), l);
  t.provenance = TwoSidedProvenance{l, r};
  return t;
}

LinearMap congruence_map(const CQMat& l) {
  if (l.rows() != 2 || l.cols() != 2)
    throw DimensionError("congruence map: expected a 2x2 factor");
  QMat m(4, 4);
  for (Index j = 0; j < 4; ++j) {
    QVec basis = QVec::Zero(4);
    basis(j) = 1;
    CQMat image = l.adjoint() * herm_from_coords(basis) * l;
    m.col(j) = herm_to_coords(image);
  }
  LinearMap t;
  t.matrix = m;
  t.provenance = CongruenceProvenance{l, QMat(), true, false};
  return t;
}

LinearMap congruence_map_real(const QMat& l) {
  const Index k = l.rows();
  if (l.cols() != k) throw DimensionError("congruence map: factor not square");
  const Index dim = k * (k + 1) / 2;
  QMat m(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    QVec basis = QVec::Zero(dim);
    basis(j) = 1;
    QMat image = l.transpose() * sym_from_coords(basis, k) * l;
    m.col(j) = sym_to_coords(image);
  }
  LinearMap t;
  t.matrix = m;
  t.provenance = CongruenceProvenance{CQMat(), l, false, false};
  return t;
}

LinearMap conjugate_map(const LinearMap& t, const QMat& s, const QMat& s_inv) {
  if (s.rows() != t.dim() || s_inv.rows() != t.dim())
    throw DimensionError("conjugate: dimension mismatch");
  LinearMap out;
  out.matrix = s * t.matrix * s_inv;
  out.provenance = t.provenance;
  if (out.provenance) {
    if (auto* cp = std::get_if<CongruenceProvenance>(&*out.provenance))
      cp->via_soc_iso = true;
  }
  return out;
}

LinearMap restrict_to_real_symmetric(const LinearMap& t) {
  if (t.dim() != 4)
    throw DimensionError("restriction: expected a Hermitian-coordinate 4x4 map");
  // Invariance of {q = 0}: the q-row couples only to q, and the q-column
  // feeds only the q-coordinate.
  for (Index j = 0; j < 3; ++j)
    if (t.matrix(3, j) != 0)
      throw Error("restriction: real-symmetric subspace is not invariant");
  LinearMap out;
  out.matrix = t.matrix.topLeftCorner(3, 3);
  if (t.provenance) {
    if (const auto* cp = std::get_if<CongruenceProvenance>(&*t.provenance)) {
      if (cp->complex_factor) {
        // The factor must itself be real for the restriction to be the real
        // congruence map.
        QMat lr(2, 2);
        bool real = true;
        for (Index i = 0; i < 2; ++i)
          for (Index j = 0; j < 2; ++j) {
            if (cp->L(i, j).imag() != 0) real = false;
            lr(i, j) = cp->L(i, j).real();
          }
        if (real) out.provenance = CongruenceProvenance{CQMat(), lr, false, cp->via_soc_iso};
      } else {
        out.provenance = *t.provenance;
      }
    }
  }
  return out;
}

}  // namespace conelab
