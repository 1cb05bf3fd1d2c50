#pragma once

#include <variant>

#include "conelab/types.hpp"

namespace conelab {

// The map was built as A -> L* A L on matrix coordinates (exactly positive on
// a PSD cone).  When via_soc_iso is set, the matrix acts on second-order-cone
// coordinates, conjugated through the order isomorphism.
struct CongruenceProvenance {
  CQMat L;            // complex factor (2x2) when complex_factor
  QMat L_real;        // real factor (k x k) otherwise
  bool complex_factor = false;
  bool via_soc_iso = false;
};

// The map was built as A -> L A R on vectorized matrix space.
struct TwoSidedProvenance {
  QMat L, R;
};

using MapProvenance = std::variant<CongruenceProvenance, TwoSidedProvenance>;

struct LinearMap {
  QMat matrix;
  std::optional<MapProvenance> provenance;

  Index dim() const { return matrix.rows(); }
};

LinearMap map_from_matrix(const QMat& m);
LinearMap identity_map(Index n);

QVec apply(const LinearMap& t, const QVec& v);

// Lift of A -> L A R to column-stacked coordinates: matrix = R^T (x) L.
LinearMap lift_two_sided(const QMat& l, const QMat& r);

// A -> L* A L on Hermitian 2x2 coordinates (a, c, p, q); real 4x4 matrix.
LinearMap congruence_map(const CQMat& l);

// A -> L^T A L on real symmetric k x k coordinates.
LinearMap congruence_map_real(const QMat& l);

// S T S^{-1} with provenance carried over (used for the SOC-coordinate view
// of congruence maps).
LinearMap conjugate_map(const LinearMap& t, const QMat& s, const QMat& s_inv);

// Restriction of a Hermitian-coordinate map to the real-symmetric subspace
// (a, c, p); throws unless the subspace q = 0 is exactly invariant.
LinearMap restrict_to_real_symmetric(const LinearMap& t);

}  // namespace conelab
