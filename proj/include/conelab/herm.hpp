#pragma once

#include "conelab/cone.hpp"

namespace conelab {

// Coordinate conventions for matrix cones.
//
// Complex Hermitian 2x2 (ambient dim 4): coordinates (a, c, p, q) encode
//   [[a, p+iq], [p-iq, c]].
// Real symmetric k x k (ambient dim k(k+1)/2): the k diagonal entries first,
// then the strict upper triangle row by row, each coordinate the entry itself.
//
// The basis {E_ii; E_ij+E_ji; i(E_ij-E_ji)} is orthogonal and, unlike its
// unit-normalized variant, keeps every congruence map rational — the exact
// nilpotency and determinant certificates depend on that.

CQMat herm_from_coords(const QVec& coords);  // dim 4 -> Hermitian 2x2
QVec herm_to_coords(const CQMat& a);         // validates Hermitian-ness

QMat sym_from_coords(const QVec& coords, Index k);
QVec sym_to_coords(const QMat& a);

// Order isomorphism between Hermitian 2x2 and R^4 with the second-order cone:
// (a, c, p, q) -> ((a+c)/2, (a-c)/2, p, q).  PSD iff the image lies in
// SecondOrder(4), with SOC margin equal to lambda_min exactly.
QVec herm_to_soc(const QVec& coords);
QVec soc_to_herm(const QVec& x);

// Real symmetric 2x2 version, (a, c, p) -> ((a+c)/2, (a-c)/2, p).
QVec sym2_to_soc(const QVec& coords);
QVec soc_to_sym2(const QVec& x);

// Coordinate matrices of the isomorphisms (for conjugating linear maps).
QMat herm_to_soc_matrix();   // 4x4
QMat sym2_to_soc_matrix();   // 3x3

}  // namespace conelab
