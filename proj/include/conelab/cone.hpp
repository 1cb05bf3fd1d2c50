#pragma once

#include <optional>

#include "conelab/types.hpp"

namespace conelab {

enum class ConeKind { PolyhedralV, PolyhedralH, SecondOrder, Psd };
enum class MatrixField { Real, Complex };

constexpr Index kMaxAmbientDim = 16;

// A closed pointed convex cone in one of four concrete representations.
// Polyhedral cones carry both descriptions after construction: the generator
// matrix (columns) and the canonical dual rays (columns), so membership and
// Farkas witnesses never recompute the double description.
class Cone {
 public:
  // Generators are columns; they are kept as given (certificates index them).
  static Cone polyhedral_v(const QMat& generators);
  // Rows y meaning <y, x> >= 0; the V-description is derived at construction.
  static Cone polyhedral_h(const QMat& rows);
  static Cone second_order(Index n);
  static Cone psd(Index k, MatrixField field);

  ConeKind kind() const { return kind_; }
  Index ambient_dim() const { return ambient_; }

  bool polyhedral() const {
    return kind_ == ConeKind::PolyhedralV || kind_ == ConeKind::PolyhedralH;
  }

  // Polyhedral accessors.
  const QMat& generators() const { return generators_; }   // columns
  const QMat& ineq_rows() const { return ineq_rows_; }     // rows as given (H) or derived (V)
  const QMat& dual_rays() const { return dual_rays_; }     // columns, canonical
  bool simplicial() const { return gen_inverse_.has_value(); }
  const QMat& gen_inverse() const { return *gen_inverse_; }

  // Psd accessors.
  Index psd_k() const { return psd_k_; }
  MatrixField psd_field() const { return psd_field_; }

 private:
  Cone() = default;

  ConeKind kind_ = ConeKind::PolyhedralV;
  Index ambient_ = 0;
  QMat generators_;
  QMat ineq_rows_;
  QMat dual_rays_;
  std::optional<QMat> gen_inverse_;
  Index psd_k_ = 0;
  MatrixField psd_field_ = MatrixField::Real;
};

// Ambient coordinate dimension of the Psd(k, field) cone.
inline Index psd_ambient_dim(Index k, MatrixField field) {
  return field == MatrixField::Complex ? k * k : k * (k + 1) / 2;
}

}  // namespace conelab
