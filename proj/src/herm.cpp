#include "conelab/herm.hpp"

namespace conelab {

CQMat herm_from_coords(const QVec& coords) {
  if (coords.size() != 4) throw DimensionError("herm_from_coords: expected 4 coordinates");
  CQMat a(2, 2);
  a(0, 0) = CRational(coords(0), 0);
  a(1, 1) = CRational(coords(1), 0);
  a(0, 1) = CRational(coords(2), coords(3));
  a(1, 0) = CRational(coords(2), -coords(3));
  return a;
}

QVec herm_to_coords(const CQMat& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("herm_to_coords: expected 2x2");
  if (a(0, 0).imag() != 0 || a(1, 1).imag() != 0 || a(0, 1).real() != a(1, 0).real() ||
      a(0, 1).imag() != -a(1, 0).imag())
    throw Error("herm_to_coords: matrix is not Hermitian");
  QVec c(4);
  c(0) = a(0, 0).real();
  c(1) = a(1, 1).real();
  c(2) = a(0, 1).real();
  c(3) = a(0, 1).imag();
  return c;
}

QMat sym_from_coords(const QVec& coords, Index k) {
  if (coords.size() != k * (k + 1) / 2)
    throw DimensionError("sym_from_coords: coordinate count does not match k");
  QMat a = QMat::Zero(k, k);
  for (Index i = 0; i < k; ++i) a(i, i) = coords(i);
  Index t = k;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) {
      a(i, j) = coords(t);
      a(j, i) = coords(t);
      ++t;
    }
  return a;
}

QVec sym_to_coords(const QMat& a) {
  const Index k = a.rows();
  if (a.cols() != k) throw DimensionError("sym_to_coords: matrix not square");
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      if (a(i, j) != a(j, i)) throw Error("sym_to_coords: matrix is not symmetric");
  QVec c(k * (k + 1) / 2);
  for (Index i = 0; i < k; ++i) c(i) = a(i, i);
  Index t = k;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) c(t++) = a(i, j);
  return c;
}

QVec herm_to_soc(const QVec& coords) {
  if (coords.size() != 4) throw DimensionError("herm_to_soc: expected 4 coordinates");
  QVec x(4);
  x(0) = (coords(0) + coords(1)) / 2;
  x(1) = (coords(0) - coords(1)) / 2;
  x(2) = coords(2);
  x(3) = coords(3);
  return x;
}

QVec soc_to_herm(const QVec& x) {
  if (x.size() != 4) throw DimensionError("soc_to_herm: expected 4 coordinates");
  QVec c(4);
  c(0) = x(0) + x(1);
  c(1) = x(0) - x(1);
  c(2) = x(2);
  c(3) = x(3);
  return c;
}

QVec sym2_to_soc(const QVec& coords) {
  if (coords.size() != 3) throw DimensionError("sym2_to_soc: expected 3 coordinates");
  QVec x(3);
  x(0) = (coords(0) + coords(1)) / 2;
  x(1) = (coords(0) - coords(1)) / 2;
  x(2) = coords(2);
  return x;
}

QVec soc_to_sym2(const QVec& x) {
  if (x.size() != 3) throw DimensionError("soc_to_sym2: expected 3 coordinates");
  QVec c(3);
  c(0) = x(0) + x(1);
  c(1) = x(0) - x(1);
  c(2) = x(2);
  return c;
}

QMat herm_to_soc_matrix() {
  QMat s = QMat::Zero(4, 4);
  s(0, 0) = Rational(1, 2);
  s(0, 1) = Rational(1, 2);
  s(1, 0) = Rational(1, 2);
  s(1, 1) = Rational(-1, 2);
  s(2, 2) = 1;
  s(3, 3) = 1;
  return s;
}

QMat sym2_to_soc_matrix() {
  QMat s = QMat::Zero(3, 3);
  s(0, 0) = Rational(1, 2);
  s(0, 1) = Rational(1, 2);
  s(1, 0) = Rational(1, 2);
  s(1, 1) = Rational(-1, 2);
  s(2, 2) = 1;
  return s;
}

}  // namespace conelab
