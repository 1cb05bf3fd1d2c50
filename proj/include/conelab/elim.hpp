#pragma once

#include <optional>

#include "conelab/types.hpp"

namespace conelab {

// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row by row.
inline int exact_rank(const QMat& a) {
  const Index m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) return 0;
  MatrixX<BigInt> w(m, n);
  for (Index i = 0; i < m; ++i) {
    BigInt l = 1;
    for (Index j = 0; j < n; ++j) l = lcm(l, denominator(a(i, j)));
    for (Index j = 0; j < n; ++j) w(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  BigInt prev = 1;
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index piv = -1;
    for (Index i = row; i < m; ++i)
      if (w(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) w.row(piv).swap(w.row(row));
    for (Index i = row + 1; i < m; ++i) {
      for (Index j = col + 1; j < n; ++j)
        w(i, j) = (w(row, col) * w(i, j) - w(i, col) * w(row, j)) / prev;
      w(i, col) = 0;
    }
    prev = w(row, col);
    ++row;
  }
  return static_cast<int>(row);
}

inline Rational exact_det(QMat a) {
  if (a.rows() != a.cols()) throw DimensionError("det: matrix not square");
  const Index n = a.rows();
  Rational det = 1;
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index i = col; i < n; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      Rational f = a(i, col) / a(col, col);
      for (Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<Index> rref_in_place(QMat& a) {
  const Index m = a.rows(), n = a.cols();
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index piv = -1;
    for (Index i = row; i < m; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Index i = 0; i < m; ++i) {
      if (i == row || a(i, col) == 0) continue;
      a.row(i) -= a(i, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Unique solution of A x = b when A has full column rank and the system is
// consistent; nullopt otherwise.
inline std::optional<QVec> solve_unique(const QMat& a, const QVec& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: rhs size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref_in_place(aug);
  // Inconsistent if the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (static_cast<Index>(pivots.size()) != a.cols()) return std::nullopt;
  QVec x(a.cols());
  for (Index i = 0; i < a.cols(); ++i) x(i) = aug(i, a.cols());
  return x;
}

inline std::optional<QMat> exact_inverse(const QMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  const Index n = a.rows();
  QMat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = QMat::Identity(n, n);
  auto pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return QMat(aug.rightCols(n));
}

// Basis of the nullspace of A, as columns; empty (n x 0) matrix if trivial.
inline QMat exact_nullspace(const QMat& a) {
  QMat r = a;
  auto pivots = rref_in_place(r);
  const Index n = a.cols();
  std::vector<Index> free_cols;
  {
    std::vector<bool> is_pivot(n, false);
    for (Index p : pivots) is_pivot[p] = true;
    for (Index j = 0; j < n; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
  }
  QMat basis = QMat::Zero(n, static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
    Index fc = free_cols[k];
    basis(fc, k) = 1;
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
      basis(pivots[i], k) = -r(i, fc);
  }
  return basis;
}

}  // namespace conelab
