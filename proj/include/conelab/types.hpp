#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "conelab/scalar.hpp"

namespace conelab {

using Index = Eigen::Index;

template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using QVec = VectorX<Rational>;
using QMat = MatrixX<Rational>;
using CQVec = VectorX<CRational>;
using CQMat = MatrixX<CRational>;
using DVec = Eigen::VectorXd;
using DMat = Eigen::MatrixXd;

inline DMat to_double(const QMat& a) {
  DMat r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = to_double(a(i, j));
  return r;
}

inline DVec to_double(const QVec& v) {
  DVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = to_double(v(i));
  return r;
}

inline bool is_nonneg(const QVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename S>
MatrixX<S> kronecker(const MatrixX<S>& a, const MatrixX<S>& b) {
  MatrixX<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// Column-stacking vectorization and its inverse.
template <typename S>
VectorX<S> vec_stack(const MatrixX<S>& a) {
  VectorX<S> r(a.rows() * a.cols());
  Index k = 0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) r(k++) = a(i, j);
  return r;
}

template <typename S>
MatrixX<S> unvec(const VectorX<S>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw DimensionError("unvec: size mismatch");
  MatrixX<S> r(rows, cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) r(i, j) = v(k++);
  return r;
}

// Lexicographic exact comparison, for deterministic ordering of rational vectors.
inline bool lex_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

}  // namespace conelab
