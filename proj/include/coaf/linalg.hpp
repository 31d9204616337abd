#ifndef COAF_LINALG_HPP
#define COAF_LINALG_HPP

// Exact Gaussian elimination over a field. Eigen's decompositions pivot on
// magnitude and assume floating point, so they are not used for exact scalars.

#include "coaf/rational.hpp"

#include <optional>
#include <vector>

namespace coaf {

/// In-place reduced row echelon form; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> m) {
  return static_cast<Eigen::Index>(rref(m).size());
}

/// Rank of a list of equal-length vectors (as rows).
template <typename Scalar>
Eigen::Index rank(const std::vector<VectorX<Scalar>>& rows, Eigen::Index dim) {
  if (rows.empty()) return 0;
  MatrixX<Scalar> m(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return rank(std::move(m));
}

/// Basis of { x : m x = 0 }, one vector per free column.
template <typename Scalar>
std::vector<VectorX<Scalar>> nullspace(MatrixX<Scalar> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m(static_cast<Eigen::Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for square nonsingular a; nullopt when singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  return VectorX<Scalar>(aug.col(n));
}

/// Inverse of a square matrix; nullopt when singular.
template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& a) {
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return MatrixX<Scalar>(aug.rightCols(n));
}

/// Determinant by fraction-exact elimination.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c) == Scalar(0)) continue;
      const Scalar f = m(r, c) / m(c, c);
      for (Eigen::Index j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Dimension of the affine hull of a point set (-1 for the empty set).
template <typename Scalar>
Eigen::Index affine_dimension(const std::vector<VectorX<Scalar>>& points) {
  if (points.empty()) return -1;
  const Eigen::Index dim = points.front().size();
  std::vector<VectorX<Scalar>> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points.front());
  return rank(diffs, dim);
}

}  // namespace coaf

#endif  // COAF_LINALG_HPP
