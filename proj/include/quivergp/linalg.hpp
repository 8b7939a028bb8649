#pragma once

// Exact dense elimination over an arbitrary field scalar. Eigen supplies the
// storage and arithmetic; pivoting is plain first-nonzero, which is the right
// choice for exact scalars (no stability concerns, and it keeps entry growth
// low on the mostly 0/1 incidence matrices this library produces).

#include <optional>
#include <vector>

#include "quivergp/rational.hpp"

namespace qgp {

// Reduced row echelon form in place; returns the pivot columns in order.
template <class Scalar>
std::vector<int> rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot_row = -1;
    for (int r = row; r < rows; ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) m.row(pivot_row).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (int c = col; c < cols; ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Scalar factor = m(r, col);
      if (factor == Scalar(0)) continue;
      for (int c = col; c < cols; ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
int rank_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Columns form a basis of the null space of m.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int cols = static_cast<int>(m.cols());
  const std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  const int nullity = cols - static_cast<int>(pivots.size());
  Mat basis = Mat::Zero(cols, nullity);
  int k = 0;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, k) = Scalar(1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
      basis(pivots[i], k) = -m(i, free_col);
    }
    ++k;
  }
  return basis;
}

// Solves A X = B exactly; nullopt when inconsistent. Free variables are 0.
template <class Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> solve_exact(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int rows = static_cast<int>(a.rows());
  const int acols = static_cast<int>(a.cols());
  const int bcols = static_cast<int>(b.cols());
  Mat aug(rows, acols + bcols);
  aug.leftCols(acols) = a;
  aug.rightCols(bcols) = b;
  const std::vector<int> pivots = rref_in_place(aug);
  int arank = 0;
  for (int p : pivots) {
    if (p < acols) ++arank;
  }
  if (arank != static_cast<int>(pivots.size())) return std::nullopt;  // pivot in augmented block
  Mat x = Mat::Zero(acols, bcols);
  for (int i = 0; i < arank; ++i) {
    x.row(pivots[i]) = aug.block(i, acols, 1, bcols);
  }
  return x;
}

template <class Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> inverse_of(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_exact<Scalar>(m, Mat::Identity(m.rows(), m.rows()));
  if (!x) return std::nullopt;
  if (rank_of<Scalar>(m) != static_cast<int>(m.rows())) return std::nullopt;
  return x;
}

// Indices of a maximal set of linearly independent columns, leftmost first.
template <class Scalar>
std::vector<int> independent_columns(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  return rref_in_place(m);
}

// Basis of the column space, taken from the original columns.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> column_space_basis(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const std::vector<int> cols = independent_columns<Scalar>(m);
  Mat basis(m.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) basis.col(i) = m.col(cols[i]);
  return basis;
}

// Horizontal concatenation; all blocks must share a row count.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hcat(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& blocks,
    int rows) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  int cols = 0;
  for (const auto& b : blocks) cols += static_cast<int>(b.cols());
  Mat out(rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += static_cast<int>(b.cols());
  }
  return out;
}

}  // namespace qgp
