#pragma once

// Exact dense linear algebra over a field scalar. Every routine pivots on the
// first nonzero entry, so it is only meaningful for exact scalar types.

#include "nilsym/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nilsym {

template <class Scalar>
struct RowEchelon {
  DenseMatrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <class Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{input.eval(), {}};
  auto& m = out.reduced;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != r) {
      m.row(p).swap(m.row(r));
    }
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) {
      m(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) {
        continue;
      }
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(r, j) != 0) {
          m(i, j) -= f * m(r, j);
        }
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Basis of the row space, as the nonzero rows of the reduced echelon form.
template <class Derived>
DenseMatrix<typename Derived::Scalar> row_space_basis(const Eigen::MatrixBase<Derived>& m) {
  auto rref = row_echelon(m);
  return rref.reduced.topRows(rref.rank());
}

/// Right kernel {v : m v = 0}. Rows of the result are a basis in reduced
/// row-echelon form, which makes the basis unique for a given subspace.
template <class Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto rref = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : rref.pivots) {
    is_pivot[static_cast<std::size_t>(p)] = true;
  }
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(cols - rref.rank(), cols);
  Eigen::Index row = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) {
      continue;
    }
    basis(row, free) = Scalar(1);
    for (Eigen::Index i = 0; i < rref.rank(); ++i) {
      basis(row, rref.pivots[static_cast<std::size_t>(i)]) = -rref.reduced(i, free);
    }
    ++row;
  }
  return row_space_basis(basis);
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  DenseMatrix<Scalar> m = input.eval();
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) {
      ++p;
    }
    if (p == n) {
      return Scalar(0);
    }
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) {
        continue;
      }
      const Scalar f = m(i, c) / m(c, c);
      for (Eigen::Index j = c; j < n; ++j) {
        m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

/// Exact inverse, or nullopt when singular.
template <class Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> augmented(n, 2 * n);
  augmented << m, DenseMatrix<Scalar>::Identity(n, n);
  const auto rref = row_echelon(augmented);
  if (rref.rank() < n || rref.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return DenseMatrix<Scalar>(rref.reduced.rightCols(n));
}

}  // namespace nilsym
