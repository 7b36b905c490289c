#ifndef RANKONE_LINALG_HPP
#define RANKONE_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rankone/errors.hpp"
#include "rankone/field.hpp"
#include "rankone/poly.hpp"

namespace rankone {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <ExactField K>
using Mat = DenseMatrix<typename K::Scalar>;

template <ExactField K>
using Vec = DenseVector<typename K::Scalar>;

// Constructors. These go through the field so prime-field entries carry
// their modulus; Eigen's own Zero()/Identity() produce bare literals.

template <ExactField K>
Mat<K> zeros(const K& k, Eigen::Index rows, Eigen::Index cols) {
  return Mat<K>::Constant(rows, cols, k.zero());
}

template <ExactField K>
Vec<K> zero_vector(const K& k, Eigen::Index n) {
  return Vec<K>::Constant(n, k.zero());
}

template <ExactField K>
Mat<K> identity(const K& k, Eigen::Index n) {
  Mat<K> out = zeros(k, n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = k.one();
  return out;
}

template <ExactField K>
Vec<K> unit_vector(const K& k, Eigen::Index n, Eigen::Index i) {
  Vec<K> out = zero_vector(k, n);
  out(i) = k.one();
  return out;
}

/// r x r block with `eigenvalue` on the diagonal and ones on the superdiagonal.
template <ExactField K>
Mat<K> jordan_block(const K& k, const typename K::Scalar& eigenvalue, Eigen::Index r) {
  Mat<K> out = zeros(k, r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    out(i, i) = eigenvalue;
    if (i + 1 < r) out(i, i + 1) = k.one();
  }
  return out;
}

template <ExactField K>
Mat<K> block_diagonal(const K& k, const std::vector<Mat<K>>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat<K> out = zeros(k, n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

template <class S>
DenseMatrix<S> outer(const DenseVector<S>& v, const DenseVector<S>& w) {
  return v * w.transpose();
}

template <class Derived, class Other>
bool mat_equal(const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<Other>& y) {
  return x.rows() == y.rows() && x.cols() == y.cols() && (x.array() == y.array()).all();
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (!x(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class S>
DenseMatrix<S> mat_mul(const DenseMatrix<S>& x, const DenseMatrix<S>& y) {
  if (x.cols() != y.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  return x * y;
}

template <ExactField K>
Mat<K> mat_pow(const K& k, const Mat<K>& x, std::size_t e) {
  Mat<K> out = identity(k, x.rows());
  for (std::size_t i = 0; i < e; ++i) out = out * x;
  return out;
}

/// Reduced row echelon form and its pivot columns.
template <class S>
struct Echelon {
  DenseMatrix<S> reduced;
  std::vector<Eigen::Index> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <class S>
Echelon<S> row_echelon(DenseMatrix<S> x) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < x.cols() && row < x.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < x.rows() && x(piv, col).is_zero()) ++piv;
    if (piv == x.rows()) continue;
    x.row(row).swap(x.row(piv));
    const auto inv = invert(x(row, col));
    for (Eigen::Index j = col; j < x.cols(); ++j) x(row, j) *= inv;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (i == row || x(i, col).is_zero()) continue;
      const auto f = x(i, col);
      for (Eigen::Index j = col; j < x.cols(); ++j) x(i, j) -= f * x(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(x), std::move(pivots)};
}

template <class S>
std::size_t mat_rank(const DenseMatrix<S>& x) {
  return row_echelon(x).pivots.size();
}

/// Columns form a basis of the null space of x, one per free column of the
/// reduced echelon form, in column order.
template <ExactField K>
Mat<K> kernel_basis(const K& k, const Mat<K>& x) {
  const auto e = row_echelon(x);
  std::vector<bool> is_pivot(static_cast<std::size_t>(x.cols()), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Mat<K> out = zeros(k, x.cols(), x.cols() - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < x.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out(f, col) = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      out(e.pivots[r], col) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    ++col;
  }
  return out;
}

/// Throws PreconditionError if x is singular or not square.
template <ExactField K>
Mat<K> mat_inverse(const K& k, const Mat<K>& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("mat_inverse: matrix is not square");
  const Eigen::Index n = x.rows();
  Mat<K> aug(n, 2 * n);
  aug << x, identity(k, n);
  const auto e = row_echelon(std::move(aug));
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw PreconditionError("mat_inverse: matrix is singular");
  }
  return e.reduced.rightCols(n);
}

/// Determinant by elimination with exact division.
template <ExactField K>
typename K::Scalar determinant(const K& k, Mat<K> x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("determinant: matrix is not square");
  typename K::Scalar det = k.one();
  const Eigen::Index n = x.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && x(piv, col).is_zero()) ++piv;
    if (piv == n) return k.zero();
    if (piv != col) {
      x.row(col).swap(x.row(piv));
      det = -det;
    }
    det *= x(col, col);
    const auto inv = invert(x(col, col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (x(i, col).is_zero()) continue;
      const auto f = x(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) x(i, j) -= f * x(col, j);
    }
  }
  return det;
}

/// det(tI - x) by Berkowitz's division-free recurrence, so it is valid in
/// every characteristic.
///
/// With x_m the leading m x m block and the next row/column split as
/// [[x_m, c], [r, a]], the descending coefficient vector of the (m+1)-th
/// principal characteristic polynomial is T * (previous vector), where T is
/// the lower-triangular Toeplitz matrix with first column
/// (1, -a, -r c, -r x_m c, ..., -r x_m^{m-1} c).
template <ExactField K>
Poly<K> charpoly(const K& k, const Mat<K>& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("charpoly: matrix is not square");
  const Eigen::Index n = x.rows();
  using Scalar = typename K::Scalar;

  std::vector<Scalar> desc{k.one()};
  for (Eigen::Index m = 0; m < n; ++m) {
    std::vector<Scalar> toeplitz(static_cast<std::size_t>(m) + 2, k.zero());
    toeplitz[0] = k.one();
    toeplitz[1] = -x(m, m);
    Vec<K> v = x.col(m).head(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Scalar dot = k.zero();
      for (Eigen::Index j = 0; j < m; ++j) dot += x(m, j) * v(j);
      toeplitz[static_cast<std::size_t>(i) + 2] = -dot;
      if (i + 1 < m) v = (x.topLeftCorner(m, m) * v).eval();
    }
    std::vector<Scalar> next(desc.size() + 1, k.zero());
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < desc.size(); ++j) next[i] += toeplitz[i - j] * desc[j];
    }
    desc = std::move(next);
  }
  return Poly<K>(k, {desc.rbegin(), desc.rend()});
}

/// [rank((a - shift I)^e) for e = 0..max_power]
template <ExactField K>
std::vector<std::size_t> rank_sequence(const K& k, const Mat<K>& a, const typename K::Scalar& shift,
                                       std::size_t max_power) {
  if (a.rows() != a.cols()) throw DimensionMismatch("rank_sequence: matrix is not square");
  const Mat<K> shifted = a - shift * identity(k, a.rows());
  std::vector<std::size_t> out{static_cast<std::size_t>(a.rows())};
  Mat<K> power = identity(k, a.rows());
  for (std::size_t e = 1; e <= max_power; ++e) {
    power = power * shifted;
    out.push_back(mat_rank(power));
  }
  return out;
}

}  // namespace rankone

#endif  // RANKONE_LINALG_HPP
