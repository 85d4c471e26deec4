#ifndef PRIMSPEC_LINALG_HPP
#define PRIMSPEC_LINALG_HPP

#include <cmath>
#include <vector>

#include "primspec/errors.hpp"
#include "primspec/types.hpp"

namespace primspec {

// Dense elimination templated on the scalar so the same routines serve float
// mode (pivot-magnitude thresholding) and rational mode (exact fractions,
// pivot threshold zero).

namespace detail {

template <class T>
Index best_pivot_row(const Mat<T>& a, Index col, Index start) {
  if constexpr (is_exact_v<T>) {
    for (Index r = start; r < a.rows(); ++r)
      if (!(a(r, col) == T(0))) return r;
    return -1;
  } else {
    Index best = -1;
    double best_mag = 0;
    for (Index r = start; r < a.rows(); ++r) {
      double mag = std::fabs(scalar_ops<T>::to_double(a(r, col)));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    return best;
  }
}

}  // namespace detail

/// Reduced row echelon form in place. Returns the pivot columns.
template <class T>
std::vector<Index> rref(Mat<T>& a, const T& tol_pivot) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = detail::best_pivot_row(a, col, row);
    if (p < 0 || within(a(p, col), tol_pivot)) continue;
    if (p != row) a.row(p).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      if (!(a(r, col) == T(0))) a.row(r) -= a(r, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
Index rank(Mat<T> a, const T& tol_pivot) {
  return Index(rref(a, tol_pivot).size());
}

/// Basis of the nullspace of a, one vector per free column, from the rref.
template <class T>
std::vector<Vec<T>> kernel_basis(Mat<T> a, const T& tol_pivot) {
  const Index n = a.cols();
  std::vector<Index> pivots = rref(a, tol_pivot);
  std::vector<int> pivot_of_col(n, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);

  std::vector<Vec<T>> basis;
  for (Index col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec<T> v = Vec<T>::Zero(n);
    v(col) = T(1);
    for (size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -a(Index(i), col);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns of a spanning its column space (the pivot columns).
template <class T>
Mat<T> column_space_basis(const Mat<T>& a, const T& tol_pivot) {
  Mat<T> work = a;
  std::vector<Index> pivots = rref(work, tol_pivot);
  Mat<T> basis(a.rows(), Index(pivots.size()));
  for (size_t i = 0; i < pivots.size(); ++i) basis.col(Index(i)) = a.col(pivots[i]);
  return basis;
}

/// Solve a X = b for square a; throws SingularSolve on pivot breakdown.
template <class T>
Mat<T> solve_square(Mat<T> a, Mat<T> b, const T& tol_pivot) {
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DimensionMismatch("solve_square: shape");
  for (Index col = 0; col < n; ++col) {
    Index p = detail::best_pivot_row(a, col, col);
    if (p < 0 || within(a(p, col), tol_pivot))
      throw SingularSolve("solve_square: pivot below threshold at column " + std::to_string(col));
    if (p != col) {
      a.row(p).swap(a.row(col));
      b.row(p).swap(b.row(col));
    }
    T inv_piv = T(1) / a(col, col);
    a.row(col) *= inv_piv;
    b.row(col) *= inv_piv;
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      if (!(a(r, col) == T(0))) {
        b.row(r) -= a(r, col) * b.row(col);
        a.row(r) -= a(r, col) * a.row(col);
      }
    }
  }
  return b;
}

template <class T>
Mat<T> inverse(const Mat<T>& a, const T& tol_pivot) {
  return solve_square(a, Mat<T>(Mat<T>::Identity(a.rows(), a.rows())), tol_pivot);
}

/// Gram-Schmidt orthonormalization, dropping dependent vectors. Float only.
inline std::vector<Vec<double>> orthonormalize(const std::vector<Vec<double>>& vs,
                                               double tol = 1e-10) {
  std::vector<Vec<double>> basis;
  for (Vec<double> v : vs) {
    for (const auto& b : basis) v -= b.dot(v) * b;
    double norm = v.norm();
    if (norm > tol) basis.push_back(v / norm);
  }
  return basis;
}

}  // namespace primspec

#endif  // PRIMSPEC_LINALG_HPP
