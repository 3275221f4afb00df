#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "g2kit/errors.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

template <class T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

namespace detail {

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

// Elimination prefers pivots of least valuation so that multipliers stay integral.
inline std::int64_t pivot_weight(const Scalar& x) {
  if (!x.has_context()) return 0;
  return x.val();
}
template <class T>
std::int64_t pivot_weight(const T&) {
  return 0;
}

}  // namespace detail

template <class T>
struct Echelon {
  MatX<T> R;
  std::vector<int> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form over a field.
template <class T, class Derived>
Echelon<T> rref(const Eigen::MatrixBase<Derived>& m) {
  Echelon<T> out;
  out.R = m;
  MatX<T>& R = out.R;
  const int rows = R.rows(), cols = R.cols();
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int best = -1;
    std::int64_t w = 0;
    for (int r = row; r < rows; ++r) {
      if (detail::is_zero(R(r, c))) continue;
      std::int64_t wr = detail::pivot_weight(R(r, c));
      if (best < 0 || wr < w) {
        best = r;
        w = wr;
      }
    }
    if (best < 0) continue;
    if (best != row) R.row(best).swap(R.row(row));
    T piv_inv = T(1) / R(row, c);
    for (int j = 0; j < cols; ++j) R(row, j) = j == c ? T(1) : R(row, j) * piv_inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || detail::is_zero(R(r, c))) continue;
      T f = R(r, c);
      for (int j = 0; j < cols; ++j) R(r, j) = j == c ? T(0) : R(r, j) - f * R(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

template <class T, class Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<int>(rref<T>(m).pivots.size());
}

/// Basis (as columns) of the right kernel {x : m x = 0}.
template <class T, class Derived>
MatX<T> kernel(const Eigen::MatrixBase<Derived>& m) {
  Echelon<T> e = rref<T>(m);
  const int cols = m.cols();
  std::vector<bool> is_piv(cols, false);
  for (int c : e.pivots) is_piv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < cols; ++c)
    if (!is_piv[c]) free.push_back(c);
  MatX<T> K = MatX<T>::Zero(cols, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    K(free[k], k) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) K(e.pivots[r], k) = -e.R(r, free[k]);
  }
  return K;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class T, class DA, class DB>
std::optional<MatX<T>> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  MatX<T> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Echelon<T> e = rref<T>(aug);
  MatX<T> x = MatX<T>::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    x.row(e.pivots[r]) = e.R.row(r).tail(b.cols());
  }
  return x;
}

template <class T, class Derived>
MatX<T> invert(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  MatX<T> id = MatX<T>::Identity(m.rows(), m.cols());
  MatX<T> aug(m.rows(), 2 * m.cols());
  aug << m, id;
  Echelon<T> e = rref<T>(aug);
  if (static_cast<int>(e.pivots.size()) < m.rows() || e.pivots[m.rows() - 1] >= m.cols())
    throw SingularityError("matrix is not invertible");
  return e.R.rightCols(m.cols());
}

template <class T, class Derived>
T det(const Eigen::MatrixBase<Derived>& m) {
  MatX<T> R = m;
  const int n = R.rows();
  T d = T(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    std::int64_t w = 0;
    for (int r = c; r < n; ++r) {
      if (detail::is_zero(R(r, c))) continue;
      std::int64_t wr = detail::pivot_weight(R(r, c));
      if (best < 0 || wr < w) {
        best = r;
        w = wr;
      }
    }
    if (best < 0) return T(0);
    if (best != c) {
      R.row(best).swap(R.row(c));
      d = -d;
    }
    d = d * R(c, c);
    T inv = T(1) / R(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (detail::is_zero(R(r, c))) continue;
      T f = R(r, c) * inv;
      for (int j = c; j < n; ++j) R(r, j) = R(r, j) - f * R(c, j);
    }
  }
  return d;
}

/// Canonical basis (columns) of the column span: transpose of the nonzero rows of rref(bᵀ).
template <class T, class Derived>
MatX<T> column_echelon(const Eigen::MatrixBase<Derived>& b) {
  Echelon<T> e = rref<T>(b.transpose());
  return e.R.topRows(e.pivots.size()).transpose();
}

template <class T, class DA, class DB>
bool mat_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!detail::is_zero(T(a(i, j) - b(i, j)))) return false;
  return true;
}

template <class T, class Derived>
bool mat_is_zero(const Eigen::MatrixBase<Derived>& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!detail::is_zero(a(i, j))) return false;
  return true;
}

/// Field context of the first entry that carries one, or nullptr.
template <class Derived>
const FieldContext* context_of(const Eigen::MatrixBase<Derived>& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j).context()) return a(i, j).context();
  return nullptr;
}

}  // namespace g2kit
