#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proet/error.hpp"
#include "proet/field/scalar.hpp"

namespace proet {

namespace detail {
// Unqualified call so that overloads found by ADL at instantiation apply.
template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

// Dense row-major matrix over an exact field S. The stored zero carries the
// runtime field context so that empty results still know their field.
template <class S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& like)
      : rows_(rows), cols_(cols), zero_(zero_like(like)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const S& like) {
    Matrix m(n, n, like);
    const S one = one_like(like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix scalar(const S& value) {
    Matrix m(1, 1, value);
    m(0, 0) = value;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows, const S& like) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c, like);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const S& zero() const { return zero_; }
  S one() const { return one_like(zero_); }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1, zero_);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_, zero_); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (detail::scalar_is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const S& b = o(k, j);
          if (!detail::scalar_is_zero(b)) m(i, j) = m(i, j) + a * b;
        }
      }
    return m;
  }
  Matrix scaled(const S& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * c;
    return m;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const S&>()))> {
    using T = decltype(f(std::declval<const S&>()));
    Matrix<T> m(rows_, cols_, f(zero_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  S zero_;
  std::vector<S> data_;
};

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> t(m.cols(), m.rows(), m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

// Kronecker product; block (i, j) is a(i, j) * b.
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> m(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

// Block-diagonal sum.
template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> m(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Reduced row echelon form, pivoting only among the first pivot_cols
// columns; returns the pivot column of each nonzero row.
template <class S>
std::vector<std::size_t> rref_in_place(Matrix<S>& m, std::optional<std::size_t> pivot_cols = std::nullopt) {
  const std::size_t limit = pivot_cols.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < limit && row < m.rows(); ++c) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const S inv = one_like(m.zero()) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return rref_in_place(m).size();
}

// Basis of the right kernel {x : m x = 0} as column vectors. One vector per
// free column in increasing order, with a 1 in that free slot, so the basis
// is echelonized and deterministic.
template <class S>
std::vector<Matrix<S>> kernel_basis(const Matrix<S>& m) {
  Matrix<S> r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Matrix<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix<S> v(m.cols(), 1, m.zero());
    v(f, 0) = m.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
struct AffineSolution {
  Matrix<S> particular;               // one solution X of M X = rhs
  std::vector<Matrix<S>> kernel;      // basis of {x : M x = 0}
};

// Solve M X = rhs exactly. Returns nullopt when the system is inconsistent.
template <class S>
std::optional<AffineSolution<S>> solve_linear(const Matrix<S>& m, const Matrix<S>& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionMismatch("solve_linear: rhs rows differ from matrix rows");
  Matrix<S> aug(m.rows(), m.cols() + rhs.cols(), m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  Matrix<S> red = aug;
  const auto pivots = rref_in_place(red, m.cols());
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!is_zero(red(i, m.cols() + j))) return std::nullopt;
  Matrix<S> x(m.cols(), rhs.cols(), m.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = red(i, m.cols() + j);
  return AffineSolution<S>{std::move(x), kernel_basis(m)};
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  auto sol = solve_linear(m, Matrix<S>::identity(m.rows(), m.zero()));
  if (!sol || !sol->kernel.empty()) throw SingularMatrix("matrix is not invertible");
  return std::move(sol->particular);
}

template <class S>
S determinant(Matrix<S> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  S det = m.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return m.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const S inv = m.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

// m^e for any integer e; negative powers go through the inverse.
template <class S>
Matrix<S> power(const Matrix<S>& m, long e) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix<S> base = e < 0 ? inverse(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Matrix<S> result = Matrix<S>::identity(m.rows(), m.zero());
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.is_square() && rank(m) == m.rows();
}

}  // namespace proet
