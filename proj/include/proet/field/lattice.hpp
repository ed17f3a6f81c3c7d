#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "proet/error.hpp"
#include "proet/field/matrix.hpp"
#include "proet/field/rational_function.hpp"

namespace proet {

// Full-rank A-lattice in C(t)^n, A the local ring at t = 0. The lattice is
// the A-span of the basis columns and is stored in its t-adic Hermite form:
// upper triangular, diagonal t^{d_i}, and every entry above the diagonal
// reduced modulo t^{d_i} A of its row (a truncated Laurent polynomial).
template <CoefficientField C>
class Lattice {
 public:
  using Scalar = RationalFunction<C>;

  std::size_t rank() const { return basis_.rows(); }
  const Matrix<Scalar>& basis() const { return basis_; }
  const std::vector<long>& exponents() const { return exponents_; }
  long exponent_sum() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0L); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

  template <CoefficientField D>
  friend Lattice<D> lattice_hermite(const Matrix<RationalFunction<D>>& basis);

 private:
  Lattice(Matrix<Scalar> basis, std::vector<long> exps) : basis_(std::move(basis)), exponents_(std::move(exps)) {}

  Matrix<Scalar> basis_;
  std::vector<long> exponents_;
};

// Canonical form under right multiplication by GL_n(A). Works row by row from
// the bottom: the column holding the least valuation in the current row is
// moved into the diagonal slot, scaled to a power of t, and used to clear the
// rest of the row with integral multiples.
template <CoefficientField C>
Lattice<C> lattice_hermite(const Matrix<RationalFunction<C>>& basis) {
  using Scalar = RationalFunction<C>;
  if (!basis.is_square() || basis.rows() == 0) throw SingularBasis("lattice basis must be square and nonempty");
  Matrix<Scalar> m = basis;
  const std::size_t n = m.rows();
  std::vector<long> exps(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t row = n - 1 - step;
    // Columns 0..row are still free.
    std::size_t best = n;
    long best_val = kInfiniteValuation;
    for (std::size_t c = 0; c <= row; ++c) {
      const long v = m(row, c).valuation();
      if (v < best_val) {
        best_val = v;
        best = c;
      }
    }
    if (best == n) throw SingularBasis("lattice basis is not invertible");
    if (best != row)
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, best), m(i, row));
    // Scale the pivot column by a unit so the pivot becomes t^v.
    const Scalar target = Scalar::t_power(m.zero().coefficient_zero(), best_val);
    const Scalar unit = target / m(row, row);
    for (std::size_t i = 0; i <= row; ++i) m(i, row) = m(i, row) * unit;
    exps[row] = best_val;
    for (std::size_t c = 0; c < row; ++c) {
      if (m(row, c).is_zero()) continue;
      const Scalar f = m(row, c) / m(row, row);  // integral by minimality
      for (std::size_t i = 0; i <= row; ++i) m(i, c) = m(i, c) - f * m(i, row);
    }
  }
  // Reduce above-diagonal entries; within column j go upward so that the
  // correction by column i only touches rows that are reduced later.
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      const Scalar& x = m(ii, j);
      if (x.is_zero()) continue;
      const Scalar reduced = reduce_mod_t_power(x, exps[ii]);
      if (reduced == x) continue;
      const Scalar f = (x - reduced) / m(ii, ii);  // integral
      for (std::size_t i = 0; i <= ii; ++i) m(i, j) = m(i, j) - f * m(i, ii);
    }
  }
  return Lattice<C>(std::move(m), std::move(exps));
}

// True iff every entry has nonnegative valuation.
template <CoefficientField C>
bool is_integral(const Matrix<RationalFunction<C>>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).valuation() < 0) return false;
  return true;
}

// Integral with integral inverse, i.e. an element of GL_n(A).
template <CoefficientField C>
bool is_integral_unit(const Matrix<RationalFunction<C>>& m) {
  if (!m.is_square() || !is_integral(m)) return false;
  const auto det = determinant(m);
  return !det.is_zero() && det.valuation() == 0;
}

using LatticeK = Lattice<Fp>;
using MatrixK = Matrix<K>;

}  // namespace proet
