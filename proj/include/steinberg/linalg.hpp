#pragma once

// Exact dense linear algebra over the integers and rationals: fraction-free
// (Bareiss) elimination, kernels and reduced row echelon forms.

#include "steinberg/scalar.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace steinberg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Scales every row by the lcm of its denominators and divides by the gcd of
/// the result, giving primitive integer rows with the same row space.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (Index j = 0; j < m.cols(); ++j) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(m(i, j)));
    Integer gcd = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational scaled = m(i, j) * Rational(lcm);
      out(i, j) = boost::multiprecision::numerator(scaled);
      gcd = boost::multiprecision::gcd(gcd, out(i, j));
    }
    if (gcd > 1)
      for (Index j = 0; j < m.cols(); ++j) out(i, j) /= gcd;
  }
  return out;
}

struct EchelonForm {
  Matrix<Integer> rows;        // first rank() rows are the echelon rows
  std::vector<Index> pivots;   // pivot column of each echelon row

  Index rank() const { return Index(pivots.size()); }
};

/// Bareiss fraction-free forward elimination with row pivoting. Every entry
/// stays an exact minor of the input, so all divisions are exact.
inline EchelonForm fraction_free_echelon(Matrix<Integer> a) {
  EchelonForm result;
  Integer previous = 1;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Integer p = a(row, col);
    for (Index i = row + 1; i < a.rows(); ++i) {
      const Integer lead = a(i, col);
      for (Index j = col + 1; j < a.cols(); ++j) {
        Integer numerator = a(i, j) * p - lead * a(row, j);
        if (numerator % previous != 0) throw std::logic_error("Bareiss division not exact");
        a(i, j) = numerator / previous;
      }
      a(i, col) = 0;
    }
    previous = p;
    result.pivots.push_back(col);
    ++row;
  }
  result.rows = std::move(a);
  return result;
}

inline Index rank(const Matrix<Rational>& m) { return fraction_free_echelon(clear_denominators(m)).rank(); }

/// Basis of the right kernel {x : m x = 0}, one kernel vector per row of the
/// result. The vector for free column f has x_f = 1 and zeros at the other
/// free columns.
inline Matrix<Rational> kernel_basis(const Matrix<Rational>& m) {
  const EchelonForm ech = fraction_free_echelon(clear_denominators(m));
  const Index n = m.cols();
  std::vector<bool> is_pivot(std::size_t(n), false);
  for (Index p : ech.pivots) is_pivot[std::size_t(p)] = true;

  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[std::size_t(j)]) free_cols.push_back(j);

  Matrix<Rational> kernel = Matrix<Rational>::Zero(Index(free_cols.size()), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    kernel(Index(k), free_cols[k]) = 1;
    for (Index r = ech.rank() - 1; r >= 0; --r) {
      const Index pc = ech.pivots[std::size_t(r)];
      Rational acc = 0;
      for (Index j = pc + 1; j < n; ++j)
        if (ech.rows(r, j) != 0) acc += Rational(ech.rows(r, j)) * kernel(Index(k), j);
      kernel(Index(k), pc) = -acc / Rational(ech.rows(r, pc));
    }
  }
  return kernel;
}

/// Reduced row echelon form with zero rows dropped; pivots are normalized to
/// one, so two matrices have the same row space iff their results are equal.
inline Matrix<Rational> reduced_row_echelon(const Matrix<Rational>& m, std::vector<Index>* pivots_out = nullptr) {
  const EchelonForm ech = fraction_free_echelon(clear_denominators(m));
  Matrix<Rational> r(ech.rank(), m.cols());
  for (Index i = 0; i < ech.rank(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(ech.rows(i, j));

  for (Index i = ech.rank() - 1; i >= 0; --i) {
    const Index pc = ech.pivots[std::size_t(i)];
    const Rational inv = 1 / r(i, pc);
    for (Index j = pc; j < r.cols(); ++j) r(i, j) *= inv;
    for (Index k = 0; k < i; ++k) {
      const Rational factor = r(k, pc);
      if (factor == 0) continue;
      for (Index j = pc; j < r.cols(); ++j) r(k, j) -= factor * r(i, j);
    }
  }
  if (pivots_out) *pivots_out = ech.pivots;
  return r;
}

}  // namespace steinberg
