#pragma once

// Test-only oracles. They deliberately avoid the library's elimination and
// convolution code: matrices are plain nested vectors and elimination is
// textbook Gauss-Jordan over rationals.

#include "steinberg/element.hpp"

#include <string>
#include <vector>

namespace oracle {

using steinberg::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<Rational>(c, Rational(0))); }

inline std::size_t gauss_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Parses a pair-groupoid label "(i,j)" into zero-based (i-1, j-1).
inline std::pair<std::size_t, std::size_t> parse_pair(const std::string& label) {
  const auto comma = label.find(',');
  return {std::stoul(label.substr(1, comma - 1)) - 1, std::stoul(label.substr(comma + 1)) - 1};
}

/// Matrix of an element of the algebra of pair_groupoid(n): entry (i,j) is
/// the coefficient of morphism (i,j).
template <typename Scalar>
Dense to_matrix(const steinberg::Element<Scalar>& f, std::size_t n) {
  Dense m = zeros(n, n);
  for (const auto& [x, c] : f.terms()) {
    auto [i, j] = parse_pair(f.carrier().label(x));
    m[i][j] = steinberg::to_rational(c);
  }
  return m;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  Dense out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// dim {X : XA = AX for every A in mats} inside n x n matrices, from the
/// rank of the stacked linear maps X -> XA - AX written in the entries of X.
inline std::size_t commutant_dim(const std::vector<Dense>& mats, std::size_t n) {
  Dense system;
  for (const auto& a : mats) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (XA - AX)(r,c) = sum_k X(r,k) A(k,c) - A(r,k) X(k,c)
        std::vector<Rational> row(n * n, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += a[k][c];
          row[k * n + c] -= a[r][k];
        }
        system.push_back(std::move(row));
      }
  }
  return n * n - gauss_rank(system);
}

/// Brute-force convolution straight from the definition: sum over all pairs
/// (x, y) with x y = z, scanning the whole groupoid.
template <typename Scalar>
steinberg::Element<Scalar> naive_convolve(const steinberg::Element<Scalar>& f, const steinberg::Element<Scalar>& g) {
  const auto& G = f.carrier();
  steinberg::Element<Scalar> out(f.carrier_ptr());
  for (auto x : G.morphisms())
    for (auto y : G.morphisms())
      if (auto xy = G.compose(x, y)) out.add(*xy, f(x) * g(y));
  return out;
}

}  // namespace oracle
