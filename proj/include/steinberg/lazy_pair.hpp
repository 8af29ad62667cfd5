#pragma once

// The pair groupoid on the positive integers, materialized on demand. Its
// unit space is infinite, hence not compact in the discrete topology, and its
// Steinberg algebra is the non-unital algebra of finitely supported
// infinite matrices.

#include "steinberg/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace steinberg {

/// Morphism (row, col) of the lazy pair groupoid: dom = (col, col),
/// ran = (row, row), (i,j)(j,k) = (i,k). Indices start at 1.
struct PairMorphism {
  std::uint64_t row = 1, col = 1;
  friend auto operator<=>(const PairMorphism&, const PairMorphism&) = default;

  PairMorphism dom() const { return {col, col}; }
  PairMorphism ran() const { return {row, row}; }
  PairMorphism inv() const { return {col, row}; }
  bool is_unit() const { return row == col; }
};

inline std::optional<PairMorphism> compose(PairMorphism x, PairMorphism y) {
  if (x.col != y.row) return std::nullopt;
  return PairMorphism{x.row, y.col};
}

template <typename Scalar>
class LazyElement {
 public:
  using Terms = std::map<PairMorphism, Scalar>;

  LazyElement() = default;

  static LazyElement basis(PairMorphism x) {
    LazyElement e;
    e.add(x, Scalar(1));
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar operator()(PairMorphism x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LazyElement& add(PairMorphism x, const Scalar& c) {
    if (x.row == 0 || x.col == 0) throw std::invalid_argument("lazy pair groupoid indices start at 1");
    if (c == Scalar(0)) return *this;
    auto [it, fresh] = terms_.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
    return *this;
  }

  /// Largest index appearing in the support (0 for the zero element).
  std::uint64_t max_index() const {
    std::uint64_t m = 0;
    for (const auto& [x, c] : terms_) m = std::max({m, x.row, x.col});
    return m;
  }

  friend LazyElement operator+(LazyElement a, const LazyElement& b) {
    for (const auto& [x, c] : b.terms_) a.add(x, c);
    return a;
  }
  friend LazyElement operator-(LazyElement a, const LazyElement& b) {
    for (const auto& [x, c] : b.terms_) a.add(x, -c);
    return a;
  }
  friend bool operator==(const LazyElement&, const LazyElement&) = default;

 private:
  Terms terms_;
};

template <typename Scalar>
LazyElement<Scalar> convolve(const LazyElement<Scalar>& f, const LazyElement<Scalar>& g) {
  std::multimap<std::uint64_t, std::pair<PairMorphism, Scalar>> g_by_row;
  for (const auto& [y, b] : g.terms()) g_by_row.emplace(y.row, std::pair{y, b});
  LazyElement<Scalar> out;
  for (const auto& [x, a] : f.terms()) {
    auto [lo, hi] = g_by_row.equal_range(x.col);
    for (auto it = lo; it != hi; ++it) out.add(*compose(x, it->second.first), a * it->second.second);
  }
  return out;
}

template <typename Scalar>
LazyElement<Scalar> commutator(const LazyElement<Scalar>& f, const LazyElement<Scalar>& g) {
  return convolve(f, g) - convolve(g, f);
}

/// For nonzero f, the indicator of (j, k) where (i, j) is the largest
/// morphism of supp(f) and k is one past every index of supp(f). Then
/// (f*g)(i,k) = f(i,j) while (g*f)(i,k) = 0, so f is not central.
template <typename Scalar>
LazyElement<Scalar> find_noncentral_witness(const LazyElement<Scalar>& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero element is central");
  const PairMorphism last = f.terms().rbegin()->first;
  return LazyElement<Scalar>::basis({last.col, f.max_index() + 1});
}

/// Partition of the lazy unit space by parity: U1 = even indices, U2 = odd.
/// Every even unit reaches an odd one and conversely, so W is everything and
/// V is empty.
inline int parity_side(std::uint64_t index) { return index % 2 == 0 ? 1 : 2; }

/// Block of a lazy element: morphisms with ran in U_i and dom in U_j.
template <typename Scalar>
LazyElement<Scalar> lazy_block(const LazyElement<Scalar>& f, int i, int j) {
  LazyElement<Scalar> out;
  for (const auto& [x, c] : f.terms())
    if (parity_side(x.row) == i && parity_side(x.col) == j) out.add(x, c);
  return out;
}

/// Given f with nonzero diagonal blocks f11 + f22, returns g in A21 (ran odd,
/// dom even) with f*g != g*f, showing f is outside C(A21). Empty when
/// f11 + f22 = 0.
template <typename Scalar>
std::optional<LazyElement<Scalar>> find_a21_witness(const LazyElement<Scalar>& f) {
  const LazyElement<Scalar> diag = lazy_block(f, 1, 1) + lazy_block(f, 2, 2);
  if (diag.is_zero()) return std::nullopt;
  const PairMorphism x = diag.terms().begin()->first;
  std::uint64_t fresh = f.max_index() + 1;
  if (parity_side(x.row) == 1) {
    // x in U1 G U1: g = 1_(k, row) with k odd; (g*f)(k, col) = f(x), (f*g)(k, col) = 0.
    if (parity_side(fresh) != 2) ++fresh;
    return LazyElement<Scalar>::basis({fresh, x.row});
  }
  // x in U2 G U2: g = 1_(col, k) with k even; (f*g)(row, k) = f(x), (g*f)(row, k) = 0.
  if (parity_side(fresh) != 1) ++fresh;
  return LazyElement<Scalar>::basis({x.col, fresh});
}

}  // namespace steinberg
