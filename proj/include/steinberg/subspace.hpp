#pragma once

// Finite-dimensional subspaces of A_R(G) in canonical reduced echelon form,
// and the exact commutant computations built on them.

#include "steinberg/element.hpp"
#include "steinberg/linalg.hpp"

#include <optional>
#include <vector>

namespace steinberg {

/// A subspace of the (finite-dimensional) algebra over the rationals, stored
/// as the reduced row echelon form of its spanning vectors. Columns follow
/// the morphism order, so two subspaces are equal iff their forms agree.
class SubspaceBasis {
 public:
  SubspaceBasis(GroupoidPtr carrier, const Matrix<Rational>& rows) : carrier_(std::move(carrier)) {
    if (Index(carrier_->size()) != rows.cols()) throw AlgebraError("basis width does not match the carrier");
    rref_ = reduced_row_echelon(rows, &pivots_);
  }

  template <typename Scalar>
  static SubspaceBasis span(GroupoidPtr carrier, const std::vector<Element<Scalar>>& elements) {
    Matrix<Rational> rows = Matrix<Rational>::Zero(Index(elements.size()), Index(carrier->size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].carrier_ptr() != carrier) throw AlgebraError("spanning element over a different groupoid");
      for (const auto& [x, c] : elements[i].terms()) rows(Index(i), Index(x.value)) = to_rational(c);
    }
    return SubspaceBasis(std::move(carrier), rows);
  }

  static SubspaceBasis full(GroupoidPtr carrier) {
    const Index n = Index(carrier->size());
    return SubspaceBasis(std::move(carrier), Matrix<Rational>::Identity(n, n));
  }

  static SubspaceBasis zero(GroupoidPtr carrier) {
    const Index n = Index(carrier->size());
    return SubspaceBasis(std::move(carrier), Matrix<Rational>(0, n));
  }

  const GroupoidPtr& carrier_ptr() const { return carrier_; }
  Index dim() const { return rref_.rows(); }
  const Matrix<Rational>& rref() const { return rref_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  std::vector<Element<Rational>> elements() const {
    std::vector<Element<Rational>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(row_element(rref_, i));
    return out;
  }

  /// Basis rows scaled to primitive integer vectors (integer mode output).
  std::vector<Element<Integer>> integral_elements() const {
    const Matrix<Integer> z = clear_denominators(rref_);
    std::vector<Element<Integer>> out;
    for (Index i = 0; i < z.rows(); ++i) {
      Element<Integer> e(carrier_);
      for (Index j = 0; j < z.cols(); ++j) e.add(MorphismId{std::uint32_t(j)}, z(i, j));
      out.push_back(std::move(e));
    }
    return out;
  }

  template <typename Scalar>
  bool contains(const Element<Scalar>& f) const {
    if (f.carrier_ptr() != carrier_) throw AlgebraError("element over a different groupoid");
    RowVector<Rational> v = RowVector<Rational>::Zero(rref_.cols());
    for (const auto& [x, c] : f.terms()) v(Index(x.value)) = to_rational(c);
    for (Index i = 0; i < dim(); ++i) {
      const Rational lead = v(pivots_[std::size_t(i)]);
      if (lead != 0) v -= lead * rref_.row(i);
    }
    for (Index j = 0; j < v.cols(); ++j)
      if (v(j) != 0) return false;
    return true;
  }

  bool contains(const SubspaceBasis& other) const {
    for (const auto& e : other.elements())
      if (!contains(e)) return false;
    return true;
  }

  /// First basis element of this subspace that is not in `other`.
  std::optional<Element<Rational>> first_outside(const SubspaceBasis& other) const {
    for (const auto& e : elements())
      if (!other.contains(e)) return e;
    return std::nullopt;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.carrier_ == b.carrier_ && a.rref_.rows() == b.rref_.rows() && a.rref_ == b.rref_;
  }

  friend SubspaceBasis operator+(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.carrier_ != b.carrier_) throw AlgebraError("sum of subspaces over different groupoids");
    Matrix<Rational> stacked(a.dim() + b.dim(), a.rref_.cols());
    stacked.topRows(a.dim()) = a.rref_;
    stacked.bottomRows(b.dim()) = b.rref_;
    return SubspaceBasis(a.carrier_, stacked);
  }

 private:
  Element<Rational> row_element(const Matrix<Rational>& m, Index i) const {
    Element<Rational> e(carrier_);
    for (Index j = 0; j < m.cols(); ++j) e.add(MorphismId{std::uint32_t(j)}, m(i, j));
    return e;
  }

  GroupoidPtr carrier_;
  Matrix<Rational> rref_;
  std::vector<Index> pivots_;
};

/// {f in span(ambient) : f*s = s*f for all s in S}. The unknowns are the
/// coordinates of f in the ambient basis; the commutator conditions for all
/// of S are stacked into one |S||G| x dim(ambient) system and solved exactly
/// over the rationals.
template <RationalEmbeddable Scalar>
SubspaceBasis centralizer_basis(const std::vector<Element<Scalar>>& s, const SubspaceBasis& ambient) {
  const auto& carrier = ambient.carrier_ptr();
  const Index n = Index(carrier->size());
  const auto basis = ambient.elements();
  Matrix<Rational> system = Matrix<Rational>::Zero(Index(s.size()) * n, ambient.dim());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Element<Rational> si = element_cast<Rational>(s[i]);
    if (si.carrier_ptr() != carrier) throw AlgebraError("centralizer input over a different groupoid");
    for (Index k = 0; k < ambient.dim(); ++k) {
      const auto comm = commutator(basis[std::size_t(k)], si);
      for (const auto& [z, c] : comm.terms()) system(Index(i) * n + z.value, k) = c;
    }
  }

  const Matrix<Rational> kernel = kernel_basis(system);
  Matrix<Rational> rows = Matrix<Rational>::Zero(kernel.rows(), n);
  for (Index r = 0; r < kernel.rows(); ++r)
    for (Index k = 0; k < kernel.cols(); ++k)
      if (kernel(r, k) != 0) rows.row(r) += kernel(r, k) * ambient.rref().row(k);
  return SubspaceBasis(carrier, rows);
}

/// Class sums of the conjugacy classes: a basis of the center.
inline SubspaceBasis center_basis(const GroupoidPtr& g) {
  std::vector<Element<Rational>> sums;
  for (const auto& cls : conjugacy_classes(*g))
    sums.push_back(subset_sum<Rational>(g, MorphismSet(cls.begin(), cls.end())));
  return SubspaceBasis::span(g, sums);
}

/// Brute-force center: the commutant of the whole algebra.
inline SubspaceBasis center_by_commutant(const GroupoidPtr& g) {
  const auto full = SubspaceBasis::full(g);
  return centralizer_basis(full.elements(), full);
}

class NonCommutativeError : public AlgebraError {
 public:
  NonCommutativeError(Element<Rational> a, Element<Rational> b)
      : AlgebraError("subspace is not commutative"), first(std::move(a)), second(std::move(b)) {}
  Element<Rational> first, second;
};

struct MaximalityResult {
  bool maximal = false;
  Index dim_subalgebra = 0;
  Index dim_centralizer = 0;
  std::optional<Element<Rational>> witness;  // element of C(T) outside T
};

/// Commutative span(T) is maximal commutative in span(ambient) iff it is its
/// own centralizer there.
inline MaximalityResult is_maximal_commutative(const SubspaceBasis& t, const SubspaceBasis& ambient) {
  if (!ambient.contains(t)) throw AlgebraError("subspace is not contained in the ambient subspace");
  const auto gens = t.elements();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(gens[i], gens[j]).is_zero()) throw NonCommutativeError(gens[i], gens[j]);

  const SubspaceBasis c = centralizer_basis(gens, ambient);
  MaximalityResult result;
  result.dim_subalgebra = t.dim();
  result.dim_centralizer = c.dim();
  result.witness = c.first_outside(t);
  result.maximal = !result.witness.has_value();
  return result;
}

}  // namespace steinberg
