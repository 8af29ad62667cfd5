#pragma once

// Maximal commutative subalgebras from a two-set partition of the unit space:
// the derived sets U_ij, the 2x2 block decomposition of A_R(G), and executable
// checks of every intermediate statement leading to T = Z(A_R(G)) + A21.

#include "steinberg/subspace.hpp"

#include <array>
#include <random>
#include <string>

namespace steinberg {

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// U1, U2: disjoint, nonempty, covering the unit space.
struct UnitPartition {
  MorphismSet u1, u2;

  const MorphismSet& side(int i) const { return i == 1 ? u1 : u2; }
};

/// Throws HypothesisError when the sets are not a partition of the units into
/// two nonempty parts.
UnitPartition make_partition(const Groupoid& g, MorphismSet u1, MorphismSet u2);
inline UnitPartition swapped(const UnitPartition& p) { return {p.u2, p.u1}; }

/// Every partition of the units into two nonempty sides, U1 given by the
/// bitmask over g.units() (masks 1 .. 2^n - 2).
std::vector<UnitPartition> all_partitions(const Groupoid& g);

struct DerivedPartition {
  MorphismSet u11, u12, u21, u22;
  MorphismSet v;  // U11 u U22
  MorphismSet w;  // U12 u U21
};

/// U12 = U1 n ran(dom^{-1}(U2)), U11 = U1 \ U12, and symmetrically.
DerivedPartition derive(const Groupoid& g, const UnitPartition& p);

/// U_i G U_j = {x : ran(x) in U_i, dom(x) in U_j}.
MorphismSet double_coset(const Groupoid& g, const MorphismSet& ui, const MorphismSet& uj);

struct InteriorLemmaResult {
  bool v_empty = false;      // discrete topology: the interior of V is V
  bool w_stable = false;     // dom(x) in W and dom(x) = ran(y) imply dom(xy) in W
  std::optional<std::pair<MorphismId, MorphismId>> counterexample;
};

InteriorLemmaResult check_interior_lemma(const Groupoid& g, const DerivedPartition& dp);

/// Reason the finite prime hypotheses fail, if they do: the ring must be a
/// domain, G topologically transitive, and (finite case) isotropy trivial.
std::optional<std::string> prime_hypothesis_failure(const Groupoid& g, bool ring_is_domain);
void require_prime(const Groupoid& g, bool ring_is_domain);

template <typename Scalar>
struct BlockDecomposition {
  // blocks[i-1][j-1] = 1_{U_i} f 1_{U_j}
  std::array<std::array<Element<Scalar>, 2>, 2> blocks;

  const Element<Scalar>& operator()(int i, int j) const { return blocks[std::size_t(i - 1)][std::size_t(j - 1)]; }
  Element<Scalar> sum() const { return blocks[0][0] + blocks[0][1] + blocks[1][0] + blocks[1][1]; }
  Element<Scalar> diagonal() const { return blocks[0][0] + blocks[1][1]; }
};

/// f_ij = 1_{U_i} * f * 1_{U_j}, evaluated through the closed-form slice
/// actions (U_i is a slice of units).
template <typename Scalar>
BlockDecomposition<Scalar> block_decompose(const Element<Scalar>& f, const UnitPartition& p) {
  const Groupoid& g = f.carrier();
  const std::array<Slice, 2> sides{Slice::make(g, p.u1), Slice::make(g, p.u2)};
  auto block = [&](int i, int j) {
    return mul_indicator_right(mul_indicator_left(sides[std::size_t(i - 1)], f), sides[std::size_t(j - 1)]);
  };
  return {{{{block(1, 1), block(1, 2)}, {block(2, 1), block(2, 2)}}}};
}

/// Indicators of single morphisms in U_i G U_j: a spanning set of A_ij.
std::vector<Element<Rational>> block_spanning_set(const GroupoidPtr& g, const UnitPartition& p, int i, int j);
SubspaceBasis block_subspace(const GroupoidPtr& g, const UnitPartition& p, int i, int j);

struct BlockCalculusResult {
  bool holds = true;
  std::size_t products_checked = 0;
  std::size_t nonzero_products = 0;
  std::string failure;  // empty when holds
};

/// A_ij A_jk within A_ik and A_ij A_kl = 0 for j != k, on spanning sets.
BlockCalculusResult check_block_calculus(const GroupoidPtr& g, const UnitPartition& p);

struct CenterClassResult {
  std::size_t checked = 0;
  std::size_t central = 0;
  std::optional<Element<Rational>> discrepancy;
  bool holds() const { return !discrepancy.has_value(); }
};

/// Compares membership in the center with being a class function on
/// dom^{-1}(W), over every single-morphism indicator, every class sum, and
/// `random_count` seeded random elements (half of them central plus zero or
/// a perturbation).
CenterClassResult center_iff_class_on_w(const GroupoidPtr& g, const UnitPartition& p, std::uint64_t seed,
                                        std::size_t random_count, bool ring_is_domain = true);

struct LemmaItem {
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;  // first failure
};

struct TechnicalLemmaReport {
  SubspaceBasis centralizer;       // C(A21)
  std::array<LemmaItem, 5> items;  // items (1)-(5); (6) lives on the lazy family
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Computes C(A21) exactly, then checks items (1)-(5) for every basis element
/// and for the sum of all basis elements.
TechnicalLemmaReport technical_lemma_suite(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain = true);

/// Checks items (1)-(5) for one element f of C(A21).
void check_lemma_items(const Element<Rational>& f, const UnitPartition& p, const DerivedPartition& dp,
                       std::array<LemmaItem, 5>& items);

struct MaxCommCandidate {
  SubspaceBasis basis;  // Z(A_R(G)) + A21
};

MaxCommCandidate build_t(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain = true);

struct MainTheoremReport {
  Index dim_center = 0;
  Index dim_a21 = 0;
  MaximalityResult maximality;
  bool maximal() const { return maximality.maximal; }
};

MainTheoremReport verify_main_theorem(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain = true);

}  // namespace steinberg
