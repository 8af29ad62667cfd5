#pragma once

// The boundary path groupoid G_E of an acyclic graph, its cylinder slices,
// the isomorphism pi_E : L_R(E) -> A_R(G_E), and the path-partition
// construction of maximal commutative subalgebras of L_R(E).

#include "steinberg/leavitt.hpp"
#include "steinberg/partition.hpp"

#include <map>
#include <set>

namespace steinberg {

/// For acyclic E every boundary path is finite and ends at a sink, so G_E is
/// the set of pairs (xi, |xi| - |eta|, eta) of boundary paths with a common
/// range: a disjoint union of pair groupoids, one per sink.
struct GraphGroupoid {
  GraphPtr graph;
  GroupoidPtr groupoid;
  std::vector<Path> boundary;  // the unit (gamma, 0, gamma) of boundary[i] is unit(i)

  MorphismId morphism(std::size_t xi, std::size_t eta) const { return index.at({xi, eta}); }
  MorphismId unit(std::size_t i) const { return morphism(i, i); }
  std::optional<std::size_t> boundary_index(const Path& p) const;
  /// (ran, dom) boundary indices of a morphism.
  std::pair<std::size_t, std::size_t> endpoints(MorphismId x) const { return ends.at(x.value); }

  std::map<std::pair<std::size_t, std::size_t>, MorphismId> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

/// Throws GraphError on graphs with a cycle.
GraphGroupoid graph_groupoid(const GraphPtr& graph);

/// Z(alpha, beta, F) = Z(alpha, beta) minus Z(alpha e, beta e) for e in F,
/// with F a set of edges leaving r(alpha).
struct CylinderSet {
  Path alpha, beta;
  std::set<EdgeId> f;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
  friend auto operator<=>(const CylinderSet&, const CylinderSet&) = default;
};

/// Throws GraphError when r(alpha) != r(beta) or F leaves the wrong vertex.
CylinderSet make_cylinder(const Graph& g, Path alpha, Path beta, std::set<EdgeId> f = {});
/// True when F removes every extension (r(alpha) regular and F = s^{-1}(r(alpha))).
bool is_empty_cylinder(const Graph& g, const CylinderSet& c);
std::string format_cylinder(const Graph& g, const CylinderSet& c);

/// {(alpha gamma, |alpha| - |beta|, beta gamma) : gamma boundary, first edge
/// of gamma not in F}.
MorphismSet cylinder_members(const GraphGroupoid& gg, const CylinderSet& c);

/// Linear extension of alpha beta^* -> 1_{Z(alpha, beta)}.
template <typename Scalar>
Element<Scalar> pi_E(const GraphGroupoid& gg, const LpaElement<Scalar>& x) {
  if (x.graph_ptr() != gg.graph) throw GraphError("element of a different graph");
  Element<Scalar> out(gg.groupoid);
  for (const auto& [t, c] : x.terms())
    for (MorphismId m : cylinder_members(gg, make_cylinder(*gg.graph, t.alpha, t.beta))) out.add(m, c);
  return out;
}

/// Rewrites a list of cylinders into pairwise disjoint cylinders with the
/// same union. Cylinders on the same pair merge to the intersection of their
/// F sets. When (alpha_j, beta_j) = (alpha_k delta, beta_k delta) with the
/// first edge d of delta outside F_k, Z_k is split into Z(alpha_k, beta_k,
/// F_k + {d}) and Z(alpha_k d, beta_k d); repeating this brings the two
/// cylinders onto the same pair or separates them. Empty cylinders are
/// dropped and the result is sorted.
std::vector<CylinderSet> disjointify(const Graph& g, std::vector<CylinderSet> cylinders);

/// U_i = union of Z(alpha, alpha) for alpha in P_i, as units of G_E.
UnitPartition path_partition(const GraphGroupoid& gg, const PathSetSpec& p1, const PathSetSpec& p2);

struct LpaTheoremReport {
  PConditionReport conditions;
  bool deferred = false;  // graph has a cycle: see commutes_up_to_degree
  // Acyclic case.
  std::optional<UnitPartition> partition;
  std::optional<MainTheoremReport> main;
  Index dim_t = 0;
  Index dim_s_image = 0;      // span of pi_E(alpha beta^*), alpha in P1, beta in P2
  bool s_image_is_a12 = false;
  bool verified() const { return !deferred && main && main->maximal() && s_image_is_a12; }
};

/// Checks the hypotheses (ring a domain, E downward directed, conditions
/// (1)-(4)); throws HypothesisError when one fails. For acyclic E it builds T
/// = Z + A12 in A_R(G_E), checks pi_E(<alpha beta^*>) = A12, and decides
/// maximality exactly. For E with a cycle the report is marked deferred.
LpaTheoremReport build_T_lpa(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                             bool ring_is_domain = true);

/// Generators of T to degree L: the identity (sum of vertices, central), then
/// the normal forms of alpha beta^* with alpha = a gamma, beta = b delta, a a
/// generator of P1, b one of P2, and |gamma|, |delta| <= L; sorted by total
/// length. The identity is the only center element used.
std::vector<LpaElement<Rational>> t_generators(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                                               std::size_t degree);

struct CommutationReport {
  std::size_t generators = 0;
  std::size_t pairs_checked = 0;
  bool all_commute = true;
  bool a_part_square_zero = true;  // every product of two non-identity generators is 0
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};

CommutationReport commutes_up_to_degree(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                                        std::size_t degree);

/// First generator of T (to degree L) that does not commute with `candidate`.
std::optional<LpaElement<Rational>> witness_noncommuting(const LpaElement<Rational>& candidate,
                                                         const PathSetSpec& p1, const PathSetSpec& p2,
                                                         std::size_t degree);

}  // namespace steinberg
