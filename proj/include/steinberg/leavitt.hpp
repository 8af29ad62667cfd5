#pragma once

// Leavitt path algebra arithmetic. Elements are combinations of monomials
// alpha beta^* kept in the normal form where no monomial has alpha and beta
// both ending in the special edge of the same regular vertex; (CK2) at that
// vertex is used as the rewrite rule
//   (alpha g)(beta g)^* -> alpha beta^* - sum_{e in s^{-1}(v), e != g} (alpha e)(beta e)^*.

#include "steinberg/graph.hpp"
#include "steinberg/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace steinberg {

/// alpha beta^* with r(alpha) = r(beta).
struct LpaTerm {
  Path alpha, beta;

  friend bool operator==(const LpaTerm&, const LpaTerm&) = default;
  friend auto operator<=>(const LpaTerm&, const LpaTerm&) = default;

  LpaTerm star() const { return {beta, alpha}; }
};

/// Throws GraphError when the ranges differ.
LpaTerm make_term(const Path& alpha, const Path& beta);

bool is_normal(const Graph& g, const LpaTerm& t);
/// Normal form of a single monomial. Every coefficient is +1 or -1.
std::map<LpaTerm, std::int64_t> reduce_term(const Graph& g, const LpaTerm& t);
/// One application of the rewrite rule to a monomial that is not normal.
std::vector<std::pair<LpaTerm, std::int64_t>> rewrite_once(const Graph& g, const LpaTerm& t);
/// (alpha beta^*)(gamma delta^*) before normalization: alpha epsilon delta^*
/// when gamma = beta epsilon, alpha (delta epsilon)^* when beta = gamma
/// epsilon, and zero otherwise.
std::optional<LpaTerm> multiply_terms(const LpaTerm& x, const LpaTerm& y);

std::string format_term(const Graph& g, const LpaTerm& t);

template <typename Scalar>
class LpaElement {
 public:
  using Terms = std::map<LpaTerm, Scalar>;

  explicit LpaElement(GraphPtr graph) : graph_(std::move(graph)) {}

  static LpaElement monomial(GraphPtr graph, const LpaTerm& t, const Scalar& c = Scalar(1)) {
    LpaElement x(std::move(graph));
    x.add(t, c);
    return x;
  }
  static LpaElement vertex(GraphPtr graph, VertexId v) { return monomial(graph, {Path::vertex(v), Path::vertex(v)}); }
  static LpaElement edge(GraphPtr graph, EdgeId e) {
    const Graph& g = *graph;
    return monomial(graph, {Path::edge(g, e), Path::vertex(g.rng(e))});
  }
  static LpaElement ghost(GraphPtr graph, EdgeId e) {
    const Graph& g = *graph;
    return monomial(graph, {Path::vertex(g.rng(e)), Path::edge(g, e)});
  }
  /// Sum of all vertices: the identity of the algebra of a finite graph.
  static LpaElement one(GraphPtr graph) {
    LpaElement x(graph);
    for (VertexId v = 0; v < graph->vertex_count(); ++v) x += vertex(graph, v);
    return x;
  }

  const GraphPtr& graph_ptr() const { return graph_; }
  const Graph& graph() const { return *graph_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar operator()(const LpaTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds c times the normal form of t.
  LpaElement& add(const LpaTerm& t, const Scalar& c) {
    if (c == Scalar(0)) return *this;
    for (const auto& [u, sign] : reduce_term(*graph_, t)) add_normal(u, sign > 0 ? c : -c);
    return *this;
  }

  LpaElement& operator+=(const LpaElement& o) {
    same_graph(o);
    for (const auto& [t, c] : o.terms_) add_normal(t, c);
    return *this;
  }
  LpaElement& operator-=(const LpaElement& o) {
    same_graph(o);
    for (const auto& [t, c] : o.terms_) add_normal(t, -c);
    return *this;
  }
  friend LpaElement operator+(LpaElement a, const LpaElement& b) { return a += b; }
  friend LpaElement operator-(LpaElement a, const LpaElement& b) { return a -= b; }
  friend LpaElement operator*(const Scalar& s, const LpaElement& a) {
    LpaElement out(a.graph_);
    for (const auto& [t, c] : a.terms_) out.add_normal(t, s * c);
    return out;
  }
  friend bool operator==(const LpaElement& a, const LpaElement& b) {
    return a.graph_ == b.graph_ && a.terms_ == b.terms_;
  }

  LpaElement star() const {
    LpaElement out(graph_);
    for (const auto& [t, c] : terms_) out.add_normal(t.star(), c);
    return out;
  }

  void same_graph(const LpaElement& o) const {
    if (graph_ != o.graph_) throw GraphError("elements of Leavitt path algebras of different graphs");
  }

  /// Stores an already normal monomial.
  void add_normal(const LpaTerm& t, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

 private:
  GraphPtr graph_;
  Terms terms_;
};

template <typename Scalar>
LpaElement<Scalar> lpa_mul(const LpaElement<Scalar>& x, const LpaElement<Scalar>& y) {
  x.same_graph(y);
  LpaElement<Scalar> out(x.graph_ptr());
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms())
      if (auto st = multiply_terms(s, t)) out.add(*st, a * b);
  return out;
}

template <typename Scalar>
LpaElement<Scalar> operator*(const LpaElement<Scalar>& x, const LpaElement<Scalar>& y) {
  return lpa_mul(x, y);
}

template <typename Scalar>
LpaElement<Scalar> commutator(const LpaElement<Scalar>& x, const LpaElement<Scalar>& y) {
  return lpa_mul(x, y) - lpa_mul(y, x);
}

/// Reduces a raw combination one rule application at a time. With `rng`
/// the next monomial to rewrite is drawn at random, otherwise the least one
/// is taken; the result does not depend on the choice.
template <typename Scalar>
LpaElement<Scalar> normal_form(const GraphPtr& graph, const std::vector<std::pair<LpaTerm, Scalar>>& raw,
                               std::mt19937_64* rng = nullptr) {
  const Graph& g = *graph;
  std::map<LpaTerm, Scalar> pending;
  auto put = [&](const LpaTerm& t, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, fresh] = pending.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Scalar(0)) pending.erase(it);
    }
  };
  for (const auto& [t, c] : raw) put(make_term(t.alpha, t.beta), c);

  for (;;) {
    std::vector<LpaTerm> reducible;
    for (const auto& [t, c] : pending)
      if (!is_normal(g, t)) reducible.push_back(t);
    if (reducible.empty()) break;
    const LpaTerm t = rng ? reducible[(*rng)() % reducible.size()] : reducible.front();
    const Scalar c = pending.at(t);
    pending.erase(t);
    for (const auto& [u, sign] : rewrite_once(g, t)) put(u, sign > 0 ? c : -c);
  }

  LpaElement<Scalar> out(graph);
  for (const auto& [t, c] : pending) out.add_normal(t, c);
  return out;
}

/// Every normal monomial of an acyclic graph, sorted: a basis of L_R(E).
std::vector<LpaTerm> normal_monomials(const Graph& g);

struct RelationStatus {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
};

/// (V), (E1), (E2), (CK1), (CK2) on all generators, evaluated with lpa_mul.
/// (CK2) is only imposed at regular vertices.
std::array<RelationStatus, 5> check_relations(const GraphPtr& graph);

/// Text syntax: a sum of terms, each an optional coefficient (integer or
/// n/d) followed by a product of generators. A generator is a vertex or edge
/// identifier, optionally followed by `*` for the ghost edge. A coefficient
/// with no generators means that multiple of the identity.
/// Example: "v - e1e1* + 1/2 e2e1*".
LpaElement<Rational> parse_lpa(const GraphPtr& graph, const std::string& text);

template <typename Scalar>
std::string format_lpa(const LpaElement<Scalar>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : x.terms()) {
    const bool negative = c < Scalar(0);
    const Scalar mag = negative ? Scalar(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != Scalar(1)) out += format_scalar(mag) + " ";
    out += format_term(x.graph(), t);
  }
  return out;
}

}  // namespace steinberg
