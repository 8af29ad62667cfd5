#pragma once

// Small graphs shared by the graph and Leavitt tests.

#include "steinberg/graph_groupoid.hpp"

#include <random>

namespace testgraphs {

using namespace steinberg;

inline GraphPtr make(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return std::make_shared<Graph>(std::move(vertices), edges);
}

/// v1 -e1-> v2 -e2-> v3
inline GraphPtr line() { return make({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}}); }

/// One vertex v with loops e1, e2.
inline GraphPtr two_loop() { return make({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}}); }

/// r -> a, r -> c, a -> s1, a -> s2: sinks c, s1, s2.
inline GraphPtr binary_tree() {
  return make({"r", "a", "c", "s1", "s2"}, {{"f1", "r", "a"}, {"f2", "r", "c"}, {"f3", "a", "s1"}, {"f4", "a", "s2"}});
}

/// v1 -e-> v2 and an isolated v3.
inline GraphPtr two_sinks() { return make({"v1", "v2", "v3"}, {{"e", "v1", "v2"}}); }

inline GraphPtr single_vertex() { return make({"v"}, {}); }

/// u -> a -> w and u -> b -> w.
inline GraphPtr diamond() {
  return make({"u", "a", "b", "w"}, {{"f1", "u", "a"}, {"f2", "u", "b"}, {"g1", "a", "w"}, {"g2", "b", "w"}});
}

/// v1 => v2 => v3 -> v4 with doubled edges; 8 boundary paths.
inline GraphPtr parallel() {
  return make({"v1", "v2", "v3", "v4"},
              {{"a", "v1", "v2"}, {"b", "v1", "v2"}, {"c", "v2", "v3"}, {"d", "v2", "v3"}, {"e", "v3", "v4"}});
}

/// Two vertices, each with a loop, joined both ways: cyclic and downward directed.
inline GraphPtr cyclic_pair() {
  return make({"p", "q"}, {{"x", "p", "p"}, {"y", "p", "q"}, {"z", "q", "p"}, {"w", "q", "q"}});
}

inline Path path(const Graph& g, const std::string& text) {
  if (auto v = g.find_vertex(text)) return Path::vertex(*v);
  std::vector<EdgeId> edges;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool found = false;
    for (EdgeId e = 0; e < g.edge_count() && !found; ++e) {
      const auto& n = g.edge_name(e);
      // Longest match is not needed: test edge names never prefix one another.
      if (text.compare(pos, n.size(), n) == 0) {
        edges.push_back(e);
        pos += n.size();
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("bad test path " + text);
  }
  return Path::of_edges(g, edges);
}

inline LpaTerm term(const Graph& g, const std::string& alpha, const std::string& beta) {
  return make_term(path(g, alpha), path(g, beta));
}

/// Random monomial with |alpha|, |beta| <= max_len.
inline LpaTerm random_term(std::mt19937_64& rng, const Graph& g, std::size_t max_len) {
  Path a = Path::vertex(VertexId(rng() % g.vertex_count()));
  const std::size_t la = rng() % (max_len + 1);
  for (std::size_t k = 0; k < la && !g.out_edges(a.target).empty(); ++k) {
    const auto& out = g.out_edges(a.target);
    a = a.extended(g, out[rng() % out.size()]);
  }
  // beta: a random path into a.target, built backwards.
  std::vector<EdgeId> rev;
  VertexId at = a.target;
  const std::size_t lb = rng() % (max_len + 1);
  for (std::size_t k = 0; k < lb; ++k) {
    std::vector<EdgeId> in;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.rng(e) == at) in.push_back(e);
    if (in.empty()) break;
    const EdgeId e = in[rng() % in.size()];
    rev.push_back(e);
    at = g.src(e);
  }
  Path b = Path::vertex(at);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) b = b.extended(g, *it);
  return make_term(a, b);
}

inline LpaElement<Rational> random_element(std::mt19937_64& rng, const GraphPtr& g, std::size_t terms,
                                           std::size_t max_len) {
  LpaElement<Rational> x(g);
  for (std::size_t k = 0; k < terms; ++k)
    x.add(random_term(rng, *g, max_len), Rational(std::int64_t(rng() % 7) - 3));
  return x;
}

/// Membership in Z(alpha, beta, F) straight from the definition, for a
/// morphism (xi, k, eta) of G_E given by its two boundary paths.
inline bool in_cylinder(const CylinderSet& c, const Path& xi, const Path& eta) {
  auto gamma = c.alpha.remainder_in(xi);
  auto gamma2 = c.beta.remainder_in(eta);
  if (!gamma || !gamma2 || *gamma != *gamma2) return false;
  return gamma->edges.empty() || !c.f.contains(gamma->edges.front());
}

}  // namespace testgraphs
