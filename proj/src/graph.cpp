#include "steinberg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace steinberg {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw GraphError("a graph needs at least one vertex");
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!vertex_index_.emplace(vertices_[v], VertexId(v)).second) throw GraphError("duplicate vertex " + vertices_[v]);
  out_.resize(vertices_.size());
  for (const auto& e : edges) {
    if (vertex_index_.contains(e.id) || edge_index_.contains(e.id)) throw GraphError("duplicate identifier " + e.id);
    auto s = find_vertex(e.src), r = find_vertex(e.rng);
    if (!s || !r) throw GraphError("edge " + e.id + " has an unknown endpoint");
    const EdgeId id = EdgeId(edge_names_.size());
    edge_index_.emplace(e.id, id);
    edge_names_.push_back(e.id);
    src_.push_back(*s);
    rng_.push_back(*r);
    out_[*s].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Path Path::of_edges(const Graph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) throw GraphError("a path of length 0 needs its vertex");
  for (EdgeId e : edges)
    if (e >= g.edge_count()) throw GraphError("unknown edge in path");
  Path p = edge(g, edges.front());
  for (std::size_t i = 1; i < edges.size(); ++i) p = p.extended(g, edges[i]);
  return p;
}

Path Path::extended(const Graph& g, EdgeId e) const {
  if (g.src(e) != target) throw GraphError("edge " + g.edge_name(e) + " does not continue the path");
  Path p = *this;
  p.edges.push_back(e);
  p.target = g.rng(e);
  return p;
}

Path Path::concat(const Path& p) const {
  if (target != p.source) throw GraphError("paths are not composable");
  Path out = *this;
  out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
  out.target = p.target;
  return out;
}

bool Path::is_prefix_of(const Path& p) const {
  return source == p.source && edges.size() <= p.edges.size() &&
         std::equal(edges.begin(), edges.end(), p.edges.begin());
}

std::optional<Path> Path::remainder_in(const Path& p) const {
  if (!is_prefix_of(p)) return std::nullopt;
  return Path{target, p.target, {p.edges.begin() + std::ptrdiff_t(edges.size()), p.edges.end()}};
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  if (auto c = a.source <=> b.source; c != 0) return c;
  return a.edges <=> b.edges;
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.source);
  std::string out;
  for (EdgeId e : p.edges) out += g.edge_name(e);
  return out;
}

std::vector<VertexKind> classify_vertices(const Graph& g) {
  std::vector<VertexKind> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(g.is_sink(v) ? VertexKind::sink : VertexKind::regular);
  return out;
}

std::vector<std::set<VertexId>> reachability(const Graph& g) {
  std::vector<std::set<VertexId>> reach(g.vertex_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::deque<VertexId> todo{u};
    reach[u].insert(u);
    while (!todo.empty()) {
      const VertexId v = todo.front();
      todo.pop_front();
      for (EdgeId e : g.out_edges(v))
        if (reach[u].insert(g.rng(e)).second) todo.push_back(g.rng(e));
    }
  }
  return reach;
}

bool is_downward_directed(const Graph& g) {
  const auto reach = reachability(g);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (std::none_of(reach[u].begin(), reach[u].end(), [&](VertexId w) { return reach[v].contains(w); }))
        return false;
  return true;
}

namespace {

std::vector<bool> on_cycle(const Graph& g, const std::vector<std::set<VertexId>>& reach) {
  std::vector<bool> out(g.vertex_count(), false);
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    for (EdgeId e : g.out_edges(w))
      if (reach[g.rng(e)].contains(w)) out[w] = true;
  return out;
}

bool has_prefix_in(const Path& p, const PathSetSpec& a, const PathSetSpec& b) { return a.contains(p) || b.contains(p); }

/// Extends p along shortest routes until it ends at a sink; p's range must
/// reach one.
Path extend_to_sink(const Graph& g, Path p) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), inf);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) dist[v] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (dist[g.rng(e)] != inf && dist[g.rng(e)] + 1 < dist[g.src(e)]) {
        dist[g.src(e)] = dist[g.rng(e)] + 1;
        changed = true;
      }
  }
  while (!g.is_sink(p.target)) {
    for (EdgeId e : g.out_edges(p.target))
      if (dist[g.rng(e)] + 1 == dist[p.target]) {
        p = p.extended(g, e);
        break;
      }
  }
  return p;
}

}  // namespace

bool is_acyclic(const Graph& g) {
  const auto cyc = on_cycle(g, reachability(g));
  return std::none_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
}

std::vector<bool> reaches_cycle(const Graph& g) {
  const auto reach = reachability(g);
  const auto cyc = on_cycle(g, reach);
  std::vector<bool> out(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out[v] = std::any_of(reach[v].begin(), reach[v].end(), [&](VertexId w) { return bool(cyc[w]); });
  return out;
}

std::vector<Path> paths_from(const Graph& g, VertexId v, std::size_t length) {
  std::vector<Path> layer{Path::vertex(v)};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (EdgeId e : g.out_edges(p.target)) next.push_back(p.extended(g, e));
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length) {
  std::vector<Path> out;
  for (std::size_t len = 0; len <= max_length; ++len)
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto layer = paths_from(g, v, len);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> all_paths(const Graph& g) {
  if (!is_acyclic(g)) throw GraphError("graph has a cycle, so it has infinitely many paths");
  return paths_up_to(g, g.vertex_count() - 1);
}

std::vector<Path> boundary_paths(const Graph& g) {
  if (!is_acyclic(g)) throw GraphError("graph has a cycle, so its boundary paths are infinite");
  std::vector<Path> out;
  for (auto& p : all_paths(g))
    if (g.is_sink(p.target)) out.push_back(std::move(p));
  return out;
}

PathSetSpec::PathSetSpec(std::vector<Path> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw GraphError("a path set needs at least one generator");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a != b && a.is_prefix_of(b)) throw GraphError("path set generators must not be prefixes of one another");
}

bool PathSetSpec::contains(const Path& p) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Path& a) { return a.is_prefix_of(p); });
}

std::size_t PathSetSpec::max_generator_length() const {
  std::size_t m = 0;
  for (const auto& a : generators_) m = std::max(m, a.length());
  return m;
}

PConditionReport check_P_conditions(const Graph& g, const PathSetSpec& p1, const PathSetSpec& p2) {
  PConditionReport report;
  auto fail = [&](std::size_t i, const Path& p, std::string why) {
    if (!report.conditions[i].pass) return;
    report.conditions[i] = {false, p, format_path(g, p) + ": " + std::move(why)};
  };

  for (const auto& a : p1.generators())
    for (const auto& b : p2.generators()) {
      if (a.is_prefix_of(b)) fail(0, b, "lies in both P1 and P2");
      if (b.is_prefix_of(a)) fail(0, a, "lies in both P1 and P2");
    }
  report.conditions[1].detail = "holds by construction: P1 and P2 are extension closures";

  const std::size_t bound = 1 + std::max(p1.max_generator_length(), p2.max_generator_length());
  const auto reach = reachability(g);
  const auto cyclic = reaches_cycle(g);
  auto reaches_sink = [&](VertexId v) {
    return std::any_of(reach[v].begin(), reach[v].end(), [&](VertexId w) { return g.is_sink(w); });
  };
  for (const auto& p : paths_up_to(g, bound)) {
    if (has_prefix_in(p, p1, p2)) continue;
    if (g.is_sink(p.target))
      fail(2, p, "ends at a sink but lies in neither P1 nor P2");
    else if (p.length() == bound && reaches_sink(p.target))
      fail(2, extend_to_sink(g, p), "ends at a sink but lies in neither P1 nor P2");
    if (p.length() == bound && cyclic[p.target])
      fail(3, p, "begins an infinite path with no prefix in P1 or P2");
  }
  return report;
}

std::pair<PathSetSpec, PathSetSpec> vertex_partition_paths(const Graph& g, const std::set<VertexId>& v1,
                                                           const std::set<VertexId>& v2) {
  if (v1.empty() || v2.empty()) throw GraphError("both vertex sets must be nonempty");
  for (const auto* side : {&v1, &v2})
    for (VertexId v : *side)
      if (v >= g.vertex_count()) throw GraphError("unknown vertex in partition");
  for (VertexId v : v1)
    if (v2.contains(v)) throw GraphError("vertex sets overlap at " + g.vertex_name(v));
  if (v1.size() + v2.size() != g.vertex_count()) throw GraphError("vertex sets do not cover the graph");
  auto gens = [](const std::set<VertexId>& vs) {
    std::vector<Path> out;
    for (VertexId v : vs) out.push_back(Path::vertex(v));
    return PathSetSpec(std::move(out));
  };
  return {gens(v1), gens(v2)};
}

}  // namespace steinberg
