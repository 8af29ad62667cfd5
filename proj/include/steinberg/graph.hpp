#pragma once

// Finite directed graphs and their paths. Infinite emitters cannot occur, so
// the singular vertices are exactly the sinks.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinberg {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeSpec {
  std::string id, src, rng;
};

/// Vertices and edges are numbered in declaration order. Identifiers of
/// vertices and edges share one namespace.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  VertexId src(EdgeId e) const { return src_[e]; }
  VertexId rng(EdgeId e) const { return rng_[e]; }
  /// s^{-1}(v) in declaration order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  bool is_sink(VertexId v) const { return out_[v].empty(); }
  /// The largest edge of s^{-1}(v); v must be regular.
  EdgeId special_edge(VertexId v) const { return out_[v].back(); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

 private:
  std::vector<std::string> vertices_, edge_names_;
  std::vector<VertexId> src_, rng_;
  std::vector<std::vector<EdgeId>> out_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Finite path; length 0 paths are vertices. Ordered by length, then source,
/// then edge sequence.
struct Path {
  VertexId source = 0, target = 0;
  std::vector<EdgeId> edges;

  static Path vertex(VertexId v) { return {v, v, {}}; }
  static Path edge(const Graph& g, EdgeId e) { return {g.src(e), g.rng(e), {e}}; }
  /// Throws GraphError when the edge sequence is not a path.
  static Path of_edges(const Graph& g, const std::vector<EdgeId>& edges);

  std::size_t length() const { return edges.size(); }
  Path extended(const Graph& g, EdgeId e) const;
  /// this followed by p; requires target == p.source.
  Path concat(const Path& p) const;
  bool is_prefix_of(const Path& p) const;
  /// p = this * rest; empty when this is not a prefix of p.
  std::optional<Path> remainder_in(const Path& p) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
};

std::string format_path(const Graph& g, const Path& p);

enum class VertexKind { sink, regular };
std::vector<VertexKind> classify_vertices(const Graph& g);

/// reach[u] = {w : u >= w}, including u itself.
std::vector<std::set<VertexId>> reachability(const Graph& g);
bool is_downward_directed(const Graph& g);
bool is_acyclic(const Graph& g);
/// Vertices from which a cycle can be reached, i.e. sources of infinite paths.
std::vector<bool> reaches_cycle(const Graph& g);

/// Every path of length at most `max_length`, sorted.
std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length);
/// Paths of exactly `length` edges starting at v, sorted.
std::vector<Path> paths_from(const Graph& g, VertexId v, std::size_t length);
/// Finite paths ending at a sink (with an acyclic graph there are no infinite
/// ones). Throws GraphError on cyclic graphs.
std::vector<Path> boundary_paths(const Graph& g);
/// Every path of an acyclic graph.
std::vector<Path> all_paths(const Graph& g);

/// The set {alpha gamma : alpha a generator} of all extensions of a finite
/// antichain of generators.
class PathSetSpec {
 public:
  /// Throws GraphError when one generator is a prefix of another.
  explicit PathSetSpec(std::vector<Path> generators);

  const std::vector<Path>& generators() const { return generators_; }
  bool contains(const Path& p) const;
  std::size_t max_generator_length() const;

 private:
  std::vector<Path> generators_;
};

struct ConditionStatus {
  bool pass = true;
  std::optional<Path> counterexample;
  std::string detail;
};

struct PConditionReport {
  std::array<ConditionStatus, 4> conditions;
  bool all_pass() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

/// Conditions (1)-(4) for P1, P2. Condition (3) is checked on all paths up to
/// length L* = 1 + max generator length (every longer path ending at a sink
/// has a length-L* prefix whose range reaches a sink); condition (4) on paths
/// of length L* whose range reaches a cycle.
PConditionReport check_P_conditions(const Graph& g, const PathSetSpec& p1, const PathSetSpec& p2);

/// P_i = {alpha : s(alpha) in V_i}, generated by the vertices of V_i. Throws
/// GraphError unless V1, V2 partition the vertices into nonempty parts.
std::pair<PathSetSpec, PathSetSpec> vertex_partition_paths(const Graph& g, const std::set<VertexId>& v1,
                                                           const std::set<VertexId>& v2);

}  // namespace steinberg
