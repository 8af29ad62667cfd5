#pragma once

// JSON documents for groupoids, elements, bases, partitions, graphs, path
// sets and cylinders. Morphisms, vertices and edges are referred to by their
// string ids (integer ids are accepted and read as strings).

#include "steinberg/graph_groupoid.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace steinberg {

using Json = nlohmann::ordered_json;

/// Malformed document. what() starts with the location: a file position for
/// syntax errors, a JSON pointer for structural ones.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path);
/// Throws DocumentError "path:line:column: message" on a syntax error.
Json parse_json(const std::string& text, const std::string& origin);

/// {units: [id], morphisms: [{id, dom, ran, inv}], comp: [[x, y, xy]]}. The
/// table is not validated here; see validate().
GroupoidPtr groupoid_from_json(const Json& doc);
Json groupoid_to_json(const Groupoid& g);

/// {id: "n/d"}; plain integers are accepted as values.
template <typename Scalar>
Element<Scalar> element_from_json(const GroupoidPtr& g, const Json& doc, const std::string& where = "");
template <typename Scalar>
Json element_to_json(const Element<Scalar>& f) {
  Json out = Json::object();
  for (const auto& [x, c] : f.terms()) out[f.carrier().label(x)] = format_scalar(c);
  return out;
}

/// {canonical: true, basis: [element]}: the reduced echelon rows, or their
/// primitive integer multiples when `integral`.
Json basis_to_json(const SubspaceBasis& b, bool integral);

/// {U1: [unit id], U2: [unit id]}.
UnitPartition partition_from_json(const Groupoid& g, const Json& doc);
Json morphism_set_to_json(const Groupoid& g, const MorphismSet& s);

/// {vertices: [id], edges: [{id, src, rng}]}.
GraphPtr graph_from_json(const Json& doc);
Json graph_to_json(const Graph& g);

/// A nonempty list of edge ids, or {vertex: id, edges: []} for a path of
/// length zero.
Path path_from_json(const Graph& g, const Json& doc, const std::string& where = "");
Json path_to_json(const Graph& g, const Path& p);
/// A list of paths (the generators).
PathSetSpec pathset_from_json(const Graph& g, const Json& doc);

/// [{alpha: path, beta: path, F: [edge id]}].
std::vector<CylinderSet> cylinders_from_json(const Graph& g, const Json& doc);
Json cylinder_to_json(const Graph& g, const CylinderSet& c);

std::string sha256_hex(std::string_view bytes);

}  // namespace steinberg
