#include "steinberg/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace steinberg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError((where.empty() ? "/" : where) + ": " + what);
}

std::string id_string(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  fail(where, "expected a string or integer id");
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_at(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

MorphismId morphism_ref(const Groupoid& g, const Json& v, const std::string& where) {
  const auto id = id_string(v, where);
  auto x = g.find(id);
  if (!x) fail(where, "unknown morphism '" + id + "'");
  return *x;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: ".
    if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw DocumentError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
  }
}

GroupoidPtr groupoid_from_json(const Json& doc) {
  const Json& units = array_at(member(doc, "units", ""), "/units");
  const Json& morphisms = array_at(member(doc, "morphisms", ""), "/morphisms");
  const Json& comp = array_at(member(doc, "comp", ""), "/comp");

  std::vector<std::string> labels;
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string where = "/morphisms/" + std::to_string(i);
    const auto id = id_string(member(morphisms[i], "id", where), where + "/id");
    if (!index.emplace(id, std::uint32_t(labels.size())).second) fail(where + "/id", "duplicate morphism '" + id + "'");
    labels.push_back(id);
  }
  auto ref = [&](const Json& v, const std::string& where) {
    const auto id = id_string(v, where);
    auto it = index.find(id);
    if (it == index.end()) fail(where, "unknown morphism '" + id + "'");
    return MorphismId{it->second};
  };

  std::vector<MorphismId> unit_ids, dom, ran, inv;
  for (std::size_t i = 0; i < units.size(); ++i) unit_ids.push_back(ref(units[i], "/units/" + std::to_string(i)));
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string where = "/morphisms/" + std::to_string(i);
    dom.push_back(ref(member(morphisms[i], "dom", where), where + "/dom"));
    ran.push_back(ref(member(morphisms[i], "ran", where), where + "/ran"));
    inv.push_back(ref(member(morphisms[i], "inv", where), where + "/inv"));
  }
  std::vector<CompositionEntry> entries;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string where = "/comp/" + std::to_string(i);
    if (!comp[i].is_array() || comp[i].size() != 3) fail(where, "expected [x, y, xy]");
    entries.push_back({ref(comp[i][0], where + "/0"), ref(comp[i][1], where + "/1"), ref(comp[i][2], where + "/2")});
  }
  try {
    return std::make_shared<const Groupoid>(std::move(labels), std::move(unit_ids), std::move(dom), std::move(ran),
                                            std::move(inv), entries);
  } catch (const GroupoidError& e) {
    fail("", e.what());
  }
}

Json groupoid_to_json(const Groupoid& g) {
  Json doc;
  doc["units"] = Json::array();
  for (MorphismId u : g.units()) doc["units"].push_back(g.label(u));
  doc["morphisms"] = Json::array();
  for (MorphismId x : g.morphisms())
    doc["morphisms"].push_back({{"id", g.label(x)}, {"dom", g.label(g.dom(x))}, {"ran", g.label(g.ran(x))},
                                {"inv", g.label(g.inv(x))}});
  doc["comp"] = Json::array();
  for (const auto& e : g.composition_entries())
    doc["comp"].push_back({g.label(e.left), g.label(e.right), g.label(e.result)});
  return doc;
}

template <typename Scalar>
Element<Scalar> element_from_json(const GroupoidPtr& g, const Json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object {morphism id: coefficient}");
  Element<Scalar> f(g);
  for (const auto& [key, value] : doc.items()) {
    const std::string at = where + "/" + key;
    auto x = g->find(key);
    if (!x) fail(at, "unknown morphism '" + key + "'");
    std::string text;
    if (value.is_string()) {
      text = value.template get<std::string>();
    } else if (value.is_number_integer()) {
      text = std::to_string(value.template get<std::int64_t>());
    } else {
      fail(at, "coefficient must be a string \"n/d\" or an integer");
    }
    try {
      f.add(*x, parse_scalar<Scalar>(text));
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
  }
  return f;
}

template Element<Rational> element_from_json<Rational>(const GroupoidPtr&, const Json&, const std::string&);
template Element<Integer> element_from_json<Integer>(const GroupoidPtr&, const Json&, const std::string&);

Json basis_to_json(const SubspaceBasis& b, bool integral) {
  Json rows = Json::array();
  if (integral) {
    for (const auto& e : b.integral_elements()) rows.push_back(element_to_json(e));
  } else {
    for (const auto& e : b.elements()) rows.push_back(element_to_json(e));
  }
  return {{"canonical", true}, {"basis", rows}};
}

UnitPartition partition_from_json(const Groupoid& g, const Json& doc) {
  auto side = [&](const char* key) {
    const std::string where = std::string("/") + key;
    const Json& list = array_at(member(doc, key, ""), where);
    MorphismSet s;
    for (std::size_t i = 0; i < list.size(); ++i) s.insert(morphism_ref(g, list[i], where + "/" + std::to_string(i)));
    return s;
  };
  return make_partition(g, side("U1"), side("U2"));
}

Json morphism_set_to_json(const Groupoid& g, const MorphismSet& s) {
  Json out = Json::array();
  for (MorphismId x : s) out.push_back(g.label(x));
  return out;
}

GraphPtr graph_from_json(const Json& doc) {
  const Json& vertices = array_at(member(doc, "vertices", ""), "/vertices");
  const Json& edges = array_at(member(doc, "edges", ""), "/edges");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) names.push_back(id_string(vertices[i], "/vertices/" + std::to_string(i)));
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    specs.push_back({id_string(member(edges[i], "id", where), where + "/id"),
                     id_string(member(edges[i], "src", where), where + "/src"),
                     id_string(member(edges[i], "rng", where), where + "/rng")});
  }
  try {
    return std::make_shared<const Graph>(std::move(names), specs);
  } catch (const GraphError& e) {
    fail("", e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    doc["edges"].push_back({{"id", g.edge_name(e)}, {"src", g.vertex_name(g.src(e))}, {"rng", g.vertex_name(g.rng(e))}});
  return doc;
}

Path path_from_json(const Graph& g, const Json& doc, const std::string& where) {
  if (doc.is_object()) {
    const auto name = id_string(member(doc, "vertex", where), where + "/vertex");
    auto v = g.find_vertex(name);
    if (!v) fail(where + "/vertex", "unknown vertex '" + name + "'");
    if (auto it = doc.find("edges"); it != doc.end() && !(it->is_array() && it->empty()))
      fail(where + "/edges", "a vertex path has an empty edge list");
    return Path::vertex(*v);
  }
  if (!doc.is_array() || doc.empty()) fail(where, "expected a nonempty edge list or {vertex, edges: []}");
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto name = id_string(doc[i], where + "/" + std::to_string(i));
    auto e = g.find_edge(name);
    if (!e) fail(where + "/" + std::to_string(i), "unknown edge '" + name + "'");
    edges.push_back(*e);
  }
  try {
    return Path::of_edges(g, edges);
  } catch (const GraphError& e) {
    fail(where, e.what());
  }
}

Json path_to_json(const Graph& g, const Path& p) {
  if (p.edges.empty()) return {{"vertex", g.vertex_name(p.source)}, {"edges", Json::array()}};
  Json out = Json::array();
  for (EdgeId e : p.edges) out.push_back(g.edge_name(e));
  return out;
}

PathSetSpec pathset_from_json(const Graph& g, const Json& doc) {
  const Json& list = array_at(doc, "");
  std::vector<Path> paths;
  for (std::size_t i = 0; i < list.size(); ++i) paths.push_back(path_from_json(g, list[i], "/" + std::to_string(i)));
  try {
    return PathSetSpec(std::move(paths));
  } catch (const GraphError& e) {
    fail("", e.what());
  }
}

std::vector<CylinderSet> cylinders_from_json(const Graph& g, const Json& doc) {
  const Json& list = array_at(doc, "");
  std::vector<CylinderSet> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "/" + std::to_string(i);
    Path alpha = path_from_json(g, member(list[i], "alpha", where), where + "/alpha");
    Path beta = path_from_json(g, member(list[i], "beta", where), where + "/beta");
    std::set<EdgeId> f;
    if (auto it = list[i].find("F"); it != list[i].end()) {
      const Json& fs = array_at(*it, where + "/F");
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto name = id_string(fs[k], where + "/F/" + std::to_string(k));
        auto e = g.find_edge(name);
        if (!e) fail(where + "/F/" + std::to_string(k), "unknown edge '" + name + "'");
        f.insert(*e);
      }
    }
    try {
      out.push_back(make_cylinder(g, std::move(alpha), std::move(beta), std::move(f)));
    } catch (const GraphError& e) {
      fail(where, e.what());
    }
  }
  return out;
}

Json cylinder_to_json(const Graph& g, const CylinderSet& c) {
  Json f = Json::array();
  for (EdgeId e : c.f) f.push_back(g.edge_name(e));
  return {{"alpha", path_to_json(g, c.alpha)}, {"beta", path_to_json(g, c.beta)}, {"F", f},
          {"text", format_cylinder(g, c)}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return s.str();
}

}  // namespace steinberg
