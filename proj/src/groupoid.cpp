#include "steinberg/groupoid.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace steinberg {

namespace {

MorphismId id(std::size_t i) { return MorphismId{static_cast<std::uint32_t>(i)}; }

}  // namespace

Groupoid::Groupoid(std::vector<std::string> labels, std::vector<MorphismId> units, std::vector<MorphismId> dom,
                   std::vector<MorphismId> ran, std::vector<MorphismId> inv,
                   const std::vector<CompositionEntry>& comp)
    : labels_(std::move(labels)),
      units_(std::move(units)),
      dom_(std::move(dom)),
      ran_(std::move(ran)),
      inv_(std::move(inv)) {
  const std::size_t n = labels_.size();
  if (dom_.size() != n || ran_.size() != n || inv_.size() != n)
    throw GroupoidError("dom, ran and inv must be given for every morphism");
  auto in_range = [n](MorphismId x) { return x.value < n; };
  auto all_in_range = [&](const std::vector<MorphismId>& v) { return std::all_of(v.begin(), v.end(), in_range); };
  if (!all_in_range(units_) || !all_in_range(dom_) || !all_in_range(ran_) || !all_in_range(inv_))
    throw GroupoidError("morphism reference out of range");

  std::sort(units_.begin(), units_.end());
  if (std::adjacent_find(units_.begin(), units_.end()) != units_.end()) throw GroupoidError("duplicate unit");
  is_unit_.assign(n, false);
  for (MorphismId u : units_) is_unit_[u.value] = true;

  table_.assign(n * n, -1);
  for (const auto& e : comp) {
    if (!in_range(e.left) || !in_range(e.right) || !in_range(e.result))
      throw GroupoidError("composition entry references an unknown morphism");
    auto& slot = table_[std::size_t(e.left.value) * n + e.right.value];
    if (slot != -1 && slot != e.result.value)
      throw GroupoidError("conflicting composition entries for (" + labels_[e.left.value] + ", " +
                          labels_[e.right.value] + ")");
    slot = e.result.value;
  }

  std::map<std::string, int> seen;
  for (const auto& l : labels_)
    if (++seen[l] > 1) throw GroupoidError("duplicate morphism label '" + l + "'");
}

std::vector<MorphismId> Groupoid::morphisms() const {
  std::vector<MorphismId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = id(i);
  return out;
}

std::optional<MorphismId> Groupoid::compose(MorphismId x, MorphismId y) const {
  const auto v = table_[std::size_t(x.value) * size() + y.value];
  if (v < 0) return std::nullopt;
  return id(std::size_t(v));
}

MorphismId Groupoid::operator()(MorphismId x, MorphismId y) const {
  auto r = compose(x, y);
  if (!r) throw GroupoidError("morphisms " + label(x) + " and " + label(y) + " are not composable");
  return *r;
}

std::optional<MorphismId> Groupoid::find(const std::string& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) return std::nullopt;
  return id(std::size_t(it - labels_.begin()));
}

std::vector<CompositionEntry> Groupoid::composition_entries() const {
  std::vector<CompositionEntry> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (auto r = compose(id(i), id(j))) out.push_back({id(i), id(j), *r});
  return out;
}

ValidationReport validate(const Groupoid& g) {
  ValidationReport report;
  auto flag = [&](std::string kind, std::vector<MorphismId> ms) {
    report.violations.push_back({std::move(kind), std::move(ms)});
  };

  if (g.units().empty()) flag("no units", {});
  for (MorphismId u : g.units()) {
    if (g.dom(u) != u || g.ran(u) != u) flag("unit domain or range is not itself", {u});
    if (g.inv(u) != u) flag("unit not self-inverse", {u});
  }

  const auto all = g.morphisms();
  for (MorphismId x : all) {
    if (!g.is_unit(g.dom(x))) flag("domain is not a unit", {x});
    if (!g.is_unit(g.ran(x))) flag("range is not a unit", {x});
  }

  for (MorphismId x : all) {
    for (MorphismId y : all) {
      const auto xy = g.compose(x, y);
      const bool should = g.dom(x) == g.ran(y);
      if (xy && !should) flag("illegal composability", {x, y});
      if (!xy && should) flag("missing composition", {x, y});
      if (!xy) continue;
      if (g.dom(*xy) != g.dom(y)) flag("composition domain", {x, y});
      if (g.ran(*xy) != g.ran(x)) flag("composition range", {x, y});
    }
  }

  for (MorphismId x : all) {
    const auto right = g.compose(x, g.dom(x));
    const auto left = g.compose(g.ran(x), x);
    if (right && *right != x) flag("right identity", {x});
    if (left && *left != x) flag("left identity", {x});
    const auto inv_x = g.compose(g.inv(x), x);
    const auto x_inv = g.compose(x, g.inv(x));
    if (!inv_x || *inv_x != g.dom(x) || !x_inv || *x_inv != g.ran(x)) flag("inverse law", {x});
  }

  // Associativity on every triple with both inner products recorded.
  for (MorphismId x : all) {
    for (MorphismId y : all) {
      const auto xy = g.compose(x, y);
      if (!xy) continue;
      for (MorphismId z : all) {
        const auto yz = g.compose(y, z);
        if (!yz) continue;
        const auto left = g.compose(*xy, z);
        const auto right = g.compose(x, *yz);
        if (left != right) flag("associativity", {x, y, z});
      }
    }
  }
  return report;
}

GroupoidPtr pair_groupoid(std::size_t n) {
  if (n == 0) throw GroupoidError("pair groupoid needs at least one object");
  auto at = [n](std::size_t i, std::size_t j) { return id(i * n + j); };
  std::vector<std::string> labels;
  std::vector<MorphismId> units, dom, ran, inv;
  std::vector<CompositionEntry> comp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      dom.push_back(at(j, j));
      ran.push_back(at(i, i));
      inv.push_back(at(j, i));
      for (std::size_t k = 0; k < n; ++k) comp.push_back({at(i, j), at(j, k), at(i, k)});
    }
    units.push_back(at(i, i));
  }
  return std::make_shared<const Groupoid>(std::move(labels), std::move(units), std::move(dom), std::move(ran),
                                          std::move(inv), comp);
}

GroupoidPtr group_groupoid(const std::vector<std::vector<std::size_t>>& cayley) {
  const std::size_t k = cayley.size();
  if (k == 0) throw GroupoidError("empty multiplication table");
  for (const auto& row : cayley) {
    if (row.size() != k) throw GroupoidError("multiplication table is not square");
    for (std::size_t v : row)
      if (v >= k) throw GroupoidError("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw GroupoidError("multiplication table is not associative");

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < k && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw GroupoidError("multiplication table has no identity");

  std::vector<MorphismId> inv(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<std::size_t> left, right;
    for (std::size_t b = 0; b < k; ++b) {
      if (cayley[a][b] == *identity) right.push_back(b);
      if (cayley[b][a] == *identity) left.push_back(b);
    }
    if (right.size() != 1 || left.size() != 1 || left[0] != right[0])
      throw GroupoidError("element g" + std::to_string(a) + " has no unique inverse");
    inv[a] = id(right[0]);
  }

  std::vector<std::string> labels;
  std::vector<CompositionEntry> comp;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back("g" + std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) comp.push_back({id(a), id(b), id(cayley[a][b])});
  }
  std::vector<MorphismId> dom(k, id(*identity));
  return std::make_shared<const Groupoid>(std::move(labels), std::vector<MorphismId>{id(*identity)}, dom, dom,
                                          std::move(inv), comp);
}

GroupoidPtr cyclic_group_groupoid(std::size_t order) {
  if (order == 0) throw GroupoidError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  return group_groupoid(table);
}

GroupoidPtr disjoint_union(const Groupoid& a, const Groupoid& b) {
  if (a.units().empty() || b.units().empty()) throw GroupoidError("disjoint union requires nonempty unit spaces");
  const auto offset = std::uint32_t(a.size());
  auto shift = [offset](MorphismId x) { return MorphismId{x.value + offset}; };

  std::vector<std::string> labels;
  std::vector<MorphismId> units, dom, ran, inv;
  std::vector<CompositionEntry> comp;
  for (MorphismId x : a.morphisms()) {
    labels.push_back("0:" + a.label(x));
    dom.push_back(a.dom(x));
    ran.push_back(a.ran(x));
    inv.push_back(a.inv(x));
  }
  for (MorphismId x : b.morphisms()) {
    labels.push_back("1:" + b.label(x));
    dom.push_back(shift(b.dom(x)));
    ran.push_back(shift(b.ran(x)));
    inv.push_back(shift(b.inv(x)));
  }
  units = a.units();
  for (MorphismId u : b.units()) units.push_back(shift(u));
  comp = a.composition_entries();
  for (const auto& e : b.composition_entries()) comp.push_back({shift(e.left), shift(e.right), shift(e.result)});
  return std::make_shared<const Groupoid>(std::move(labels), std::move(units), std::move(dom), std::move(ran),
                                          std::move(inv), comp);
}

bool is_topologically_transitive(const Groupoid& g) {
  std::set<std::pair<MorphismId, MorphismId>> connected;
  for (MorphismId x : g.morphisms()) connected.emplace(g.dom(x), g.ran(x));
  for (MorphismId u : g.units())
    for (MorphismId v : g.units())
      if (!connected.contains({u, v})) return false;
  return true;
}

MorphismSet hom_set(const Groupoid& g, MorphismId u, MorphismId v) {
  if (!g.is_unit(u) || !g.is_unit(v)) throw GroupoidError("hom_set arguments must be units");
  MorphismSet out;
  for (MorphismId x : g.morphisms())
    if (g.dom(x) == u && g.ran(x) == v) out.insert(x);
  return out;
}

bool has_trivial_isotropy(const Groupoid& g) {
  for (MorphismId x : g.morphisms())
    if (g.dom(x) == g.ran(x) && !g.is_unit(x)) return false;
  return true;
}

std::vector<std::vector<MorphismId>> conjugacy_classes(const Groupoid& g) {
  std::vector<std::vector<MorphismId>> classes;
  std::vector<bool> assigned(g.size(), false);
  // Conjugators z indexed by dom(z).
  std::map<MorphismId, std::vector<MorphismId>> by_dom;
  for (MorphismId z : g.morphisms()) by_dom[g.dom(z)].push_back(z);

  for (MorphismId x : g.morphisms()) {
    if (assigned[x.value] || g.dom(x) != g.ran(x)) continue;
    std::vector<MorphismId> cls;
    std::queue<MorphismId> frontier;
    frontier.push(x);
    assigned[x.value] = true;
    while (!frontier.empty()) {
      const MorphismId y = frontier.front();
      frontier.pop();
      cls.push_back(y);
      for (MorphismId z : by_dom[g.dom(y)]) {
        const MorphismId c = g(g(z, y), g.inv(z));
        if (!assigned[c.value]) {
          assigned[c.value] = true;
          frontier.push(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

MorphismSet product(const Groupoid& g, const MorphismSet& x, const MorphismSet& y) {
  MorphismSet out;
  for (MorphismId a : x)
    for (MorphismId b : y)
      if (g.dom(a) == g.ran(b)) out.insert(g(a, b));
  return out;
}

MorphismSet inverse(const Groupoid& g, const MorphismSet& x) {
  MorphismSet out;
  for (MorphismId a : x) out.insert(g.inv(a));
  return out;
}

MorphismSet dom_image(const Groupoid& g, const MorphismSet& x) {
  MorphismSet out;
  for (MorphismId a : x) out.insert(g.dom(a));
  return out;
}

MorphismSet ran_image(const Groupoid& g, const MorphismSet& x) {
  MorphismSet out;
  for (MorphismId a : x) out.insert(g.ran(a));
  return out;
}

MorphismSet dom_preimage(const Groupoid& g, const MorphismSet& units) {
  MorphismSet out;
  for (MorphismId a : g.morphisms())
    if (units.contains(g.dom(a))) out.insert(a);
  return out;
}

Slice Slice::make(const Groupoid& g, MorphismSet members) {
  std::map<MorphismId, MorphismId> by_dom, by_ran;
  for (MorphismId x : members) {
    if (x.value >= g.size()) throw GroupoidError("slice member out of range");
    if (auto [it, fresh] = by_dom.emplace(g.dom(x), x); !fresh)
      throw GroupoidError("not a slice: dom not injective on " + g.label(it->second) + ", " + g.label(x));
    if (auto [it, fresh] = by_ran.emplace(g.ran(x), x); !fresh)
      throw GroupoidError("not a slice: ran not injective on " + g.label(it->second) + ", " + g.label(x));
  }
  return Slice(std::move(members));
}

Slice Slice::units_of(const Groupoid& g) { return Slice(MorphismSet(g.units().begin(), g.units().end())); }

}  // namespace steinberg
