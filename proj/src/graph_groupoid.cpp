#include "steinberg/graph_groupoid.hpp"

#include <algorithm>

namespace steinberg {

std::optional<std::size_t> GraphGroupoid::boundary_index(const Path& p) const {
  auto it = std::lower_bound(boundary.begin(), boundary.end(), p);
  if (it == boundary.end() || *it != p) return std::nullopt;
  return std::size_t(it - boundary.begin());
}

GraphGroupoid graph_groupoid(const GraphPtr& graph) {
  const Graph& g = *graph;
  GraphGroupoid gg;
  gg.graph = graph;
  gg.boundary = boundary_paths(g);
  const std::size_t n = gg.boundary.size();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path &xi = gg.boundary[i], &eta = gg.boundary[j];
      if (xi.target != eta.target) continue;
      gg.index.emplace(std::pair{i, j}, MorphismId{std::uint32_t(labels.size())});
      gg.ends.emplace_back(i, j);
      const auto shift = std::int64_t(xi.length()) - std::int64_t(eta.length());
      labels.push_back("(" + format_path(g, xi) + "," + std::to_string(shift) + "," + format_path(g, eta) + ")");
    }

  std::vector<MorphismId> units, dom, ran, inv;
  std::vector<CompositionEntry> comp;
  for (std::size_t i = 0; i < n; ++i) units.push_back(gg.unit(i));
  for (const auto& [i, j] : gg.ends) {
    dom.push_back(gg.unit(j));
    ran.push_back(gg.unit(i));
    inv.push_back(gg.morphism(j, i));
  }
  for (const auto& [i, j] : gg.ends)
    for (std::size_t k = 0; k < n; ++k)
      if (auto it = gg.index.find({j, k}); it != gg.index.end())
        comp.push_back({gg.morphism(i, j), it->second, gg.morphism(i, k)});
  gg.groupoid = std::make_shared<Groupoid>(std::move(labels), std::move(units), std::move(dom), std::move(ran),
                                           std::move(inv), comp);
  return gg;
}

CylinderSet make_cylinder(const Graph& g, Path alpha, Path beta, std::set<EdgeId> f) {
  if (alpha.target != beta.target) throw GraphError("cylinder paths must have the same range");
  for (EdgeId e : f)
    if (e >= g.edge_count() || g.src(e) != alpha.target)
      throw GraphError("cylinder exclusions must be edges leaving r(alpha)");
  return {std::move(alpha), std::move(beta), std::move(f)};
}

bool is_empty_cylinder(const Graph& g, const CylinderSet& c) {
  return !g.is_sink(c.alpha.target) && c.f.size() == g.out_edges(c.alpha.target).size();
}

std::string format_cylinder(const Graph& g, const CylinderSet& c) {
  std::string out = "Z(" + format_path(g, c.alpha) + ", " + format_path(g, c.beta);
  if (!c.f.empty()) {
    out += ", {";
    bool first = true;
    for (EdgeId e : c.f) {
      out += (first ? "" : ", ") + g.edge_name(e);
      first = false;
    }
    out += "}";
  }
  return out + ")";
}

MorphismSet cylinder_members(const GraphGroupoid& gg, const CylinderSet& c) {
  MorphismSet out;
  for (const Path& gamma : gg.boundary) {
    if (gamma.source != c.alpha.target) continue;
    if (!gamma.edges.empty() && c.f.contains(gamma.edges.front())) continue;
    const auto xi = gg.boundary_index(c.alpha.concat(gamma));
    const auto eta = gg.boundary_index(c.beta.concat(gamma));
    out.insert(gg.morphism(*xi, *eta));
  }
  return out;
}

namespace {

/// delta with (deep.alpha, deep.beta) = (shallow.alpha delta, shallow.beta delta).
std::optional<Path> common_extension(const CylinderSet& deep, const CylinderSet& shallow) {
  auto da = shallow.alpha.remainder_in(deep.alpha);
  auto db = shallow.beta.remainder_in(deep.beta);
  if (!da || !db || da->edges != db->edges) return std::nullopt;
  return da;
}

}  // namespace

std::vector<CylinderSet> disjointify(const Graph& g, std::vector<CylinderSet> cylinders) {
  std::erase_if(cylinders, [&](const CylinderSet& c) { return is_empty_cylinder(g, c); });
  constexpr std::size_t step_limit = 1'000'000;
  for (std::size_t step = 0;; ++step) {
    if (step > step_limit) throw GraphError("disjointify did not settle");
    bool changed = false;
    for (std::size_t j = 0; j < cylinders.size() && !changed; ++j)
      for (std::size_t k = 0; k < cylinders.size() && !changed; ++k) {
        if (j == k) continue;
        const auto delta = common_extension(cylinders[j], cylinders[k]);
        if (!delta) continue;
        if (delta->edges.empty()) {
          std::set<EdgeId> both;
          std::set_intersection(cylinders[j].f.begin(), cylinders[j].f.end(), cylinders[k].f.begin(),
                                cylinders[k].f.end(), std::inserter(both, both.end()));
          cylinders[k].f = std::move(both);
          cylinders.erase(cylinders.begin() + std::ptrdiff_t(j));
          changed = true;
          break;
        }
        const EdgeId d = delta->edges.front();
        if (cylinders[k].f.contains(d)) continue;  // Z_j sits inside the removed Z(alpha_k d, beta_k d)
        CylinderSet deeper{cylinders[k].alpha.extended(g, d), cylinders[k].beta.extended(g, d), {}};
        cylinders[k].f.insert(d);
        if (is_empty_cylinder(g, cylinders[k])) cylinders.erase(cylinders.begin() + std::ptrdiff_t(k));
        cylinders.push_back(std::move(deeper));
        changed = true;
      }
    if (!changed) break;
  }
  std::sort(cylinders.begin(), cylinders.end());
  return cylinders;
}

UnitPartition path_partition(const GraphGroupoid& gg, const PathSetSpec& p1, const PathSetSpec& p2) {
  MorphismSet u1, u2;
  for (std::size_t i = 0; i < gg.boundary.size(); ++i) {
    const bool in1 = p1.contains(gg.boundary[i]), in2 = p2.contains(gg.boundary[i]);
    const std::string name = format_path(*gg.graph, gg.boundary[i]);
    if (in1 && in2) throw HypothesisError("boundary path " + name + " lies in both P1 and P2");
    if (!in1 && !in2) throw HypothesisError("boundary path " + name + " lies in neither P1 nor P2");
    (in1 ? u1 : u2).insert(gg.unit(i));
  }
  return make_partition(*gg.groupoid, std::move(u1), std::move(u2));
}

LpaTheoremReport build_T_lpa(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                             bool ring_is_domain) {
  const Graph& g = *graph;
  if (!ring_is_domain) throw HypothesisError("scalar ring is not an integral domain");
  if (!is_downward_directed(g)) throw HypothesisError("graph is not downward directed");
  LpaTheoremReport report;
  report.conditions = check_P_conditions(g, p1, p2);
  for (std::size_t i = 0; i < 4; ++i)
    if (!report.conditions.conditions[i].pass)
      throw HypothesisError("condition (" + std::to_string(i + 1) + ") fails: " + report.conditions.conditions[i].detail);
  if (!is_acyclic(g)) {
    report.deferred = true;
    return report;
  }

  const GraphGroupoid gg = graph_groupoid(graph);
  report.partition = path_partition(gg, p1, p2);
  // verify_main_theorem uses A21 (ran in U2, dom in U1); swapping the sides
  // turns it into A12 = {ran in U1, dom in U2}.
  report.main = verify_main_theorem(gg.groupoid, swapped(*report.partition), ring_is_domain);
  report.dim_t = report.main->maximality.dim_subalgebra;

  std::vector<Element<Rational>> images;
  const auto paths = all_paths(g);
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (a.target == b.target && p1.contains(a) && p2.contains(b))
        images.push_back(subset_sum<Rational>(gg.groupoid, cylinder_members(gg, make_cylinder(g, a, b))));
  const auto s_image = SubspaceBasis::span(gg.groupoid, images);
  report.dim_s_image = s_image.dim();
  report.s_image_is_a12 = s_image == block_subspace(gg.groupoid, *report.partition, 1, 2);
  return report;
}

std::vector<LpaElement<Rational>> t_generators(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                                               std::size_t degree) {
  const Graph& g = *graph;
  auto extensions = [&](const PathSetSpec& p) {
    std::vector<Path> out;
    for (const auto& a : p.generators())
      for (std::size_t k = 0; k <= degree; ++k)
        for (const auto& tail : paths_from(g, a.target, k)) out.push_back(a.concat(tail));
    return out;
  };
  std::vector<LpaTerm> terms;
  for (const auto& a : extensions(p1))
    for (const auto& b : extensions(p2))
      if (a.target == b.target) terms.push_back({a, b});
  std::sort(terms.begin(), terms.end(), [](const LpaTerm& x, const LpaTerm& y) {
    const auto lx = x.alpha.length() + x.beta.length(), ly = y.alpha.length() + y.beta.length();
    return lx != ly ? lx < ly : x < y;
  });

  std::vector<LpaElement<Rational>> out{LpaElement<Rational>::one(graph)};
  for (const auto& t : terms) out.push_back(LpaElement<Rational>::monomial(graph, t));
  return out;
}

CommutationReport commutes_up_to_degree(const GraphPtr& graph, const PathSetSpec& p1, const PathSetSpec& p2,
                                        std::size_t degree) {
  const auto gens = t_generators(graph, p1, p2, degree);
  CommutationReport r;
  r.generators = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const auto xy = lpa_mul(gens[i], gens[j]);
      const auto yx = i == j ? xy : lpa_mul(gens[j], gens[i]);
      if (i > 0 && (!xy.is_zero() || !yx.is_zero())) r.a_part_square_zero = false;
      if (i == j) continue;
      ++r.pairs_checked;
      if (xy != yx && r.all_commute) {
        r.all_commute = false;
        r.failure = std::pair{i, j};
      }
    }
  return r;
}

std::optional<LpaElement<Rational>> witness_noncommuting(const LpaElement<Rational>& candidate,
                                                         const PathSetSpec& p1, const PathSetSpec& p2,
                                                         std::size_t degree) {
  for (const auto& g : t_generators(candidate.graph_ptr(), p1, p2, degree))
    if (!commutator(g, candidate).is_zero()) return g;
  return std::nullopt;
}

}  // namespace steinberg
