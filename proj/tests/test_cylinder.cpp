#include <doctest.h>

#include "graphs.hpp"

#include <chrono>

using namespace steinberg;
using namespace testgraphs;

namespace {

using X = LpaElement<Rational>;

CylinderSet cyl(const Graph& g, const char* a, const char* b, std::set<EdgeId> f = {}) {
  return make_cylinder(g, path(g, a), path(g, b), std::move(f));
}

MorphismSet oracle_members(const GraphGroupoid& gg, const CylinderSet& c) {
  MorphismSet out;
  for (std::size_t x = 0; x < gg.ends.size(); ++x) {
    const auto [i, j] = gg.ends[x];
    if (in_cylinder(c, gg.boundary[i], gg.boundary[j])) out.insert(MorphismId{std::uint32_t(x)});
  }
  return out;
}

CylinderSet random_cylinder(std::mt19937_64& rng, const Graph& g) {
  const auto t = random_term(rng, g, 3);
  std::set<EdgeId> f;
  for (EdgeId e : g.out_edges(t.alpha.target))
    if (rng() % 3 == 0) f.insert(e);
  return make_cylinder(g, t.alpha, t.beta, f);
}

PathSetSpec pset(const Graph& g, std::initializer_list<const char*> gens) {
  std::vector<Path> ps;
  for (const char* s : gens) ps.push_back(path(g, s));
  return PathSetSpec(ps);
}

}  // namespace

TEST_CASE("cylinder members") {
  const auto gg = graph_groupoid(line());
  const Graph& g = *gg.graph;
  // v2 is regular, so the only boundary extension of e1 is e1e2.
  const auto z = cylinder_members(gg, cyl(g, "e1", "v2"));
  CHECK(z.size() == 1);
  CHECK(gg.groupoid->label(*z.begin()) == "(e1e2,1,e2)");
  CHECK(cylinder_members(gg, cyl(g, "v1", "v1")).size() == 1);
  CHECK(cylinder_members(gg, cyl(g, "v1", "v1", {0})).empty());
  CHECK(is_empty_cylinder(g, cyl(g, "v1", "v1", {0})));
  CHECK_FALSE(is_empty_cylinder(g, cyl(g, "v3", "v3")));
  CHECK(format_cylinder(g, cyl(g, "e1", "v2")) == "Z(e1, v2)");
  CHECK(format_cylinder(g, cyl(g, "v2", "v2", {1})) == "Z(v2, v2, {e2})");
  CHECK_THROWS_AS(cyl(g, "e1", "v1"), GraphError);
  CHECK_THROWS_AS(cyl(g, "v2", "v2", {0}), GraphError);

  for (const auto& graph : {line(), diamond(), parallel(), binary_tree()}) {
    const auto h = graph_groupoid(graph);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
      const auto c = random_cylinder(rng, *graph);
      CHECK(cylinder_members(h, c) == oracle_members(h, c));
    }
  }
}

TEST_CASE("pi_E is a unital algebra map") {
  for (const auto& graph : {line(), diamond(), parallel(), binary_tree()}) {
    const auto gg = graph_groupoid(graph);
    std::mt19937_64 rng(59);
    const auto one = pi_E(gg, X::one(graph));
    CHECK(one == subset_sum<Rational>(gg.groupoid, MorphismSet(gg.groupoid->units().begin(), gg.groupoid->units().end())));
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element(rng, graph, 3, 3), y = random_element(rng, graph, 3, 3);
      CHECK(pi_E(gg, x * y) == pi_E(gg, x) * pi_E(gg, y));
      CHECK(pi_E(gg, x + y) == pi_E(gg, x) + pi_E(gg, y));
    }
  }
  // The normal monomials of the line graph map onto a basis of A_R(G_E).
  const auto gg = graph_groupoid(line());
  std::vector<Element<Rational>> images;
  for (const auto& t : normal_monomials(*gg.graph)) images.push_back(pi_E(gg, X::monomial(gg.graph, t)));
  CHECK(SubspaceBasis::span(gg.groupoid, images).dim() == 9);
}

TEST_CASE("disjointify examples") {
  const auto g = line();
  // Z(e1, e1) lies inside Z(v1, v1); what is left of Z(v1, v1) is empty.
  const auto r = disjointify(*g, {cyl(*g, "v1", "v1"), cyl(*g, "e1", "e1")});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == cyl(*g, "e1", "e1"));

  const auto tree = binary_tree();
  const auto s = disjointify(*tree, {cyl(*tree, "r", "r"), cyl(*tree, "f1f3", "f1f3")});
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(format_cylinder(*tree, c));
  CHECK(out == std::vector<std::string>{"Z(r, r, {f1})", "Z(f1, f1, {f3})", "Z(f1f3, f1f3)"});

  CHECK(disjointify(*g, {cyl(*g, "v2", "v2", {1})}).empty());
  CHECK(disjointify(*g, {cyl(*g, "e1", "e1", {1}), cyl(*g, "e1", "e1")}) == std::vector{cyl(*g, "e1", "e1")});
}

TEST_CASE("disjointify preserves the union and separates the pieces") {
  for (const auto& graph : {line(), diamond(), parallel(), binary_tree()}) {
    const auto gg = graph_groupoid(graph);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 60; ++t) {
      std::vector<CylinderSet> in;
      const std::size_t n = 1 + rng() % 5;
      for (std::size_t k = 0; k < n; ++k) in.push_back(random_cylinder(rng, *graph));
      MorphismSet before;
      for (const auto& c : in) before.merge(oracle_members(gg, c));
      const auto out = disjointify(*graph, in);
      MorphismSet after;
      std::size_t total = 0;
      for (const auto& c : out) {
        CHECK_FALSE(is_empty_cylinder(*graph, c));
        auto m = oracle_members(gg, c);
        total += m.size();
        after.merge(m);
      }
      CHECK(after == before);
      CHECK(total == after.size());
    }
  }
}

TEST_CASE("maximal commutative subalgebras from path partitions, acyclic graphs") {
  const auto g = line();
  const auto [p1, p2] = vertex_partition_paths(*g, {0}, {1, 2});
  const auto r = build_T_lpa(g, p1, p2);
  CHECK(r.verified());
  CHECK(r.dim_t == 3);
  CHECK(r.dim_s_image == 2);
  CHECK(r.partition->u1.size() == 1);

  const auto d = diamond();
  for (unsigned mask = 1; mask + 1 < 16; ++mask) {
    std::set<VertexId> v1, v2;
    for (VertexId v = 0; v < 4; ++v) (mask >> v & 1 ? v1 : v2).insert(v);
    const auto [q1, q2] = vertex_partition_paths(*d, v1, v2);
    const auto rd = build_T_lpa(d, q1, q2);
    CHECK(rd.verified());
    const auto n1 = Index(rd.partition->u1.size()), n2 = Index(rd.partition->u2.size());
    CHECK(rd.dim_t == 1 + n1 * n2);
    CHECK(rd.dim_s_image == n1 * n2);
  }

  const auto par = parallel();
  const auto rp = build_T_lpa(par, pset(*par, {"a", "bc"}), pset(*par, {"bd", "v2", "v3", "v4"}));
  CHECK(rp.verified());
  CHECK(rp.dim_t == 1 + 3 * 5);
}

TEST_CASE("hypotheses are enforced") {
  const auto ts = two_sinks();
  CHECK_THROWS_AS(build_T_lpa(ts, pset(*ts, {"v1"}), pset(*ts, {"v2", "v3"})), HypothesisError);
  const auto g = line();
  CHECK_THROWS_AS(build_T_lpa(g, pset(*g, {"e1"}), pset(*g, {"v3"})), HypothesisError);
  const auto [p1, p2] = vertex_partition_paths(*g, {0}, {1, 2});
  CHECK_THROWS_AS(build_T_lpa(g, p1, p2, false), HypothesisError);
}

TEST_CASE("graphs with a cycle: degree-bounded commutation") {
  const auto tl = two_loop();
  const auto p1 = pset(*tl, {"e1"}), p2 = pset(*tl, {"e2"});
  CHECK(build_T_lpa(tl, p1, p2).deferred);
  CHECK_FALSE(build_T_lpa(tl, p1, p2).verified());

  const auto start = std::chrono::steady_clock::now();
  const auto r = commutes_up_to_degree(tl, p1, p2, 4);
  MESSAGE("degree 4: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s");
  CHECK(r.generators == 1 + 31 * 31);
  CHECK(r.pairs_checked == r.generators * (r.generators - 1) / 2);
  CHECK(r.all_commute);
  CHECK(r.a_part_square_zero);

  const auto w = witness_noncommuting(parse_lpa(tl, "e2e1*"), p1, p2, 2);
  REQUIRE(w);
  CHECK(format_lpa(*w) == "e1e2*");
  CHECK(format_lpa(commutator(*w, parse_lpa(tl, "e2e1*"))) == "-v + 2 e1e1*");
  CHECK_FALSE(witness_noncommuting(X::one(tl), p1, p2, 2));
  CHECK_FALSE(witness_noncommuting(parse_lpa(tl, "e1e1e2*"), p1, p2, 2));

  const auto cp = cyclic_pair();
  const auto [q1, q2] = vertex_partition_paths(*cp, {0}, {1});
  const auto rc = commutes_up_to_degree(cp, q1, q2, 2);
  CHECK(rc.all_commute);
  CHECK(rc.a_part_square_zero);
}
