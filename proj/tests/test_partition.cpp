#include <doctest.h>

#include "steinberg/partition.hpp"

#include <random>

using namespace steinberg;

namespace {

MorphismId by_label(const Groupoid& g, const std::string& l) { return *g.find(l); }

/// U1 = the first k units, U2 = the rest.
UnitPartition split(const Groupoid& g, std::size_t k) {
  const auto& units = g.units();
  return make_partition(g, MorphismSet(units.begin(), units.begin() + std::ptrdiff_t(k)),
                        MorphismSet(units.begin() + std::ptrdiff_t(k), units.end()));
}

MorphismSet all_units(const Groupoid& g) { return MorphismSet(g.units().begin(), g.units().end()); }

Element<Rational> random_element(std::mt19937_64& rng, const GroupoidPtr& g) {
  Element<Rational> f(g);
  for (MorphismId x : g->morphisms())
    if (rng() % 2) f.add(x, Rational(std::int64_t(rng() % 7) - 3));
  return f;
}

}  // namespace

TEST_CASE("partition preconditions") {
  const auto g = pair_groupoid(3);
  const auto u = all_units(*g);
  CHECK_THROWS_AS(make_partition(*g, u, {}), HypothesisError);
  CHECK_THROWS_AS(make_partition(*g, {by_label(*g, "(1,1)")}, {by_label(*g, "(2,2)")}), HypothesisError);
  CHECK_THROWS_AS(make_partition(*g, {by_label(*g, "(1,2)")}, {by_label(*g, "(2,2)"), by_label(*g, "(3,3)")}),
                  HypothesisError);
  CHECK_THROWS_AS(make_partition(*g, {by_label(*g, "(1,1)"), by_label(*g, "(2,2)")}, u), HypothesisError);
  CHECK(all_partitions(*g).size() == 6);
}

TEST_CASE("derived sets") {
  const auto g = pair_groupoid(3);
  const auto dp = derive(*g, split(*g, 1));
  CHECK(dp.u12 == MorphismSet{by_label(*g, "(1,1)")});
  CHECK(dp.u21 == MorphismSet{by_label(*g, "(2,2)"), by_label(*g, "(3,3)")});
  CHECK(dp.v.empty());

  const auto u = disjoint_union(*pair_groupoid(2), *pair_groupoid(2));
  const auto du = derive(*u, split(*u, 2));
  CHECK(du.u12.empty());
  CHECK(du.u21.empty());
  CHECK(du.v == all_units(*u));

  const auto g2 = pair_groupoid(2);
  CHECK(derive(*g2, split(*g2, 1)).w == all_units(*g2));
}

TEST_CASE("derived sets partition the unit space") {
  for (const auto& g : {pair_groupoid(4), disjoint_union(*pair_groupoid(2), *pair_groupoid(2)),
                        disjoint_union(*pair_groupoid(3), *pair_groupoid(1))})
    for (const auto& p : all_partitions(*g)) {
      const auto dp = derive(*g, p);
      MorphismSet u1 = dp.u11, u2 = dp.u21;
      u1.insert(dp.u12.begin(), dp.u12.end());
      u2.insert(dp.u22.begin(), dp.u22.end());
      CHECK(u1 == p.u1);
      CHECK(u2 == p.u2);
      CHECK(dp.u11.size() + dp.u12.size() + dp.u21.size() + dp.u22.size() == g->units().size());
      CHECK(dp.v.size() + dp.w.size() == g->units().size());
    }
}

TEST_CASE("interior lemma") {
  const auto g = pair_groupoid(4);
  for (const auto& p : all_partitions(*g)) {
    const auto r = check_interior_lemma(*g, derive(*g, p));
    CHECK(r.v_empty);
    CHECK(r.w_stable);
  }
  const auto u = disjoint_union(*pair_groupoid(2), *pair_groupoid(2));
  const auto r = check_interior_lemma(*u, derive(*u, split(*u, 2)));
  CHECK_FALSE(r.v_empty);
}

TEST_CASE("prime hypothesis") {
  CHECK_FALSE(prime_hypothesis_failure(*pair_groupoid(3), true).has_value());
  CHECK(prime_hypothesis_failure(*pair_groupoid(3), ScalarTraits<Modular<4>>::is_domain).has_value());
  CHECK_FALSE(prime_hypothesis_failure(*pair_groupoid(3), ScalarTraits<Modular<5>>::is_domain).has_value());
  CHECK(prime_hypothesis_failure(*disjoint_union(*pair_groupoid(1), *pair_groupoid(1)), true).has_value());
  CHECK(prime_hypothesis_failure(*cyclic_group_groupoid(2), true).has_value());
  CHECK_THROWS_AS(require_prime(*cyclic_group_groupoid(3), true), HypothesisError);
}

TEST_CASE("block decomposition examples") {
  const auto g = pair_groupoid(2);
  const auto p = split(*g, 1);

  Element<Rational> diag(g);
  for (MorphismId u : g->units()) diag.add(u, Rational(3));
  const auto bd = block_decompose(diag, p);
  CHECK(bd(1, 2).is_zero());
  CHECK(bd(2, 1).is_zero());

  const auto e21 = Element<Rational>::basis(g, by_label(*g, "(2,1)"));
  const auto b21 = block_decompose(e21, p);
  CHECK(b21(2, 1) == e21);
  CHECK(b21(1, 1).is_zero());
  CHECK(b21(1, 2).is_zero());
  CHECK(b21(2, 2).is_zero());

  Element<Rational> all(g);
  for (MorphismId x : g->morphisms()) all.add(x, Rational(1));
  const auto ball = block_decompose(all, p);
  CHECK(ball(1, 1) == Element<Rational>::basis(g, by_label(*g, "(1,1)")));
  CHECK(ball(1, 2) == Element<Rational>::basis(g, by_label(*g, "(1,2)")));
  CHECK(ball(2, 1) == Element<Rational>::basis(g, by_label(*g, "(2,1)")));
  CHECK(ball(2, 2) == Element<Rational>::basis(g, by_label(*g, "(2,2)")));
}

TEST_CASE("block decomposition: sum, supports, linearity and idempotence") {
  std::mt19937_64 rng(17);
  const auto g = pair_groupoid(4);
  const auto partitions = all_partitions(*g);
  for (int t = 0; t < 100; ++t) {
    const auto& p = partitions[rng() % partitions.size()];
    const auto f = random_element(rng, g), h = random_element(rng, g);
    const auto bf = block_decompose(f, p), bh = block_decompose(h, p), bs = block_decompose(f + h, p);
    CHECK(bf.sum() == f);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const auto coset = double_coset(*g, p.side(i), p.side(j));
        for (MorphismId x : bf(i, j).support()) CHECK(coset.contains(x));
        CHECK(bs(i, j) == bf(i, j) + bh(i, j));
        const auto again = block_decompose(bf(i, j), p);
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l) CHECK(again(k, l) == (k == i && l == j ? bf(i, j) : Element<Rational>(g)));
      }
  }
}

TEST_CASE("block calculus") {
  const auto g = pair_groupoid(4);
  for (const auto& p : all_partitions(*g)) {
    const auto r = check_block_calculus(g, p);
    CHECK(r.holds);
    CHECK(r.products_checked == 256);
    CHECK(r.nonzero_products == 64);
  }
}

TEST_CASE("center iff class function on dom^-1(W)") {
  const auto g = pair_groupoid(3);
  for (const auto& p : all_partitions(*g)) {
    const auto r = center_iff_class_on_w(g, p, 1, 60);
    CHECK(r.holds());
    CHECK(r.checked == 9 + 1 + 60);
    CHECK(r.central > 1);
  }
  const auto p = split(*g, 1);
  const auto dp = derive(*g, p);
  const auto x = dom_preimage(*g, dp.w);
  const auto e11 = Element<Rational>::basis(g, by_label(*g, "(1,1)"));
  CHECK_FALSE(center_basis(g).contains(e11));
  CHECK_FALSE(is_class_function(e11, x));

  CHECK_THROWS_AS(center_iff_class_on_w(cyclic_group_groupoid(2), UnitPartition{}, 1, 1), HypothesisError);
}

TEST_CASE("technical lemma") {
  const auto g4 = pair_groupoid(4);
  for (const auto& p : all_partitions(*g4)) {
    const auto r = technical_lemma_suite(g4, p);
    CHECK(r.all_pass());
    for (const auto& item : r.items) CHECK(item.checked > 0);
    // Item (1) as a span containment.
    const auto allowed = block_subspace(g4, p, 1, 1) + block_subspace(g4, p, 2, 1) + block_subspace(g4, p, 2, 2);
    CHECK(allowed.contains(r.centralizer));
  }

  const auto g2 = pair_groupoid(2);
  const auto r = technical_lemma_suite(g2, split(*g2, 1));
  CHECK(r.all_pass());
  Element<Rational> one(g2);
  for (MorphismId u : g2->units()) one.add(u, Rational(1));
  CHECK(r.centralizer ==
        SubspaceBasis::span(g2, std::vector{one, Element<Rational>::basis(g2, by_label(*g2, "(2,1)"))}));
}

TEST_CASE("lemma items detect an element outside C(A21)") {
  const auto g = pair_groupoid(2);
  const auto p = split(*g, 1);
  std::array<LemmaItem, 5> items;
  check_lemma_items(Element<Rational>::basis(g, by_label(*g, "(1,2)")), p, derive(*g, p), items);
  CHECK_FALSE(items[0].pass);
  std::array<LemmaItem, 5> items2;
  check_lemma_items(Element<Rational>::basis(g, by_label(*g, "(1,1)")), p, derive(*g, p), items2);
  CHECK_FALSE(items2[2].pass);
}

TEST_CASE("T = center + A21") {
  const auto g4 = pair_groupoid(4);
  CHECK(build_t(g4, split(*g4, 2)).basis.dim() == 5);
  const auto g2 = pair_groupoid(2);
  CHECK(build_t(g2, split(*g2, 1)).basis.dim() == 2);
  const auto g6 = pair_groupoid(6);
  CHECK(build_t(g6, split(*g6, 3)).basis.dim() == 10);
  CHECK_THROWS_AS(build_t(disjoint_union(*pair_groupoid(1), *pair_groupoid(1)), UnitPartition{}), HypothesisError);
}

TEST_CASE("main theorem on every split of pair groupoids, both orientations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = pair_groupoid(n);
    std::size_t best = 0;
    for (const auto& p : all_partitions(*g)) {
      const auto r = verify_main_theorem(g, p);
      CHECK(r.maximal());
      CHECK(r.dim_center == 1);
      CHECK(std::size_t(r.maximality.dim_subalgebra) == 1 + p.u1.size() * p.u2.size());
      best = std::max(best, std::size_t(r.maximality.dim_subalgebra));
      CHECK(verify_main_theorem(g, swapped(p)).maximal());
    }
    CHECK(best == n * n / 4 + 1);
  }
}

TEST_CASE("A21 alone is not maximal commutative") {
  const auto g = pair_groupoid(4);
  const auto r = is_maximal_commutative(block_subspace(g, split(*g, 2), 2, 1), SubspaceBasis::full(g));
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness.has_value());
  Element<Rational> one(g);
  for (MorphismId u : g->units()) one.add(u, Rational(1));
  CHECK(*r.witness == one);
}

TEST_CASE("main theorem rejects non-prime inputs") {
  const auto u = disjoint_union(*pair_groupoid(2), *pair_groupoid(2));
  CHECK_THROWS_AS(verify_main_theorem(u, split(*u, 2)), HypothesisError);
  const auto g = pair_groupoid(3);
  CHECK_THROWS_AS(verify_main_theorem(g, split(*g, 1), false), HypothesisError);
}
