#include "steinberg/partition.hpp"

#include <sstream>

namespace steinberg {

namespace {

Rational small_coefficient(std::mt19937_64& rng) { return Rational(std::int64_t(rng() % 5) - 2); }

std::string describe(const Groupoid& g, std::initializer_list<MorphismId> ms) {
  std::string out;
  for (MorphismId x : ms) out += (out.empty() ? "" : ", ") + g.label(x);
  return out;
}

}  // namespace

UnitPartition make_partition(const Groupoid& g, MorphismSet u1, MorphismSet u2) {
  if (u1.empty() || u2.empty()) throw HypothesisError("both sides of the unit partition must be nonempty");
  for (const auto* side : {&u1, &u2})
    for (MorphismId u : *side)
      if (u.value >= g.size() || !g.is_unit(u)) throw HypothesisError("partition member is not a unit");
  for (MorphismId u : u1)
    if (u2.contains(u)) throw HypothesisError("partition sides overlap at " + g.label(u));
  if (u1.size() + u2.size() != g.units().size()) throw HypothesisError("partition does not cover the unit space");
  return {std::move(u1), std::move(u2)};
}

std::vector<UnitPartition> all_partitions(const Groupoid& g) {
  const auto& units = g.units();
  if (units.size() < 2 || units.size() > 20) throw HypothesisError("partition enumeration needs 2..20 units");
  std::vector<UnitPartition> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << units.size()); ++mask) {
    UnitPartition p;
    for (std::size_t i = 0; i < units.size(); ++i) ((mask >> i) & 1 ? p.u1 : p.u2).insert(units[i]);
    out.push_back(std::move(p));
  }
  return out;
}

DerivedPartition derive(const Groupoid& g, const UnitPartition& p) {
  make_partition(g, p.u1, p.u2);
  DerivedPartition dp;
  const MorphismSet reach_from_2 = ran_image(g, dom_preimage(g, p.u2));
  const MorphismSet reach_from_1 = ran_image(g, dom_preimage(g, p.u1));
  for (MorphismId u : p.u1) (reach_from_2.contains(u) ? dp.u12 : dp.u11).insert(u);
  for (MorphismId u : p.u2) (reach_from_1.contains(u) ? dp.u21 : dp.u22).insert(u);
  dp.v = dp.u11;
  dp.v.insert(dp.u22.begin(), dp.u22.end());
  dp.w = dp.u12;
  dp.w.insert(dp.u21.begin(), dp.u21.end());
  return dp;
}

MorphismSet double_coset(const Groupoid& g, const MorphismSet& ui, const MorphismSet& uj) {
  MorphismSet out;
  for (MorphismId x : g.morphisms())
    if (ui.contains(g.ran(x)) && uj.contains(g.dom(x))) out.insert(x);
  return out;
}

InteriorLemmaResult check_interior_lemma(const Groupoid& g, const DerivedPartition& dp) {
  InteriorLemmaResult r;
  r.v_empty = dp.v.empty();
  r.w_stable = true;
  for (MorphismId x : g.morphisms()) {
    if (!dp.w.contains(g.dom(x))) continue;
    for (MorphismId y : g.morphisms()) {
      if (g.dom(x) != g.ran(y)) continue;
      if (!dp.w.contains(g.dom(g(x, y)))) {
        r.w_stable = false;
        r.counterexample = std::pair{x, y};
        return r;
      }
    }
  }
  return r;
}

std::optional<std::string> prime_hypothesis_failure(const Groupoid& g, bool ring_is_domain) {
  if (!ring_is_domain) return "scalar ring is not an integral domain";
  if (!is_topologically_transitive(g)) return "groupoid is not topologically transitive";
  if (!has_trivial_isotropy(g)) return "groupoid has nontrivial isotropy, so its finite algebra is not prime";
  return std::nullopt;
}

void require_prime(const Groupoid& g, bool ring_is_domain) {
  if (auto why = prime_hypothesis_failure(g, ring_is_domain)) throw HypothesisError(*why);
}

std::vector<Element<Rational>> block_spanning_set(const GroupoidPtr& g, const UnitPartition& p, int i, int j) {
  std::vector<Element<Rational>> out;
  for (MorphismId x : double_coset(*g, p.side(i), p.side(j))) out.push_back(Element<Rational>::basis(g, x));
  return out;
}

SubspaceBasis block_subspace(const GroupoidPtr& g, const UnitPartition& p, int i, int j) {
  return SubspaceBasis::span(g, block_spanning_set(g, p, i, j));
}

BlockCalculusResult check_block_calculus(const GroupoidPtr& g, const UnitPartition& p) {
  BlockCalculusResult r;
  std::array<std::array<std::vector<Element<Rational>>, 2>, 2> span;
  std::array<std::array<MorphismSet, 2>, 2> coset;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      span[i - 1][j - 1] = block_spanning_set(g, p, i, j);
      coset[i - 1][j - 1] = double_coset(*g, p.side(i), p.side(j));
    }

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (const auto& a : span[i - 1][j - 1])
            for (const auto& b : span[k - 1][l - 1]) {
              const auto ab = convolve(a, b);
              ++r.products_checked;
              if (!ab.is_zero()) ++r.nonzero_products;
              bool ok = true;
              if (j != k) {
                ok = ab.is_zero();
              } else {
                for (MorphismId x : ab.support()) ok = ok && coset[i - 1][l - 1].contains(x);
              }
              if (!ok && r.holds) {
                r.holds = false;
                std::ostringstream os;
                os << "A" << i << j << " * A" << k << l << " product "
                   << describe(*g, {a.terms().begin()->first, b.terms().begin()->first}) << " escapes its block";
                r.failure = os.str();
              }
            }
  return r;
}

CenterClassResult center_iff_class_on_w(const GroupoidPtr& g, const UnitPartition& p, std::uint64_t seed,
                                        std::size_t random_count, bool ring_is_domain) {
  require_prime(*g, ring_is_domain);
  const DerivedPartition dp = derive(*g, p);
  const MorphismSet x_set = dom_preimage(*g, dp.w);
  const SubspaceBasis center = center_basis(g);
  const auto class_sums = center.elements();

  std::vector<Element<Rational>> samples;
  for (MorphismId x : g->morphisms()) samples.push_back(Element<Rational>::basis(g, x));
  for (const auto& c : class_sums) samples.push_back(c);

  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < random_count; ++r) {
    Element<Rational> f(g);
    if (r % 3 != 2)
      for (const auto& c : class_sums) f += small_coefficient(rng) * c;
    if (r % 3 == 1) f.add(MorphismId{std::uint32_t(rng() % g->size())}, Rational(1 + std::int64_t(rng() % 3)));
    if (r % 3 == 2)
      for (MorphismId x : g->morphisms())
        if (rng() % 3 == 0) f.add(x, small_coefficient(rng));
    samples.push_back(std::move(f));
  }

  CenterClassResult result;
  for (const auto& f : samples) {
    ++result.checked;
    const bool central = center.contains(f);
    if (central) ++result.central;
    if (central != is_class_function(f, x_set)) {
      result.discrepancy = f;
      break;
    }
  }
  return result;
}

void check_lemma_items(const Element<Rational>& f, const UnitPartition& p, const DerivedPartition& dp,
                       std::array<LemmaItem, 5>& items) {
  const Groupoid& g = f.carrier();
  const auto blocks = block_decompose(f, p);
  const auto diag = blocks.diagonal();
  auto fail = [&](std::size_t item, const std::string& what) {
    if (items[item].pass) items[item].detail = what;
    items[item].pass = false;
  };

  ++items[0].checked;
  if (!blocks(1, 2).is_zero()) fail(0, "f12 nonzero at " + g.label(blocks(1, 2).terms().begin()->first));

  for (MorphismId x : diag.support()) {
    ++items[1].checked;
    if (g.dom(x) != g.ran(x)) fail(1, "diagonal block nonzero off the isotropy at " + g.label(x));
  }

  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    const MorphismSet ii = double_coset(g, p.side(i), p.side(i));
    const MorphismSet ji = double_coset(g, p.side(j), p.side(i));
    for (MorphismId x : ii) {
      if (g.dom(x) != g.ran(x)) continue;
      bool has_y = false;
      for (MorphismId z : ji) {
        if (g.dom(z) != g.ran(x)) continue;
        has_y = true;
        ++items[2].checked;
        const MorphismId conj = g(g(z, x), g.inv(z));
        if (blocks(i, i)(x) != blocks(j, j)(conj)) fail(2, "f_ii(x) != f_jj(zxz^-1) for " + describe(g, {x, z}));
      }
      if (!has_y) continue;
      for (MorphismId z : g.morphisms()) {
        if (g.dom(z) != g.ran(x)) continue;
        ++items[3].checked;
        const MorphismId conj = g(g(z, x), g.inv(z));
        if (diag(x) != diag(conj)) fail(3, "(f11+f22) not conjugation invariant at " + describe(g, {x, z}));
      }
    }
  }

  if (!diag.is_zero()) {
    ++items[4].checked;
    const MorphismSet doms = dom_image(g, diag.support());
    for (MorphismId u : dp.w)
      if (!doms.contains(u)) fail(4, "W not covered by dom(supp(f11+f22)) at " + g.label(u));
  }
}

TechnicalLemmaReport technical_lemma_suite(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain) {
  require_prime(*g, ring_is_domain);
  const DerivedPartition dp = derive(*g, p);
  TechnicalLemmaReport report{centralizer_basis(block_spanning_set(g, p, 2, 1), SubspaceBasis::full(g)), {}};
  Element<Rational> total(g);
  for (const auto& f : report.centralizer.elements()) {
    check_lemma_items(f, p, dp, report.items);
    total += f;
  }
  check_lemma_items(total, p, dp, report.items);
  return report;
}

MaxCommCandidate build_t(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain) {
  require_prime(*g, ring_is_domain);
  make_partition(*g, p.u1, p.u2);
  MaxCommCandidate t{center_basis(g) + block_subspace(g, p, 2, 1)};
  const auto gens = t.basis.elements();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(gens[i], gens[j]).is_zero()) throw NonCommutativeError(gens[i], gens[j]);
  return t;
}

MainTheoremReport verify_main_theorem(const GroupoidPtr& g, const UnitPartition& p, bool ring_is_domain) {
  const MaxCommCandidate t = build_t(g, p, ring_is_domain);
  MainTheoremReport report;
  report.dim_center = center_basis(g).dim();
  report.dim_a21 = Index(double_coset(*g, p.u2, p.u1).size());
  report.maximality = is_maximal_commutative(t.basis, SubspaceBasis::full(g));
  return report;
}

}  // namespace steinberg
