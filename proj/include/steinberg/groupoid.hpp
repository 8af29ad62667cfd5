#pragma once

// Finite discrete groupoids stored as explicit tables.
//
// Units are identity morphisms. Under the discrete topology every groupoid
// here is Hausdorff and ample, every finite subset is compact, and a compact
// slice is just a finite subset on which dom and ran are injective.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace steinberg {

struct MorphismId {
  std::uint32_t value = 0;
  friend auto operator<=>(const MorphismId&, const MorphismId&) = default;
};

using MorphismSet = std::set<MorphismId>;

struct CompositionEntry {
  MorphismId left, right, result;
};

class GroupoidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Morphisms are numbered 0..size()-1; the numbering is the total order used
/// for every listing and report. The table may violate the groupoid axioms;
/// validate() says which ones, and every other operation assumes a valid
/// groupoid.
class Groupoid {
 public:
  Groupoid(std::vector<std::string> labels, std::vector<MorphismId> units, std::vector<MorphismId> dom,
           std::vector<MorphismId> ran, std::vector<MorphismId> inv, const std::vector<CompositionEntry>& comp);

  std::size_t size() const { return labels_.size(); }
  std::vector<MorphismId> morphisms() const;
  const std::vector<MorphismId>& units() const { return units_; }
  bool is_unit(MorphismId x) const { return is_unit_[x.value]; }

  MorphismId dom(MorphismId x) const { return dom_[x.value]; }
  MorphismId ran(MorphismId x) const { return ran_[x.value]; }
  MorphismId inv(MorphismId x) const { return inv_[x.value]; }
  /// Table lookup; empty when the pair has no recorded product.
  std::optional<MorphismId> compose(MorphismId x, MorphismId y) const;
  /// Composition that the caller knows to be defined.
  MorphismId operator()(MorphismId x, MorphismId y) const;

  const std::string& label(MorphismId x) const { return labels_[x.value]; }
  std::optional<MorphismId> find(const std::string& label) const;

  std::vector<CompositionEntry> composition_entries() const;

 private:
  std::vector<std::string> labels_;
  std::vector<MorphismId> units_;
  std::vector<bool> is_unit_;
  std::vector<MorphismId> dom_, ran_, inv_;
  std::vector<std::int64_t> table_;  // size()*size(), -1 where undefined
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

struct Violation {
  std::string kind;
  std::vector<MorphismId> morphisms;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Groupoid& g);

// Test families.
GroupoidPtr pair_groupoid(std::size_t n);
/// Single-unit groupoid of a group given by its Cayley table over 0..k-1;
/// the identity is detected, not assumed to be 0.
GroupoidPtr group_groupoid(const std::vector<std::vector<std::size_t>>& cayley);
GroupoidPtr cyclic_group_groupoid(std::size_t order);
GroupoidPtr disjoint_union(const Groupoid& a, const Groupoid& b);

/// Discrete topology: every ordered pair of units is joined by a morphism.
bool is_topologically_transitive(const Groupoid& g);
/// {x : dom(x) = u, ran(x) = v}.
MorphismSet hom_set(const Groupoid& g, MorphismId u, MorphismId v);
/// True iff every isotropy group is trivial.
bool has_trivial_isotropy(const Groupoid& g);
/// Conjugacy classes of the isotropy part, each sorted, ordered by least member.
std::vector<std::vector<MorphismId>> conjugacy_classes(const Groupoid& g);

/// XY = {xy : dom(x) = ran(y)}.
MorphismSet product(const Groupoid& g, const MorphismSet& x, const MorphismSet& y);
MorphismSet inverse(const Groupoid& g, const MorphismSet& x);
MorphismSet dom_image(const Groupoid& g, const MorphismSet& x);
MorphismSet ran_image(const Groupoid& g, const MorphismSet& x);
/// dom^{-1}(units) as a subset of g.
MorphismSet dom_preimage(const Groupoid& g, const MorphismSet& units);

/// Finite subset on which dom and ran are injective.
class Slice {
 public:
  /// Throws GroupoidError naming the offending pair when members is not a slice.
  static Slice make(const Groupoid& g, MorphismSet members);
  static Slice units_of(const Groupoid& g);

  const MorphismSet& members() const { return members_; }
  bool empty() const { return members_.empty(); }

 private:
  explicit Slice(MorphismSet m) : members_(std::move(m)) {}
  MorphismSet members_;
};

}  // namespace steinberg
