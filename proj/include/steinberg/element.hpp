#pragma once

// Elements of the Steinberg algebra of a finite discrete groupoid: finitely
// supported functions on morphisms, multiplied by convolution.

#include "steinberg/groupoid.hpp"
#include "steinberg/scalar.hpp"

#include <map>
#include <optional>
#include <utility>

namespace steinberg {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse canonical form: only nonzero coefficients are stored, so equality
/// is structural.
template <typename Scalar>
class Element {
 public:
  using Terms = std::map<MorphismId, Scalar>;

  explicit Element(GroupoidPtr carrier) : carrier_(std::move(carrier)) {}
  Element(GroupoidPtr carrier, const Terms& terms) : carrier_(std::move(carrier)) {
    for (const auto& [x, c] : terms) add(x, c);
  }

  static Element basis(GroupoidPtr carrier, MorphismId x) {
    Element e(std::move(carrier));
    e.add(x, Scalar(1));
    return e;
  }

  const GroupoidPtr& carrier_ptr() const { return carrier_; }
  const Groupoid& carrier() const { return *carrier_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar operator()(MorphismId x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  MorphismSet support() const {
    MorphismSet s;
    for (const auto& [x, c] : terms_) s.insert(x);
    return s;
  }

  Element& add(MorphismId x, const Scalar& c) {
    if (x.value >= carrier_->size()) throw AlgebraError("morphism outside the carrier groupoid");
    if (is_zero_scalar(c)) return *this;
    auto [it, fresh] = terms_.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
    return *this;
  }

  Element& operator+=(const Element& o) {
    same_carrier(o);
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    same_carrier(o);
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
  }
  Element& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = is_zero_scalar(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.carrier_ == b.carrier_ && a.terms_ == b.terms_;
  }

  void same_carrier(const Element& o) const {
    if (carrier_ != o.carrier_) throw AlgebraError("elements live over different groupoids");
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return s == Scalar(0); }

  GroupoidPtr carrier_;
  Terms terms_;
};

/// (f*g)(z) = sum over factorizations z = xy of f(x) g(y).
template <typename Scalar>
Element<Scalar> convolve(const Element<Scalar>& f, const Element<Scalar>& g) {
  f.same_carrier(g);
  const Groupoid& G = f.carrier();
  std::map<MorphismId, std::vector<std::pair<MorphismId, const Scalar*>>> g_by_ran;
  for (const auto& [y, b] : g.terms()) g_by_ran[G.ran(y)].push_back({y, &b});

  Element<Scalar> out(f.carrier_ptr());
  for (const auto& [x, a] : f.terms()) {
    auto it = g_by_ran.find(G.dom(x));
    if (it == g_by_ran.end()) continue;
    for (const auto& [y, b] : it->second) out.add(G(x, y), a * *b);
  }
  return out;
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& f, const Element<Scalar>& g) {
  return convolve(f, g);
}

template <typename Scalar>
Element<Scalar> commutator(const Element<Scalar>& f, const Element<Scalar>& g) {
  return convolve(f, g) - convolve(g, f);
}

template <typename Scalar>
Element<Scalar> indicator(const GroupoidPtr& carrier, const Slice& b) {
  Element<Scalar> out(carrier);
  for (MorphismId x : b.members()) out.add(x, Scalar(1));
  return out;
}

/// Sum of indicators of an arbitrary finite subset (not necessarily a slice).
template <typename Scalar>
Element<Scalar> subset_sum(const GroupoidPtr& carrier, const MorphismSet& s) {
  Element<Scalar> out(carrier);
  for (MorphismId x : s) out.add(x, Scalar(1));
  return out;
}

/// Pointwise closed form of f*1_B: (f 1_B)(x) = f(x y^{-1}) for the unique
/// y in B with dom(y) = dom(x), and 0 when dom(x) is not in dom(B).
template <typename Scalar>
Element<Scalar> mul_indicator_right(const Element<Scalar>& f, const Slice& b) {
  const Groupoid& G = f.carrier();
  std::map<MorphismId, MorphismId> by_dom;
  for (MorphismId y : b.members()) by_dom.emplace(G.dom(y), y);
  Element<Scalar> out(f.carrier_ptr());
  for (MorphismId x : G.morphisms()) {
    auto it = by_dom.find(G.dom(x));
    if (it == by_dom.end()) continue;
    out.add(x, f(G(x, G.inv(it->second))));
  }
  return out;
}

/// Pointwise closed form of 1_B*f: (1_B f)(x) = f(y^{-1} x) for the unique
/// y in B with ran(y) = ran(x), and 0 when ran(x) is not in ran(B).
template <typename Scalar>
Element<Scalar> mul_indicator_left(const Slice& b, const Element<Scalar>& f) {
  const Groupoid& G = f.carrier();
  std::map<MorphismId, MorphismId> by_ran;
  for (MorphismId y : b.members()) by_ran.emplace(G.ran(y), y);
  Element<Scalar> out(f.carrier_ptr());
  for (MorphismId x : G.morphisms()) {
    auto it = by_ran.find(G.ran(x));
    if (it == by_ran.end()) continue;
    out.add(x, f(G(G.inv(it->second), x)));
  }
  return out;
}

/// Whether 1_B 1_D = 1_{BD}. Always true; exposed as a property hook.
template <typename Scalar = Integer>
bool slice_product_identity_check(const GroupoidPtr& carrier, const Slice& b, const Slice& d) {
  const auto lhs = convolve(indicator<Scalar>(carrier, b), indicator<Scalar>(carrier, d));
  return lhs == subset_sum<Scalar>(carrier, product(*carrier, b.members(), d.members()));
}

/// Failure of the class-function conditions on X. `conjugator` is empty when
/// condition (1) failed (f(x) != 0 off the isotropy).
struct ClassFunctionViolation {
  MorphismId x;
  std::optional<MorphismId> conjugator;
};

/// f is a class function on X when for every x in X: f(x) != 0 forces
/// dom(x) = ran(x), and f(z x z^{-1}) = f(x) whenever dom(z) = ran(x) = dom(x)
/// and z x z^{-1} lies in X. Returns the first violation, if any.
template <typename Scalar>
std::optional<ClassFunctionViolation> class_function_violation(const Element<Scalar>& f, const MorphismSet& x_set) {
  const Groupoid& G = f.carrier();
  for (MorphismId x : x_set) {
    const Scalar fx = f(x);
    const bool isotropy = G.dom(x) == G.ran(x);
    if (!isotropy) {
      if (fx != Scalar(0)) return ClassFunctionViolation{x, std::nullopt};
      continue;
    }
    for (MorphismId z : G.morphisms()) {
      if (G.dom(z) != G.dom(x)) continue;
      const MorphismId conj = G(G(z, x), G.inv(z));
      if (x_set.contains(conj) && f(conj) != fx) return ClassFunctionViolation{x, z};
    }
  }
  return std::nullopt;
}

template <typename Scalar>
bool is_class_function(const Element<Scalar>& f, const MorphismSet& x_set) {
  return !class_function_violation(f, x_set).has_value();
}

template <typename Scalar>
bool is_class_function(const Element<Scalar>& f) {
  const auto all = f.carrier().morphisms();
  return is_class_function(f, MorphismSet(all.begin(), all.end()));
}

template <typename To, typename From>
Element<To> element_cast(const Element<From>& f) {
  Element<To> out(f.carrier_ptr());
  for (const auto& [x, c] : f.terms()) {
    if constexpr (std::is_same_v<To, Rational>)
      out.add(x, to_rational(c));
    else
      out.add(x, from_rational<To>(to_rational(c)));
  }
  return out;
}

}  // namespace steinberg
