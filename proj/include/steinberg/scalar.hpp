#pragma once

// Coefficient rings. Every ring used by the library is exact; the linear
// algebra always lifts to the rational fraction field.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steinberg {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Integers modulo N. Only here so that hypothesis checks can be exercised
/// with a ring that is not an integral domain (N composite).
template <std::uint32_t N>
class Modular {
  static_assert(N >= 2);

 public:
  constexpr Modular() = default;
  constexpr Modular(std::int64_t v) : value_(reduce(v)) {}  // NOLINT: implicit like an integer literal

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr Modular operator+(Modular a, Modular b) { return Modular(std::int64_t(a.value_) + b.value_); }
  friend constexpr Modular operator-(Modular a, Modular b) { return Modular(std::int64_t(a.value_) - b.value_); }
  friend constexpr Modular operator*(Modular a, Modular b) {
    return Modular(std::int64_t(std::uint64_t(a.value_) * b.value_ % N));
  }
  constexpr Modular operator-() const { return Modular(-std::int64_t(value_)); }
  constexpr Modular& operator+=(Modular o) { return *this = *this + o; }
  constexpr Modular& operator-=(Modular o) { return *this = *this - o; }
  constexpr Modular& operator*=(Modular o) { return *this = *this * o; }
  friend constexpr bool operator==(Modular, Modular) = default;

  friend std::ostream& operator<<(std::ostream& os, Modular m) { return os << m.value_; }

 private:
  static constexpr std::uint32_t reduce(std::int64_t v) {
    const auto r = v % std::int64_t(N);
    return std::uint32_t(r < 0 ? r + N : r);
  }
  std::uint32_t value_ = 0;
};

namespace detail {
constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static constexpr bool is_domain = true;
  static constexpr bool is_field = false;
  static constexpr std::string_view name = "int";
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_domain = true;
  static constexpr bool is_field = true;
  static constexpr std::string_view name = "rat";
};

template <std::uint32_t N>
struct ScalarTraits<Modular<N>> {
  static constexpr bool is_domain = detail::is_prime(N);
  static constexpr bool is_field = detail::is_prime(N);
  static constexpr std::string_view name = "mod";
};

template <typename Scalar>
concept ExactScalar = requires { ScalarTraits<Scalar>::is_domain; };

/// Scalars that embed into the rationals (the ones the commutant machinery accepts).
template <typename Scalar>
concept RationalEmbeddable = std::same_as<Scalar, Integer> || std::same_as<Scalar, Rational>;

inline Rational to_rational(const Integer& z) { return Rational(z); }
inline const Rational& to_rational(const Rational& q) { return q; }

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

/// "n" when the denominator is one, "n/d" otherwise.
inline std::string format_scalar(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}
inline std::string format_scalar(const Integer& z) { return z.str(); }
template <std::uint32_t N>
std::string format_scalar(const Modular<N>& m) {
  return std::to_string(m.value());
}

/// Parses "n" or "n/d"; throws std::invalid_argument on malformed text or,
/// for Integer, a non-integral value.
template <typename Scalar>
Scalar parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  const auto slash = text.find('/');
  try {
    const Integer num(std::string(text.substr(0, slash)));
    if (slash == std::string_view::npos) return Rational(num);
    const Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
}

template <>
inline Integer parse_scalar<Integer>(std::string_view text) {
  const Rational q = parse_scalar<Rational>(text);
  if (boost::multiprecision::denominator(q) != 1)
    throw std::invalid_argument("non-integral scalar '" + std::string(text) + "' in integer mode");
  return boost::multiprecision::numerator(q);
}

/// Converts a rational to Scalar; exact for Rational, integral values only for Integer.
template <typename Scalar>
Scalar from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <>
inline Integer from_rational<Integer>(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw std::domain_error("value is not integral");
  return boost::multiprecision::numerator(q);
}

}  // namespace steinberg
