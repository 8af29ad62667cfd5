#include <doctest.h>

#include "steinberg/lazy_pair.hpp"

#include <random>

using namespace steinberg;

namespace {

using L = LazyElement<Integer>;

L random_nonzero(std::mt19937_64& rng) {
  L f;
  while (f.is_zero()) {
    const std::size_t terms = 1 + rng() % 6;
    for (std::size_t k = 0; k < terms; ++k)
      f.add({1 + rng() % 9, 1 + rng() % 9}, Integer(std::int64_t(rng() % 7) - 3));
  }
  return f;
}

L unit_sum(std::uint64_t n) {
  L f;
  for (std::uint64_t i = 1; i <= n; ++i) f.add({i, i}, Integer(1));
  return f;
}

}  // namespace

TEST_CASE("noncentral witnesses for small elements") {
  const auto g1 = find_noncentral_witness(L::basis({1, 1}));
  CHECK(g1 == L::basis({1, 2}));
  CHECK(commutator(L::basis({1, 1}), g1) == L::basis({1, 2}));

  const auto g2 = find_noncentral_witness(L::basis({1, 2}));
  CHECK(g2 == L::basis({2, 3}));
  CHECK(commutator(L::basis({1, 2}), g2)({1, 3}) != 0);

  for (std::uint64_t n = 1; n <= 6; ++n) {
    const auto g = find_noncentral_witness(unit_sum(n));
    CHECK(g == L::basis({n, n + 1}));
    CHECK_FALSE(commutator(unit_sum(n), g).is_zero());
  }
  CHECK_THROWS(find_noncentral_witness(L{}));
}

TEST_CASE("the lazy algebra has trivial center: random witnesses") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const L f = random_nonzero(rng);
    CHECK_FALSE(commutator(f, find_noncentral_witness(f)).is_zero());
  }
}

TEST_CASE("lazy convolution is associative") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const L a = random_nonzero(rng), b = random_nonzero(rng), c = random_nonzero(rng);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
}

TEST_CASE("elements with a diagonal part lie outside C(A21)") {
  std::mt19937_64 rng(37);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto w = find_a21_witness(unit_sum(n));
    REQUIRE(w.has_value());
    CHECK(lazy_block(*w, 2, 1) == *w);
    CHECK_FALSE(commutator(unit_sum(n), *w).is_zero());
  }
  for (int t = 0; t < 200; ++t) {
    const L f = random_nonzero(rng);
    const auto w = find_a21_witness(f);
    const L diag = lazy_block(f, 1, 1) + lazy_block(f, 2, 2);
    REQUIRE(w.has_value() == !diag.is_zero());
    if (!w) continue;
    CHECK(lazy_block(*w, 2, 1) == *w);
    CHECK_FALSE(commutator(f, *w).is_zero());
  }
  // Purely off-diagonal: no witness.
  L off;
  off.add({1, 2}, Integer(1));
  CHECK_FALSE(find_a21_witness(off).has_value());
}

TEST_CASE("lazy elements reject index 0") {
  L f;
  CHECK_THROWS(f.add({0, 1}, Integer(1)));
}
