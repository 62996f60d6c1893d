#include "penta/bitpoly.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace penta;

TEST_CASE("addition is coefficient-wise XOR") {
  BitPoly x1 = BitPoly::from_exponents({1, 0});  // x+1
  CHECK((x1 ^ x1).is_zero());

  BitPoly p = BitPoly::from_exponents({3, 1});
  CHECK((p ^ BitPoly::zero()) == p);
  CHECK((BitPoly::from_exponents({3, 1}) ^ BitPoly::from_exponents({2, 1})) ==
        BitPoly::from_exponents({3, 2}));
}

TEST_CASE("degree with zero sentinel") {
  CHECK(!BitPoly::zero().degree().has_value());
  CHECK(BitPoly::one().degree() == std::size_t{0});
  CHECK(BitPoly::monomial(163).degree() == std::size_t{163});
}

TEST_CASE("equality is independent of capacity") {
  BitPoly a = BitPoly::monomial(5);
  BitPoly b = BitPoly::monomial(5);
  b.set_bit(200);
  b.set_bit(200, false);  // leaves a longer word vector behind
  CHECK(a == b);
  CHECK(b.degree() == std::size_t{5});
}

TEST_CASE("hex serialization") {
  BitPoly f = BitPoly::from_exponents({5, 3, 2, 1, 0});
  CHECK(f.to_hex() == "2F");
  CHECK(BitPoly::from_hex("2F") == f);
  CHECK(BitPoly::zero().to_hex() == "0");
  CHECK(BitPoly::from_hex("0").is_zero());
  CHECK(BitPoly::from_hex("100") == BitPoly::monomial(8));
  CHECK_THROWS_AS(BitPoly::from_hex("2G"), std::invalid_argument);
  CHECK_THROWS_AS(BitPoly::from_hex(""), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    BitPoly p = oracles::random_poly(rng, 1 + static_cast<std::size_t>(rng() % 300));
    CHECK(BitPoly::from_hex(p.to_hex()) == p);
  }
}

TEST_CASE("shifts and ranges") {
  BitPoly p = BitPoly::from_hex("AB5");
  CHECK(p.shifted_left(67).shifted_right(67) == p);
  CHECK(p.shifted_right(3) == BitPoly::from_hex("156"));
  BitPoly r = p.masked_range(4, 7);
  for (std::size_t i = 0; i < 12; ++i) CHECK(r.bit(i) == (i >= 4 && i <= 7 && p.bit(i)));
}

TEST_CASE("popcount") {
  CHECK(BitPoly::from_exponents({100, 3, 0}).popcount() == 3);
  CHECK(BitPoly::zero().popcount() == 0);
}
