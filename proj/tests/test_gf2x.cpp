#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "penta/bitpoly.hpp"

using namespace penta;

TEST_CASE("schoolbook product basics") {
  BitPoly x1 = BitPoly::from_exponents({1, 0});
  CHECK(mul_schoolbook(x1, x1) == BitPoly::from_exponents({2, 0}));
  CHECK(mul_schoolbook(x1, BitPoly::from_exponents({2, 1, 0})) == BitPoly::from_exponents({3, 0}));
  CHECK(mul_schoolbook(BitPoly::from_hex("AB"), BitPoly::zero()).is_zero());
}

TEST_CASE("karatsuba equals schoolbook") {
  BitPoly x1 = BitPoly::from_exponents({1, 0});
  CHECK(mul_karatsuba(x1, x1) == BitPoly::from_exponents({2, 0}));
  BitPoly p = BitPoly::from_exponents({4, 1, 0});
  CHECK(mul_karatsuba(p, p) == BitPoly::from_exponents({8, 2, 0}));
  CHECK(mul_karatsuba(p, BitPoly::zero()).is_zero());

  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    std::size_t na = 1 + static_cast<std::size_t>(rng() % 1024);
    std::size_t nb = 1 + static_cast<std::size_t>(rng() % 1024);
    BitPoly a = oracles::random_poly(rng, na);
    BitPoly b = oracles::random_poly(rng, nb);
    REQUIRE(mul_karatsuba(a, b) == mul_schoolbook(a, b));
  }
}

TEST_CASE("ring axioms, sampled") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BitPoly a = oracles::random_poly(rng, 200);
    BitPoly b = oracles::random_poly(rng, 180);
    BitPoly c = oracles::random_poly(rng, 150);
    CHECK(mul_karatsuba(a, b) == mul_karatsuba(b, a));
    CHECK(mul_karatsuba(mul_karatsuba(a, b), c) == mul_karatsuba(a, mul_karatsuba(b, c)));
    CHECK(mul_karatsuba(a, b ^ c) == (mul_karatsuba(a, b) ^ mul_karatsuba(a, c)));
  }
}

TEST_CASE("squaring spreads coefficients to doubled indices") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    BitPoly p = oracles::random_poly(rng, 300);
    BitPoly sq = mul_karatsuba(p, p);
    CHECK(sq == square(p));
    for (std::size_t j = 0; j < 600; ++j) {
      if (j % 2 == 0)
        CHECK(sq.bit(j) == p.bit(j / 2));
      else
        CHECK_FALSE(sq.bit(j));
    }
  }
}

TEST_CASE("divrem") {
  BitPoly f = BitPoly::from_exponents({5, 3, 2, 1, 0});
  DivRem qr = divrem(BitPoly::monomial(8), f);
  CHECK(qr.remainder == BitPoly::from_exponents({3, 0}));
  CHECK((mul_schoolbook(qr.quotient, f) ^ qr.remainder) == BitPoly::monomial(8));

  BitPoly p = BitPoly::from_hex("DEADBEEF");
  CHECK(divrem(p, BitPoly::one()).quotient == p);
  CHECK(divrem(p, BitPoly::one()).remainder.is_zero());
  CHECK(divrem(BitPoly::from_hex("F"), BitPoly::monomial(9)).quotient.is_zero());
  CHECK(divrem(BitPoly::from_hex("F"), BitPoly::monomial(9)).remainder == BitPoly::from_hex("F"));
  CHECK_THROWS_AS(divrem(p, BitPoly::zero()), std::domain_error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    BitPoly n = oracles::random_poly(rng, 1 + static_cast<std::size_t>(rng() % 400));
    BitPoly d = oracles::random_poly(rng, 1 + static_cast<std::size_t>(rng() % 200));
    if (d.is_zero()) d = BitPoly::one();
    DivRem r = divrem(n, d);
    CHECK((mul_schoolbook(r.quotient, d) ^ r.remainder) == n);
    if (!r.remainder.is_zero()) CHECK(*r.remainder.degree() < *d.degree());
  }
}

TEST_CASE("gcd") {
  BitPoly p = BitPoly::from_hex("1234");
  CHECK(gcd(p, BitPoly::zero()) == p);
  CHECK(gcd(BitPoly::from_exponents({2, 0}), BitPoly::from_exponents({1, 0})) ==
        BitPoly::from_exponents({1, 0}));
  CHECK_THROWS_AS(gcd(BitPoly::zero(), BitPoly::zero()), std::domain_error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    BitPoly a = oracles::random_poly(rng, 120);
    BitPoly b = oracles::random_poly(rng, 90);
    if (a.is_zero() || b.is_zero()) continue;
    BitPoly g = gcd(a, b);
    CHECK(divrem(a, g).remainder.is_zero());
    CHECK(divrem(b, g).remainder.is_zero());
  }
}

TEST_CASE("powmod_x") {
  BitPoly f = BitPoly::from_exponents({2, 1, 0});
  CHECK(powmod_x(0, f) == BitPoly::x());
  CHECK(powmod_x(1, f) == BitPoly::from_exponents({1, 0}));

  // Fermat: x^(2^m) = x mod an irreducible f of degree m
  BitPoly f163 = BitPoly::from_exponents({163, 82, 81, 1, 0});
  CHECK(powmod_x(163, f163) == BitPoly::x());
}
