#include "penta/field.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace penta;

TEST_CASE("context construction requires irreducibility") {
  CHECK_NOTHROW(FieldCtx::make(make_shape(2, 1)));
  CHECK_FALSE(is_irreducible(make_shape(3, 1)));
  CHECK_THROWS_AS(FieldCtx::make(make_shape(3, 1)), std::invalid_argument);
}

TEST_CASE("multiplicative identity and m=5 square") {
  FieldCtx ctx = FieldCtx::make(make_shape(2, 1));
  FieldElement x4 = ctx.element(BitPoly::monomial(4));
  CHECK((x4 * ctx.one()) == x4);
  CHECK((x4 * x4).value() == BitPoly::from_exponents({3, 0}));
  CHECK(x4.square() == x4 * x4);
}

TEST_CASE("multiplication matches schoolbook+divrem oracle at m=163") {
  PentaShape s = make_shape(63, 37);
  FieldCtx ctx = FieldCtx::make(s);
  BitPoly f = to_poly(s);
  std::mt19937_64 rng(163);
  for (int i = 0; i < 300; ++i) {
    BitPoly xv = oracles::random_poly(rng, s.m);
    BitPoly yv = oracles::random_poly(rng, s.m);
    FieldElement r = ctx.element(xv) * ctx.element(yv);
    CHECK(r.value() == divrem(mul_schoolbook(xv, yv), f).remainder);
    auto deg = r.value().degree();
    if (deg) CHECK(*deg < s.m);
  }
}

TEST_CASE("square, pow, Fermat, Frobenius") {
  PentaShape s = make_shape(13, 3);  // m = 29
  FieldCtx ctx = FieldCtx::make(s);
  std::mt19937_64 rng(29);

  CHECK(ctx.zero().square() == ctx.zero());
  CHECK(ctx.one().square() == ctx.one());
  CHECK(ctx.zero().pow(0) == ctx.one());
  for (int i = 0; i < 100; ++i) {
    FieldElement x = ctx.element(oracles::random_poly(rng, s.m));
    CHECK(x.square() == x * x);
    CHECK(x.pow(0) == ctx.one());
    CHECK(x.pow(1) == x);
    CHECK(x.pow(5) == x * x * x * x * x);
    // x^(2^m) = x, via m squarings
    FieldElement y = x;
    for (std::uint32_t k = 0; k < s.m; ++k) y = y.square();
    CHECK(y == x);
  }
}

TEST_CASE("inverses") {
  PentaShape s = make_shape(63, 37);
  FieldCtx ctx = FieldCtx::make(s);
  std::mt19937_64 rng(4);
  CHECK(ctx.one().inv() == ctx.one());
  CHECK_THROWS_AS(ctx.zero().inv(), std::domain_error);
  for (int i = 0; i < 100; ++i) {
    FieldElement x = ctx.element(oracles::random_poly(rng, s.m));
    if (x.is_zero()) continue;
    FieldElement xi = x.inv();
    CHECK((x * xi) == ctx.one());
    CHECK(xi.inv() == x);
  }
}

TEST_CASE("field axioms, sampled") {
  PentaShape s = make_shape(10, 9);  // m = 29, general subfamily
  FieldCtx ctx = FieldCtx::make(s);
  std::mt19937_64 rng(35);
  for (int i = 0; i < 300; ++i) {
    FieldElement a = ctx.element(oracles::random_poly(rng, s.m));
    FieldElement b = ctx.element(oracles::random_poly(rng, s.m));
    FieldElement c = ctx.element(oracles::random_poly(rng, s.m));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * ctx.one() == a);
    CHECK(a + ctx.zero() == a);
    CHECK((a + a).is_zero());
  }
}

TEST_CASE("context mismatch is rejected") {
  FieldCtx c5 = FieldCtx::make(make_shape(2, 1));
  FieldCtx c9 = FieldCtx::make(make_shape(4, 1));
  FieldElement a = c5.element(BitPoly::monomial(3));
  FieldElement b = c9.element(BitPoly::monomial(3));
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("element values are canonical") {
  PentaShape s = make_shape(2, 1);
  FieldCtx ctx = FieldCtx::make(s);
  FieldElement e = ctx.element(BitPoly::monomial(8));  // reduced on entry
  CHECK(e.value() == BitPoly::from_exponents({3, 0}));
}
