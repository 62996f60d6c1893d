#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "penta/bitpoly.hpp"

namespace penta {

/// Reduction subfamily, selecting which specialized reducer applies.
/// c == 1 takes precedence over b == 2c (the m = 5 member (2,1) is
/// handled by the two-step reducer).
enum class Subfamily { C1, General, B2C };

const char* subfamily_name(Subfamily s);

/// Exponent pair (b, c) of x^(2b+c) + x^(b+c) + x^b + x^c + 1, with the
/// derived degree m = 2b+c and second exponent a = b+c.
struct PentaShape {
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t m = 0;  // 2b + c
  std::uint32_t a = 0;  // b + c
  Subfamily subfamily = Subfamily::General;

  friend bool operator==(const PentaShape&, const PentaShape&) = default;
};

/// Validates b > c > 0 and fills the derived fields.
/// Throws std::invalid_argument naming the violated constraint.
PentaShape make_shape(std::uint32_t b, std::uint32_t c);

/// Parses "b,c" decimal text.
PentaShape parse_shape(const std::string& text);

/// The pentanomial itself: bits set at {0, c, b, b+c, 2b+c}.
BitPoly to_poly(const PentaShape& s);

/// Substitution step counts for the exponents a = b+c, b, and c.
struct StepCounts {
  int k_a = 0;  // 2 when c = 1, 3 when c > 1
  int k_b = 0;  // always 2
  int k_c = 0;  // 1 when c = 1, 2 when c > 1
};

/// Computed from the floor formulas, then cross-checked against the
/// case values.
StepCounts reduction_steps(const PentaShape& s);

/// Rabin's criterion: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1
/// for every prime p dividing m.
bool is_irreducible(const PentaShape& s);

/// All irreducible family members with 5 <= m <= max_m, ordered by
/// (m, b) ascending.
std::vector<PentaShape> enumerate(std::uint32_t max_m);

namespace detail {

/// D mod f(s) by repeated substitution of x^m = x^a + x^b + x^c + 1.
/// Word-level; used by the irreducibility test.
BitPoly mod_penta(BitPoly d, const PentaShape& s);

}  // namespace detail

}  // namespace penta
