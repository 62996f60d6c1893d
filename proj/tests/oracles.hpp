#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: trial division for small-degree irreducibility, a divrem-based
// distinct-degree irreducibility test, and seeded random polynomials.

#include <cstdint>
#include <random>

#include "penta/bitpoly.hpp"

namespace oracles {

inline penta::BitPoly random_poly(std::mt19937_64& rng, std::size_t nbits) {
  penta::BitPoly p;
  for (std::size_t i = 0; i < nbits; i += 64) {
    std::uint64_t w = rng();
    for (std::size_t b = 0; b < 64 && i + b < nbits; ++b)
      if ((w >> b) & 1) p.set_bit(i + b);
  }
  return p;
}

// Exhaustive trial division by every polynomial of degree 1..deg(f)/2.
// Only usable for small degrees.
inline bool irreducible_by_trial_division(const penta::BitPoly& f) {
  auto df = f.degree();
  if (!df || *df == 0) return false;
  for (std::size_t d = 1; 2 * d <= *df; ++d) {
    // candidates: top bit set, any lower bits
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      penta::BitPoly g;
      g.set_bit(d);
      for (std::size_t i = 0; i < d; ++i)
        if ((low >> i) & 1) g.set_bit(i);
      if (penta::divrem(f, g).remainder.is_zero()) return false;
    }
  }
  return true;
}

// f irreducible iff x^(2^m) = x mod f and gcd(x^(2^k) - x, f) = 1 for
// every k <= m/2. Uses only square + divrem, no pentanomial shortcuts.
inline bool irreducible_by_ddf(const penta::BitPoly& f) {
  auto df = f.degree();
  if (!df || *df == 0) return false;
  const std::size_t m = *df;
  const penta::BitPoly x = penta::BitPoly::x();
  penta::BitPoly u = penta::divrem(x, f).remainder;
  for (std::size_t k = 1; k <= m; ++k) {
    u = penta::divrem(penta::square(u), f).remainder;
    if (k <= m / 2) {
      penta::BitPoly g = u ^ x;
      if (g.is_zero() || !penta::gcd(g, f).is_one()) return false;
    }
  }
  return u == x;
}

}  // namespace oracles
