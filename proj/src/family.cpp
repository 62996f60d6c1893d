#include "penta/family.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace penta {

namespace {

// floor division for possibly negative numerators
long floor_div(long num, long den) {
  long q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;
  return q;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

const char* subfamily_name(Subfamily s) {
  switch (s) {
    case Subfamily::C1: return "c1";
    case Subfamily::General: return "general";
    case Subfamily::B2C: return "b2c";
  }
  return "?";
}

PentaShape make_shape(std::uint32_t b, std::uint32_t c) {
  if (c == 0) throw std::invalid_argument("invalid shape: c > 0 violated");
  if (b <= c) throw std::invalid_argument("invalid shape: b > c violated");
  PentaShape s;
  s.b = b;
  s.c = c;
  s.m = 2 * b + c;
  s.a = b + c;
  if (c == 1)
    s.subfamily = Subfamily::C1;
  else if (b == 2 * c)
    s.subfamily = Subfamily::B2C;
  else
    s.subfamily = Subfamily::General;
  return s;
}

PentaShape parse_shape(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("shape must be \"b,c\"");
  std::size_t pos = 0;
  unsigned long b = std::stoul(text.substr(0, comma), &pos);
  if (pos != comma) throw std::invalid_argument("shape must be \"b,c\"");
  unsigned long c = std::stoul(text.substr(comma + 1), &pos);
  if (pos != text.size() - comma - 1) throw std::invalid_argument("shape must be \"b,c\"");
  return make_shape(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
}

BitPoly to_poly(const PentaShape& s) {
  return BitPoly::from_exponents({0, s.c, s.b, static_cast<std::size_t>(s.a), static_cast<std::size_t>(s.m)});
}

StepCounts reduction_steps(const PentaShape& s) {
  long b = s.b, c = s.c;
  StepCounts k;
  k.k_a = static_cast<int>(floor_div(c - 2, b) + 3);
  k.k_b = static_cast<int>(floor_div(b - 2, b + c) + 2);
  k.k_c = static_cast<int>(floor_div(c - 2, 2 * b) + 2);
  assert(k.k_a == (c == 1 ? 2 : 3));
  assert(k.k_b == 2);
  assert(k.k_c == (c == 1 ? 1 : 2));
  return k;
}

namespace detail {

BitPoly mod_penta(BitPoly d, const PentaShape& s) {
  for (;;) {
    auto deg = d.degree();
    if (!deg || *deg < s.m) return d;
    BitPoly high = d.shifted_right(s.m);
    d = d.low_bits(s.m);
    d ^= high;
    d.xor_shifted(high, s.c);
    d.xor_shifted(high, s.b);
    d.xor_shifted(high, s.a);
  }
}

}  // namespace detail

bool is_irreducible(const PentaShape& s) {
  const BitPoly f = to_poly(s);
  const BitPoly x = BitPoly::x();
  const std::uint32_t m = s.m;

  auto primes = distinct_prime_factors(m);
  BitPoly u = x;
  for (std::uint32_t k = 1; k <= m; ++k) {
    u = detail::mod_penta(square(u), s);
    for (std::uint32_t p : primes) {
      if (k == m / p) {
        if (!gcd(u ^ x, f).is_one()) return false;
      }
    }
  }
  return u == x;
}

std::vector<PentaShape> enumerate(std::uint32_t max_m) {
  std::vector<PentaShape> out;
  for (std::uint32_t m = 5; m <= max_m; ++m) {
    for (std::uint32_t b = m / 3 + 1; 2 * b + 1 <= m; ++b) {
      PentaShape s = make_shape(b, m - 2 * b);
      if (is_irreducible(s)) out.push_back(s);
    }
  }
  return out;
}

}  // namespace penta
