#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace penta {

/// Dense polynomial over GF(2). Bit i of the word array is the coefficient
/// of x^i (little-endian bit order). Trailing zero words are allowed; all
/// observable behaviour is independent of capacity.
class BitPoly {
 public:
  BitPoly() = default;

  static BitPoly zero() { return BitPoly{}; }
  static BitPoly one() { return monomial(0); }
  static BitPoly x() { return monomial(1); }
  static BitPoly monomial(std::size_t i);
  static BitPoly from_exponents(std::initializer_list<std::size_t> exps);

  /// Parses the hex coefficient string (most significant digit first).
  /// Throws std::invalid_argument on non-hex characters or empty input.
  static BitPoly from_hex(std::string_view hex);

  /// Uppercase hex, most significant digit first, no leading zeros;
  /// the zero polynomial serializes as "0".
  std::string to_hex() const;

  bool is_zero() const;
  bool is_one() const;

  /// Degree of the polynomial; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value = true);
  std::size_t popcount() const;

  BitPoly& operator^=(const BitPoly& other);
  friend BitPoly operator^(BitPoly lhs, const BitPoly& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  BitPoly shifted_left(std::size_t n) const;
  BitPoly shifted_right(std::size_t n) const;

  /// XORs `other << shift` into this polynomial.
  void xor_shifted(const BitPoly& other, std::size_t shift);

  /// Bits [lo, hi] of this polynomial, kept at their positions.
  BitPoly masked_range(std::size_t lo, std::size_t hi) const;

  /// Bits [0, n) of this polynomial.
  BitPoly low_bits(std::size_t n) const;

  friend bool operator==(const BitPoly& a, const BitPoly& b);
  friend bool operator!=(const BitPoly& a, const BitPoly& b) { return !(a == b); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void ensure_bit_capacity(std::size_t nbits);
  void trim();

  friend BitPoly square(const BitPoly& p);

  std::vector<std::uint64_t> words_;
};

struct DivRem {
  BitPoly quotient;
  BitPoly remainder;
};

/// Coefficient-wise XOR.
inline BitPoly add(const BitPoly& p, const BitPoly& q) { return p ^ q; }

/// Carry-less product, shift-and-XOR over the set bits of q.
BitPoly mul_schoolbook(const BitPoly& p, const BitPoly& q);

/// Karatsuba product; identical coefficients to mul_schoolbook.
BitPoly mul_karatsuba(const BitPoly& p, const BitPoly& q);

/// p^2 as a polynomial (bit spread to even positions).
BitPoly square(const BitPoly& p);

/// Long division, most significant bit first. Throws std::domain_error
/// for a zero divisor.
DivRem divrem(const BitPoly& n, const BitPoly& d);

/// Euclidean gcd. Throws std::domain_error for gcd(0, 0).
BitPoly gcd(BitPoly p, BitPoly q);

/// x^(2^e) mod f, by e repeated squarings reduced with divrem.
/// Requires deg f >= 1.
BitPoly powmod_x(unsigned e, const BitPoly& f);

}  // namespace penta
