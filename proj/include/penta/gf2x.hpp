#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace penta::gf2x {

// Recursive Karatsuba over an abstract bit algebra. The same code path
// drives the concrete multiplier and the symbolic gate tracer, so the
// split convention here is frozen: operands of n coefficients split at
// s = n/2 into low [0,s) and high [s,n); three half products d0, d1, d2;
// result assembled as d0 XOR (d0^d1^d2)<<s XOR d2<<2s.
//
// An algebra provides:
//   using Bit = ...;
//   Bit zero();
//   Bit xor2(Bit, Bit);      // counted arithmetic XOR
//   Bit and2(Bit, Bit);
//   Bit join(Bit, Bit);      // recombination overlay (wiring XOR)
//
// join must compute XOR; algebras that track gate cost may account for
// it separately from xor2 (the overlay is data placement, not part of
// the multiplier's arithmetic XOR count).

template <class Alg>
using BitVec = std::vector<typename Alg::Bit>;

// XOR of two coefficient vectors; positions present in only one operand
// pass through without gates.
template <class Alg>
BitVec<Alg> xor_merge(Alg& alg, std::span<const typename Alg::Bit> a,
                      std::span<const typename Alg::Bit> b) {
  if (a.size() < b.size()) std::swap(a, b);
  BitVec<Alg> out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = alg.xor2(out[i], b[i]);
  return out;
}

template <class Alg>
BitVec<Alg> karatsuba(Alg& alg, std::span<const typename Alg::Bit> a,
                      std::span<const typename Alg::Bit> b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = std::max(a.size(), b.size());
  if (n == 1) return {alg.and2(a[0], b[0])};
  std::size_t s = n / 2;

  auto low = [s](std::span<const typename Alg::Bit> v) {
    return v.subspan(0, std::min(s, v.size()));
  };
  auto high = [s](std::span<const typename Alg::Bit> v) {
    return v.size() > s ? v.subspan(s) : std::span<const typename Alg::Bit>{};
  };

  BitVec<Alg> ma = xor_merge<Alg>(alg, low(a), high(a));
  BitVec<Alg> mb = xor_merge<Alg>(alg, low(b), high(b));

  BitVec<Alg> d0 = karatsuba<Alg>(alg, low(a), low(b));
  BitVec<Alg> d1 = karatsuba<Alg>(alg, ma, mb);
  BitVec<Alg> d2 = karatsuba<Alg>(alg, high(a), high(b));

  BitVec<Alg> cross = xor_merge<Alg>(alg, d1, d2);
  cross = xor_merge<Alg>(alg, cross, d0);

  BitVec<Alg> out(a.size() + b.size() - 1, alg.zero());
  auto overlay = [&](const BitVec<Alg>& src, std::size_t shift) {
    for (std::size_t i = 0; i < src.size(); ++i)
      out[shift + i] = alg.join(out[shift + i], src[i]);
  };
  overlay(d0, 0);
  overlay(cross, s);
  overlay(d2, 2 * s);
  return out;
}

/// Concrete algebra: bits are 0/1 bytes, joins are plain XORs.
struct BoolAlg {
  using Bit = std::uint8_t;
  Bit zero() { return 0; }
  Bit xor2(Bit a, Bit b) { return a ^ b; }
  Bit and2(Bit a, Bit b) { return a & b; }
  Bit join(Bit a, Bit b) { return a ^ b; }
};

/// Counts XOR executions; used to check that reducers run a fixed
/// operation count regardless of input data.
struct CountingAlg {
  using Bit = std::uint8_t;
  std::uint64_t xor_ops = 0;
  std::uint64_t and_ops = 0;
  Bit zero() { return 0; }
  Bit xor2(Bit a, Bit b) {
    ++xor_ops;
    return a ^ b;
  }
  Bit and2(Bit a, Bit b) {
    ++and_ops;
    return a & b;
  }
  Bit join(Bit a, Bit b) { return a ^ b; }
};

}  // namespace penta::gf2x
