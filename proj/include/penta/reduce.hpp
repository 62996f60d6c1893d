#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "penta/bitpoly.hpp"
#include "penta/family.hpp"

namespace penta {

/// One step of the generic reduction. a_terms/b_terms count the summation
/// ranges generated by the substitution (before cancellation); they are
/// not popcounts of the polynomials.
struct ReductionStep {
  BitPoly a_poly;
  BitPoly b_poly;
  int a_terms = 0;
  int b_terms = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // steps[r] holds (A_r, B_r)
  int total_steps = 0;               // substitution rounds; equals k_{b+c}
};

/// Generic multi-step reduction: split D into the part above x^m and the
/// part below, substitute x^m = x^a + x^b + x^c + 1 on the high part, and
/// repeat until nothing is left above x^m. Returns D mod f(s) and the
/// step-by-step trace. Requires deg D <= 2m-2.
std::pair<BitPoly, ReductionTrace> reduce_generic(const BitPoly& d, const PentaShape& s);

/// Caller-owned scratch for the fast reducers; sized on first use and
/// reusable across calls and shapes.
struct ReduceWorkspace {
  std::vector<std::uint8_t> in;
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> t1;
  std::vector<std::uint8_t> t2;
};

/// Two-step reducer for c = 1 (constant 6b+1 XORs, depth 3).
BitPoly reduce_c1(const BitPoly& d, const PentaShape& s);
BitPoly reduce_c1(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws);

/// Three-step reducer for c > 1 (constant 6b+3c-2 XORs, depth 3).
BitPoly reduce_general(const BitPoly& d, const PentaShape& s);
BitPoly reduce_general(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws);

/// Reducer for the almost equally spaced subfamily b = 2c, c > 1
/// (constant 12c-1 XORs, depth 3).
BitPoly reduce_b2c(const BitPoly& d, const PentaShape& s);
BitPoly reduce_b2c(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws);

/// Dispatches on the shape's subfamily.
BitPoly reduce(const BitPoly& d, const PentaShape& s);
BitPoly reduce(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws);

namespace detail {

// Balanced XOR of up to four column operands: fold the first half against
// the second half so precomputed temporaries (depth 1) never chain past
// depth 3.
template <class Alg, std::size_t N>
typename Alg::Bit xor_fold(Alg& alg, const std::array<typename Alg::Bit, N>& ops, std::size_t n) {
  if (n == 1) return ops[0];
  if (n == 2) return alg.xor2(ops[0], ops[1]);
  if (n == 3) return alg.xor2(alg.xor2(ops[0], ops[1]), ops[2]);
  return alg.xor2(alg.xor2(ops[0], ops[1]), alg.xor2(ops[2], ops[3]));
}

// Algorithm for f = x^(2b+1) + x^(b+1) + x^b + x + 1.
// d: 4b+1 coefficients, out: 2b+1, t1: b-1, t4: b.
template <class Alg>
void c1_core(Alg& alg, std::span<const typename Alg::Bit> d, std::span<typename Alg::Bit> out,
             std::span<typename Alg::Bit> t1, std::span<typename Alg::Bit> t4, std::size_t b) {
  using Bit = typename Alg::Bit;
  for (std::size_t i = 0; i + 1 < b; ++i) t1[i] = alg.xor2(d[i + 2 * b + 1], d[i + 3 * b + 2]);
  for (std::size_t i = 0; i < b; ++i) t4[i] = alg.xor2(d[i + 2 * b + 1], d[i + 3 * b + 1]);

  out[0] = xor_fold(alg, std::array<Bit, 3>{d[0], d[3 * b + 1], t1[0]}, 3);
  for (std::size_t i = 1; i + 1 < b; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], t1[i], t4[i - 1]}, 3);
  out[b - 1] = xor_fold(alg, std::array<Bit, 3>{d[b - 1], d[3 * b], t4[b - 2]}, 3);
  out[b] = xor_fold(alg, std::array<Bit, 3>{d[b], t1[0], t4[b - 1]}, 3);
  for (std::size_t i = b + 1; i + 1 < 2 * b; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], t1[i - b], t1[i - b - 1]}, 3);
  out[2 * b - 1] = xor_fold(alg, std::array<Bit, 3>{d[2 * b - 1], d[3 * b], t1[b - 2]}, 3);
  out[2 * b] = xor_fold(alg, std::array<Bit, 3>{d[2 * b], d[3 * b + 1], d[3 * b]}, 3);
}

// Algorithm for f = x^(2b+c) + x^(b+c) + x^b + x^c + 1 with c > 1.
// The four contribution rows are combined per column so the critical
// path stays at three XOR levels.
// d: 4b+2c-1 coefficients, out: 2b+c, t1: b-1.
template <class Alg>
void general_core(Alg& alg, std::span<const typename Alg::Bit> d, std::span<typename Alg::Bit> out,
                  std::span<typename Alg::Bit> t1, std::size_t b, std::size_t c) {
  using Bit = typename Alg::Bit;
  for (std::size_t i = 0; i + 1 < b; ++i) t1[i] = alg.xor2(d[i + 2 * b + c], d[i + 3 * b + 2 * c]);

  // fourth row covers columns [0, b+2c-2]
  auto row4 = [&](std::size_t i) { return i < c ? d[i + 3 * b + c] : d[i + 3 * b]; };
  auto has_row4 = [&](std::size_t i) { return i + 2 <= b + 2 * c; };

  for (std::size_t i = 0; i < c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], row4(i), t1[i]}, 3);
  for (std::size_t i = c; i + 1 < b; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 4>{d[i], d[i + 2 * b], t1[i], row4(i)}, 4);
  out[b - 1] =
      xor_fold(alg, std::array<Bit, 4>{d[b - 1], d[3 * b + c - 1], d[3 * b - 1], row4(b - 1)}, 4);
  for (std::size_t i = b; i + 1 < b + c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 4>{d[i], d[i + 2 * b], t1[i - b], row4(i)}, 4);
  out[b + c - 1] = xor_fold(
      alg, std::array<Bit, 4>{d[b + c - 1], d[3 * b + c - 1], t1[c - 1], row4(b + c - 1)}, 4);
  for (std::size_t i = b + c; i + 1 < 2 * b; ++i) {
    std::array<Bit, 4> ops{d[i], t1[i - b], t1[i - b - c], Bit{}};
    if (has_row4(i)) {
      ops[3] = row4(i);
      out[i] = xor_fold(alg, ops, 4);
    } else {
      out[i] = xor_fold(alg, ops, 3);
    }
  }
  {
    std::size_t i = 2 * b - 1;
    std::array<Bit, 4> ops{d[i], d[3 * b + c - 1], t1[b - c - 1], Bit{}};
    if (has_row4(i)) {
      ops[3] = row4(i);
      out[i] = xor_fold(alg, ops, 4);
    } else {
      out[i] = xor_fold(alg, ops, 3);
    }
  }
  for (std::size_t i = 2 * b; i + 1 < 2 * b + c; ++i) {
    std::array<Bit, 4> ops{d[i], d[i + b + c], t1[i - b - c], Bit{}};
    if (has_row4(i)) {
      ops[3] = row4(i);
      out[i] = xor_fold(alg, ops, 4);
    } else {
      out[i] = xor_fold(alg, ops, 3);
    }
  }
  out[2 * b + c - 1] = xor_fold(
      alg,
      std::array<Bit, 3>{d[2 * b + c - 1], d[3 * b + c - 1], d[3 * b + 2 * c - 1]}, 3);
}

// Algorithm for the almost equally spaced f = x^5c + x^3c + x^2c + x^c + 1.
// d: 10c-1 coefficients, out: 5c, t1: c, t2: c-1.
template <class Alg>
void b2c_core(Alg& alg, std::span<const typename Alg::Bit> d, std::span<typename Alg::Bit> out,
              std::span<typename Alg::Bit> t1, std::span<typename Alg::Bit> t2, std::size_t c) {
  using Bit = typename Alg::Bit;
  for (std::size_t i = 0; i < c; ++i) t1[i] = alg.xor2(d[i + 6 * c], d[i + 5 * c]);
  for (std::size_t i = 0; i + 1 < c; ++i) t2[i] = alg.xor2(d[i + 9 * c], d[i + 7 * c]);

  for (std::size_t i = 0; i + 1 < c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 4>{d[i], d[i + 8 * c], d[i + 5 * c], d[i + 7 * c]}, 4);
  out[c - 1] = xor_fold(
      alg, std::array<Bit, 4>{d[c - 1], d[9 * c - 1], d[6 * c - 1], d[8 * c - 1]}, 4);
  for (std::size_t i = c; i + 1 < 2 * c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], t1[i - c], t2[i - c]}, 3);
  out[2 * c - 1] = xor_fold(alg, std::array<Bit, 3>{d[2 * c - 1], d[8 * c - 1], t1[c - 1]}, 3);
  for (std::size_t i = 2 * c; i < 3 * c; ++i) out[i] = alg.xor2(d[i], t1[i - 2 * c]);
  for (std::size_t i = 3 * c; i < 4 * c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], d[i + 5 * c], t1[i - 3 * c]}, 3);
  for (std::size_t i = 4 * c; i + 1 < 5 * c; ++i)
    out[i] = xor_fold(alg, std::array<Bit, 3>{d[i], d[i + 2 * c], t2[i - 4 * c]}, 3);
  out[5 * c - 1] =
      xor_fold(alg, std::array<Bit, 3>{d[5 * c - 1], d[8 * c - 1], d[7 * c - 1]}, 3);
}

}  // namespace detail

}  // namespace penta
