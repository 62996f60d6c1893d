#include "penta/reduce.hpp"

#include <cassert>
#include <stdexcept>

#include "penta/gf2x.hpp"

namespace penta {

namespace {

// Coefficient run: sum over i in [lo, hi] of d_{i+off} x^i, with d the
// original input coefficients.
struct Segment {
  std::size_t off;
  std::size_t lo;
  std::size_t hi;
};

BitPoly segment_content(const BitPoly& d, const Segment& seg) {
  return d.shifted_right(seg.off).masked_range(seg.lo, seg.hi);
}

void check_input_length(const BitPoly& d, const PentaShape& s) {
  auto deg = d.degree();
  if (deg && *deg > 2 * static_cast<std::size_t>(s.m) - 2)
    throw std::invalid_argument("input exceeds 2m-2 bits of degree");
}

void load_bits(const BitPoly& d, std::vector<std::uint8_t>& buf, std::size_t n) {
  buf.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) buf[i] = d.bit(i);
}

BitPoly pack_bits(const std::vector<std::uint8_t>& buf, std::size_t n) {
  BitPoly r;
  for (std::size_t i = 0; i < n; ++i)
    if (buf[i]) r.set_bit(i);
  return r;
}

}  // namespace

std::pair<BitPoly, ReductionTrace> reduce_generic(const BitPoly& d, const PentaShape& s) {
  check_input_length(d, s);
  const std::size_t m = s.m;

  ReductionTrace trace;
  BitPoly result = d.low_bits(m);

  ReductionStep step0;
  step0.a_poly = d.masked_range(m, 2 * m - 2);
  step0.b_poly = result;
  step0.a_terms = 1;
  step0.b_terms = 1;
  trace.steps.push_back(std::move(step0));

  std::vector<Segment> a_segs{{0, m, 2 * m - 2}};
  const std::size_t shifts[4] = {s.a, s.b, s.c, 0};

  while (!a_segs.empty()) {
    std::vector<Segment> next;
    ReductionStep step;
    step.b_terms = static_cast<int>(4 * a_segs.size());
    for (const Segment& seg : a_segs) {
      assert(seg.lo == m);
      for (std::size_t e : shifts) {
        Segment gen{seg.off + m - e, e, seg.hi - m + e};
        // part below x^m stays; part at or above x^m feeds the next step
        Segment bpart{gen.off, gen.lo, std::min(gen.hi, m - 1)};
        BitPoly content = segment_content(d, bpart);
        step.b_poly ^= content;
        result ^= content;
        if (gen.hi >= m) {
          Segment apart{gen.off, m, gen.hi};
          step.a_poly ^= segment_content(d, apart);
          next.push_back(apart);
        }
      }
    }
    step.a_terms = static_cast<int>(next.size());
    trace.steps.push_back(std::move(step));
    ++trace.total_steps;
    a_segs = std::move(next);
  }
  return {std::move(result), trace};
}

BitPoly reduce_c1(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws) {
  if (s.c != 1) throw std::invalid_argument("reduce_c1 requires a shape with c = 1");
  check_input_length(d, s);
  const std::size_t b = s.b;
  const std::size_t n = 4 * b + 1;
  load_bits(d, ws.in, n);
  ws.out.assign(2 * b + 1, 0);
  ws.t1.assign(b - 1, 0);
  ws.t2.assign(b, 0);
  gf2x::BoolAlg alg;
  detail::c1_core(alg, std::span<const std::uint8_t>(ws.in), std::span<std::uint8_t>(ws.out),
                  std::span<std::uint8_t>(ws.t1), std::span<std::uint8_t>(ws.t2), b);
  return pack_bits(ws.out, 2 * b + 1);
}

BitPoly reduce_general(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws) {
  if (s.c <= 1) throw std::invalid_argument("reduce_general requires a shape with c > 1");
  check_input_length(d, s);
  const std::size_t b = s.b, c = s.c;
  const std::size_t n = 4 * b + 2 * c - 1;
  load_bits(d, ws.in, n);
  ws.out.assign(2 * b + c, 0);
  ws.t1.assign(b - 1, 0);
  gf2x::BoolAlg alg;
  detail::general_core(alg, std::span<const std::uint8_t>(ws.in), std::span<std::uint8_t>(ws.out),
                       std::span<std::uint8_t>(ws.t1), b, c);
  return pack_bits(ws.out, 2 * b + c);
}

BitPoly reduce_b2c(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws) {
  if (s.subfamily != Subfamily::B2C)
    throw std::invalid_argument("reduce_b2c requires a shape with b = 2c and c > 1");
  check_input_length(d, s);
  const std::size_t c = s.c;
  const std::size_t n = 10 * c - 1;
  load_bits(d, ws.in, n);
  ws.out.assign(5 * c, 0);
  ws.t1.assign(c, 0);
  ws.t2.assign(c - 1, 0);
  gf2x::BoolAlg alg;
  detail::b2c_core(alg, std::span<const std::uint8_t>(ws.in), std::span<std::uint8_t>(ws.out),
                   std::span<std::uint8_t>(ws.t1), std::span<std::uint8_t>(ws.t2), c);
  return pack_bits(ws.out, 5 * c);
}

BitPoly reduce(const BitPoly& d, const PentaShape& s, ReduceWorkspace& ws) {
  switch (s.subfamily) {
    case Subfamily::C1: return reduce_c1(d, s, ws);
    case Subfamily::B2C: return reduce_b2c(d, s, ws);
    case Subfamily::General: return reduce_general(d, s, ws);
  }
  throw std::logic_error("unreachable");
}

BitPoly reduce_c1(const BitPoly& d, const PentaShape& s) {
  ReduceWorkspace ws;
  return reduce_c1(d, s, ws);
}

BitPoly reduce_general(const BitPoly& d, const PentaShape& s) {
  ReduceWorkspace ws;
  return reduce_general(d, s, ws);
}

BitPoly reduce_b2c(const BitPoly& d, const PentaShape& s) {
  ReduceWorkspace ws;
  return reduce_b2c(d, s, ws);
}

BitPoly reduce(const BitPoly& d, const PentaShape& s) {
  ReduceWorkspace ws;
  return reduce(d, s, ws);
}

}  // namespace penta
