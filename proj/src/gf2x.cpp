#include "penta/gf2x.hpp"

#include "penta/bitpoly.hpp"

namespace penta {

BitPoly mul_karatsuba(const BitPoly& p, const BitPoly& q) {
  auto dp = p.degree();
  auto dq = q.degree();
  if (!dp || !dq) return BitPoly::zero();
  std::vector<std::uint8_t> a(*dp + 1), b(*dq + 1);
  for (std::size_t i = 0; i <= *dp; ++i) a[i] = p.bit(i);
  for (std::size_t i = 0; i <= *dq; ++i) b[i] = q.bit(i);
  gf2x::BoolAlg alg;
  auto out = gf2x::karatsuba<gf2x::BoolAlg>(alg, a, b);
  BitPoly r;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i]) r.set_bit(i);
  return r;
}

}  // namespace penta
