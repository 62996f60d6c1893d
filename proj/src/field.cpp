#include "penta/field.hpp"

#include <stdexcept>

namespace penta {

FieldCtx::FieldCtx(const PentaShape& shape) : shape_(shape), modulus_(to_poly(shape)) {}

FieldCtx FieldCtx::make(const PentaShape& shape) {
  if (!is_irreducible(shape))
    throw std::invalid_argument("pentanomial is reducible: quotient is a ring, not a field");
  return FieldCtx(shape);
}

FieldElement FieldCtx::element(const BitPoly& value) const {
  auto deg = value.degree();
  if (deg && *deg >= shape_.m) return FieldElement(this, reduce(value, shape_));
  return FieldElement(this, value);
}

FieldElement FieldCtx::zero() const { return FieldElement(this, BitPoly::zero()); }

FieldElement FieldCtx::one() const { return FieldElement(this, BitPoly::one()); }

void FieldElement::require_same_ctx(const FieldElement& other) const {
  if (!(ctx_ == other.ctx_ || *ctx_ == *other.ctx_))
    throw std::invalid_argument("field elements belong to different contexts");
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_ctx(other);
  return FieldElement(ctx_, reduce(mul_karatsuba(value_, other.value_), ctx_->shape()));
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_ctx(other);
  return FieldElement(ctx_, value_ ^ other.value_);
}

FieldElement FieldElement::square() const {
  return FieldElement(ctx_, reduce(penta::square(value_), ctx_->shape()));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = ctx_->one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base.square();
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::inv() const {
  if (value_.is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid on (f, value): maintain t with t * value = r (mod f)
  BitPoly r0 = ctx_->modulus(), r1 = value_;
  BitPoly t0 = BitPoly::zero(), t1 = BitPoly::one();
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    BitPoly t2 = t0 ^ mul_schoolbook(qr.quotient, t1);
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd = 1 since the modulus is irreducible and value != 0
  return FieldElement(ctx_, reduce(t0, ctx_->shape()));
}

}  // namespace penta
