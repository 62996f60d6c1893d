#pragma once

#include <cstdint>
#include <memory>

#include "penta/bitpoly.hpp"
#include "penta/family.hpp"
#include "penta/reduce.hpp"

namespace penta {

class FieldElement;

/// GF(2^m) bound to one family pentanomial. Construction verifies
/// irreducibility and throws if the quotient would only be a ring.
class FieldCtx {
 public:
  static FieldCtx make(const PentaShape& shape);

  const PentaShape& shape() const { return shape_; }
  const BitPoly& modulus() const { return modulus_; }
  std::uint32_t degree() const { return shape_.m; }

  /// Canonical element with value reduced below degree m.
  FieldElement element(const BitPoly& value) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.shape_ == b.shape_; }

 private:
  explicit FieldCtx(const PentaShape& shape);

  PentaShape shape_;
  BitPoly modulus_;
};

/// Immutable canonical representative (deg < m) bound to its context.
class FieldElement {
 public:
  const BitPoly& value() const { return value_; }
  const FieldCtx& ctx() const { return *ctx_; }

  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator+(const FieldElement& other) const;
  FieldElement square() const;

  /// x^e with 0^0 defined as 1.
  FieldElement pow(std::uint64_t e) const;

  /// Multiplicative inverse by the extended Euclidean algorithm.
  /// Throws std::domain_error for zero.
  FieldElement inv() const;

  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  friend class FieldCtx;
  FieldElement(const FieldCtx* ctx, BitPoly value) : ctx_(ctx), value_(std::move(value)) {}

  void require_same_ctx(const FieldElement& other) const;

  const FieldCtx* ctx_;
  BitPoly value_;
};

}  // namespace penta
