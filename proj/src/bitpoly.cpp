#include "penta/bitpoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace penta {

namespace {

constexpr std::size_t kWordBits = 64;

// byte -> 16-bit spread (abcdefgh -> 0a0b0c0d0e0f0g0h)
constexpr std::array<std::uint16_t, 256> make_spread_table() {
  std::array<std::uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    std::uint16_t s = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (v & (1u << i)) s |= static_cast<std::uint16_t>(1u << (2 * i));
    t[v] = s;
  }
  return t;
}

constexpr auto kSpread = make_spread_table();

}  // namespace

BitPoly BitPoly::monomial(std::size_t i) {
  BitPoly p;
  p.set_bit(i);
  return p;
}

BitPoly BitPoly::from_exponents(std::initializer_list<std::size_t> exps) {
  BitPoly p;
  for (std::size_t e : exps) p.set_bit(e, !p.bit(e));
  return p;
}

BitPoly BitPoly::from_hex(std::string_view hex) {
  if (hex.empty()) throw std::invalid_argument("empty hex string");
  BitPoly p;
  std::size_t nbits = hex.size() * 4;
  p.ensure_bit_capacity(nbits);
  std::size_t pos = 0;  // bit position of the current digit's low bit
  for (std::size_t k = hex.size(); k-- > 0;) {
    char ch = hex[hex.size() - 1 - k];
    unsigned v;
    if (ch >= '0' && ch <= '9')
      v = static_cast<unsigned>(ch - '0');
    else if (ch >= 'A' && ch <= 'F')
      v = static_cast<unsigned>(ch - 'A') + 10;
    else if (ch >= 'a' && ch <= 'f')
      v = static_cast<unsigned>(ch - 'a') + 10;
    else
      throw std::invalid_argument("invalid hex character");
    pos = k * 4;
    p.words_[pos / kWordBits] |= static_cast<std::uint64_t>(v) << (pos % kWordBits);
    if (pos % kWordBits > kWordBits - 4 && pos / kWordBits + 1 < p.words_.size())
      p.words_[pos / kWordBits + 1] |= static_cast<std::uint64_t>(v) >> (kWordBits - pos % kWordBits);
  }
  p.trim();
  return p;
}

std::string BitPoly::to_hex() const {
  auto d = degree();
  if (!d) return "0";
  std::size_t ndigits = *d / 4 + 1;
  std::string out(ndigits, '0');
  static const char* digits = "0123456789ABCDEF";
  for (std::size_t k = 0; k < ndigits; ++k) {
    std::size_t pos = k * 4;
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j)
      if (bit(pos + j)) v |= 1u << j;
    out[ndigits - 1 - k] = digits[v];
  }
  return out;
}

bool BitPoly::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool BitPoly::is_one() const {
  if (words_.empty() || words_[0] != 1) return false;
  for (std::size_t i = 1; i < words_.size(); ++i)
    if (words_[i]) return false;
  return true;
}

std::optional<std::size_t> BitPoly::degree() const {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i])
      return i * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[i])));
  }
  return std::nullopt;
}

bool BitPoly::bit(std::size_t i) const {
  std::size_t w = i / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kWordBits)) & 1u;
}

void BitPoly::set_bit(std::size_t i, bool value) {
  std::size_t w = i / kWordBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  if (value)
    words_[w] |= std::uint64_t{1} << (i % kWordBits);
  else
    words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
}

std::size_t BitPoly::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitPoly& BitPoly::operator^=(const BitPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitPoly BitPoly::shifted_left(std::size_t n) const {
  BitPoly r;
  r.words_.assign(words_.size() + n / kWordBits + 1, 0);
  std::size_t wshift = n / kWordBits;
  std::size_t bshift = n % kWordBits;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i + wshift] |= words_[i] << bshift;
    if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (kWordBits - bshift);
  }
  r.trim();
  return r;
}

BitPoly BitPoly::shifted_right(std::size_t n) const {
  BitPoly r;
  std::size_t wshift = n / kWordBits;
  if (wshift >= words_.size()) return r;
  std::size_t bshift = n % kWordBits;
  r.words_.assign(words_.size() - wshift, 0);
  for (std::size_t i = wshift; i < words_.size(); ++i) {
    r.words_[i - wshift] |= words_[i] >> bshift;
    if (bshift && i + 1 < words_.size()) r.words_[i - wshift] |= words_[i + 1] << (kWordBits - bshift);
  }
  r.trim();
  return r;
}

void BitPoly::xor_shifted(const BitPoly& other, std::size_t shift) {
  std::size_t wshift = shift / kWordBits;
  std::size_t bshift = shift % kWordBits;
  std::size_t need = other.words_.size() + wshift + 1;
  if (words_.size() < need) words_.resize(need, 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i + wshift] ^= other.words_[i] << bshift;
    if (bshift) words_[i + wshift + 1] ^= other.words_[i] >> (kWordBits - bshift);
  }
}

BitPoly BitPoly::masked_range(std::size_t lo, std::size_t hi) const {
  BitPoly r;
  if (lo > hi) return r;
  std::size_t hiw = hi / kWordBits;
  if (hiw >= words_.size()) {
    auto d = degree();
    if (!d || *d < lo) return r;
    hi = *d;
    hiw = hi / kWordBits;
  }
  r.words_.assign(hiw + 1, 0);
  for (std::size_t w = lo / kWordBits; w <= hiw && w < words_.size(); ++w) r.words_[w] = words_[w];
  // clear below lo
  std::size_t low = lo / kWordBits;
  if (lo % kWordBits) r.words_[low] &= ~std::uint64_t{0} << (lo % kWordBits);
  for (std::size_t w = 0; w < low; ++w) r.words_[w] = 0;
  // clear above hi
  if (hi % kWordBits != kWordBits - 1) r.words_[hiw] &= ~std::uint64_t{0} >> (kWordBits - 1 - hi % kWordBits);
  r.trim();
  return r;
}

BitPoly BitPoly::low_bits(std::size_t n) const {
  if (n == 0) return BitPoly{};
  return masked_range(0, n - 1);
}

bool operator==(const BitPoly& a, const BitPoly& b) {
  std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return false;
  }
  return true;
}

void BitPoly::ensure_bit_capacity(std::size_t nbits) {
  std::size_t need = (nbits + kWordBits - 1) / kWordBits;
  if (words_.size() < need) words_.resize(need, 0);
}

void BitPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly mul_schoolbook(const BitPoly& p, const BitPoly& q) {
  BitPoly r;
  const auto& qw = q.words();
  for (std::size_t wi = 0; wi < qw.size(); ++wi) {
    std::uint64_t w = qw[wi];
    while (w) {
      unsigned b = static_cast<unsigned>(std::countr_zero(w));
      r.xor_shifted(p, wi * 64 + b);
      w &= w - 1;
    }
  }
  return r;
}

BitPoly square(const BitPoly& p) {
  BitPoly r;
  auto d = p.degree();
  if (!d) return r;
  const auto& pw = p.words();
  r.words_.assign(pw.size() * 2, 0);
  for (std::size_t i = 0; i < pw.size(); ++i) {
    std::uint64_t w = pw[i];
    std::uint64_t lo = 0, hi = 0;
    for (unsigned byte = 0; byte < 4; ++byte)
      lo |= static_cast<std::uint64_t>(kSpread[(w >> (8 * byte)) & 0xFF]) << (16 * byte);
    for (unsigned byte = 4; byte < 8; ++byte)
      hi |= static_cast<std::uint64_t>(kSpread[(w >> (8 * byte)) & 0xFF]) << (16 * (byte - 4));
    r.words_[2 * i] = lo;
    r.words_[2 * i + 1] = hi;
  }
  r.trim();
  return r;
}

DivRem divrem(const BitPoly& n, const BitPoly& d) {
  auto dd = d.degree();
  if (!dd) throw std::domain_error("division by zero polynomial");
  DivRem res;
  res.remainder = n;
  for (;;) {
    auto dn = res.remainder.degree();
    if (!dn || *dn < *dd) break;
    std::size_t shift = *dn - *dd;
    res.remainder.xor_shifted(d, shift);
    res.quotient.set_bit(shift);
  }
  return res;
}

BitPoly gcd(BitPoly p, BitPoly q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!q.is_zero()) {
    BitPoly r = divrem(p, q).remainder;
    p = std::move(q);
    q = std::move(r);
  }
  return p;
}

BitPoly powmod_x(unsigned e, const BitPoly& f) {
  auto df = f.degree();
  if (!df || *df < 1) throw std::invalid_argument("powmod_x requires deg f >= 1");
  BitPoly u = divrem(BitPoly::x(), f).remainder;
  for (unsigned i = 0; i < e; ++i) u = divrem(square(u), f).remainder;
  return u;
}

}  // namespace penta
