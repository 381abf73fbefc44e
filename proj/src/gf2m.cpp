#include "qcss/gf2m.hpp"

#include <array>
#include <string>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

// Primitive trinomials/pentanomials; checked again when the field is built.
constexpr std::array<std::uint32_t, 21> kPrimitive = {
    0,       0,        0x7,     0xB,     0x13,    0x25,    0x43,     0x83,    0x11D,   0x211,  0x409,
    0x805,   0x1053,   0x201B,  0x4443,  0x8003,  0x1100B, 0x20009,  0x40081, 0x80027, 0x100009,
};

}  // namespace

std::uint32_t Gf2mField::default_polynomial(unsigned m) {
  if (m < 2 || m >= kPrimitive.size()) {
    throw InvalidInput("GF(2^m): no fixed primitive polynomial for m=" + std::to_string(m));
  }
  return kPrimitive[m];
}

Gf2mField::Gf2mField(unsigned m) : Gf2mField(m, default_polynomial(m)) {}

Gf2mField::Gf2mField(unsigned m, std::uint32_t poly) : m_(m), poly_(poly) {
  if (m < 1 || m > 24) throw InvalidInput("GF(2^m): m out of range");
  if ((poly >> m) != 1U) throw PreconditionError("GF(2^m): polynomial degree is not m");
  size_ = std::uint32_t{1} << m;
  const std::uint32_t q1 = size_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(q1), 0);
  log_.assign(size_, 0);
  std::vector<bool> seen(size_, false);
  Elem x = 1;
  for (std::uint32_t i = 0; i < q1; ++i) {
    if (seen[x]) throw PreconditionError("GF(2^m): polynomial " + std::to_string(poly) + " is not primitive");
    seen[x] = true;
    exp_[i] = x;
    exp_[i + q1] = x;
    log_[x] = i;
    x <<= 1;
    if (x & size_) x ^= poly;
  }
  if (x != 1) throw PreconditionError("GF(2^m): polynomial is not primitive");
}

Gf2mField::Elem Gf2mField::inv(Elem a) const {
  if (a == 0) throw InvalidInput("GF(2^m): inverse of zero");
  return exp_[(order() - log_[a]) % order()];
}

Gf2mField::Elem Gf2mField::alpha_pow(std::int64_t e) const {
  const std::int64_t q1 = order();
  return exp_[static_cast<std::size_t>(((e % q1) + q1) % q1)];
}

Gf2mField::Elem Gf2mField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw InvalidInput("GF(2^m): negative power of zero");
    return 0;
  }
  const std::int64_t q1 = order();
  const std::int64_t r = ((static_cast<std::int64_t>(log_[a]) * (e % q1)) % q1 + q1) % q1;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Gf2mField::log(Elem a) const {
  if (a == 0 || a >= size_) throw InvalidInput("GF(2^m): log of zero or out-of-range element");
  return log_[a];
}

}  // namespace qcss
