#pragma once

#include <cstdint>
#include <vector>

namespace qcss {

/// GF(2^m) with log/antilog tables. Elements are bit-coded polynomials in alpha.
class Gf2mField {
 public:
  using Elem = std::uint32_t;

  /// Uses the fixed primitive polynomial for m (2 <= m <= 20).
  explicit Gf2mField(unsigned m);
  /// Throws PreconditionError unless `poly` is primitive of degree m.
  Gf2mField(unsigned m, std::uint32_t poly);

  /// Fixed primitive polynomial of degree m, bit i = coefficient of x^i.
  static std::uint32_t default_polynomial(unsigned m);

  unsigned m() const { return m_; }
  std::uint32_t polynomial() const { return poly_; }
  std::uint32_t size() const { return size_; }
  /// Multiplicative order of alpha: 2^m - 1.
  std::uint32_t order() const { return size_ - 1; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// alpha^e for any integer exponent (reduced mod 2^m-1).
  Elem alpha_pow(std::int64_t e) const;
  Elem pow(Elem a, std::int64_t e) const;
  /// Discrete log base alpha; a must be nonzero.
  std::uint32_t log(Elem a) const;

 private:
  unsigned m_;
  std::uint32_t poly_;
  std::uint32_t size_;
  std::vector<Elem> exp_;           // doubled so mul needs no reduction
  std::vector<std::uint32_t> log_;
};

}  // namespace qcss
