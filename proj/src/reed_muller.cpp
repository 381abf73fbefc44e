#include "qcss/reed_muller.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

BitVector evaluate(std::uint32_t mask, std::size_t n) {
  BitVector v(n);
  for (std::size_t j = 0; j < n; ++j) {
    if ((j & mask) == mask) v.set(j);
  }
  return v;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
  // compare the sorted variable lists of two masks
  while (a && b) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

}  // namespace

RmCode rm_generator(std::size_t m, std::size_t r) {
  if (m < 1 || m > 24) throw InvalidInput("RM: m must be in 1..24");
  if (r >= m) throw InvalidInput("RM: need r < m (got r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")");
  RmCode out;
  out.m = m;
  out.r = r;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= r) out.monomials.push_back(mask);
  }
  std::stable_sort(out.monomials.begin(), out.monomials.end(), [](std::uint32_t a, std::uint32_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : lex_less(a, b);
  });
  const std::size_t n = std::size_t{1} << m;
  BitMatrix g = BitMatrix::with_cols(n);
  for (auto mask : out.monomials) g.append_row(evaluate(mask, n));
  out.code = LinearCode(g);
  return out;
}

std::optional<ReedDecoding> reed_decode(const RmCode& rm, const BitVector& received) {
  const std::size_t n = std::size_t{1} << rm.m;
  if (received.size() != n) throw InvalidInput("reed_decode: received length must be 2^m");
  const std::uint32_t full = static_cast<std::uint32_t>(n - 1);
  BitVector y = received;
  BitVector coeffs(rm.monomials.size());

  for (int deg = static_cast<int>(rm.r); deg >= 0; --deg) {
    BitVector layer(n);
    for (std::size_t idx = 0; idx < rm.monomials.size(); ++idx) {
      const std::uint32_t s = rm.monomials[idx];
      if (std::popcount(s) != deg) continue;
      const std::uint32_t rest = full & ~s;
      // one check per assignment of the remaining variables: parity over the subcube spanned by s
      std::size_t ones = 0, votes = 0;
      for (std::uint32_t a = rest;; a = (a - 1) & rest) {
        bool parity = false;
        for (std::uint32_t t = s;; t = (t - 1) & s) {
          parity ^= y.get(a | t);
          if (t == 0) break;
        }
        ones += parity;
        ++votes;
        if (a == 0) break;
      }
      if (2 * ones == votes) return std::nullopt;
      if (2 * ones > votes) {
        coeffs.set(idx);
        layer ^= evaluate(s, n);
      }
    }
    y ^= layer;
  }

  ReedDecoding out;
  out.coefficients = coeffs;
  out.codeword = received ^ y;
  out.flips = y.weight();
  return out;
}

}  // namespace qcss
