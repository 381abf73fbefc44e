#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcss/codes.hpp"

namespace qcss {

/// RM(m, r): evaluations of all monomials of degree <= r over GF(2)^m.
/// Point j has coordinates given by the bits of j (bit 0 = x1).
struct RmCode {
  std::size_t m = 0, r = 0;
  LinearCode code;
  /// One variable mask per generator row, by degree then lexicographically.
  std::vector<std::uint32_t> monomials;
};

RmCode rm_generator(std::size_t m, std::size_t r);

struct ReedDecoding {
  BitVector coefficients;   // one per monomial, in RmCode::monomials order
  BitVector codeword;
  std::size_t flips = 0;    // distance from the received word
};

/// Reed majority decoding, highest degree first. nullopt on a tied vote.
std::optional<ReedDecoding> reed_decode(const RmCode& rm, const BitVector& received);

/// floor((2^(m-r) - 1) / 2).
inline std::size_t reed_radius(const RmCode& rm) { return ((std::size_t{1} << (rm.m - rm.r)) - 1) / 2; }

}  // namespace qcss
