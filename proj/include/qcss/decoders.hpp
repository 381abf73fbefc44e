#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "qcss/bch.hpp"
#include "qcss/codes.hpp"
#include "qcss/projective.hpp"
#include "qcss/reed_muller.hpp"

namespace qcss {

/// Hard-decision decoder for one classical code D.
class WordDecoder {
 public:
  virtual ~WordDecoder() = default;
  /// "bch", "reed", "rudolph" or "lookup".
  virtual std::string kind() const = 0;
  virtual std::size_t length() const = 0;
  /// Every error of weight <= radius() is corrected exactly.
  virtual std::size_t radius() const = 0;
  /// e with received + e in D, or nullopt on decoding failure.
  virtual std::optional<BitVector> error_pattern(const BitVector& received) const = 0;
};

using DecoderPtr = std::shared_ptr<const WordDecoder>;

/// Decodes the cyclic code described by `spec`.
DecoderPtr make_bch_decoder(const CyclicCodeSpec& spec);
/// Decodes RM(m, r).
DecoderPtr make_reed_decoder(std::size_t m, std::size_t r);
/// Decodes the dual of build_so_code(cfg); `radius` caps the accepted flip count.
DecoderPtr make_rudolph_decoder(const Configuration& cfg, std::size_t radius);
/// Syndrome table for D = dual(c) with coset leaders of weight <= floor((d(D) - 1) / 2).
DecoderPtr make_lookup_decoder(const LinearCode& c, std::uint64_t budget = std::uint64_t{1} << 24);

/// Zero set of a cyclic code of odd length, or nullopt if `c` is not cyclic.
std::optional<std::vector<std::size_t>> cyclic_zero_set(const LinearCode& c);

/// Decoder for dual(c). kind is "bch", "reed", "rudolph", "lookup" or "auto"
/// (first family that recognises c, in that order, falling back to lookup).
/// Throws PreconditionError when c is not of the requested family.
DecoderPtr decoder_for_dual(const LinearCode& c, const std::string& kind = "auto");

}  // namespace qcss
