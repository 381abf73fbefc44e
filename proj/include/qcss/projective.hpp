#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcss/codes.hpp"

namespace qcss {

/// GF(q), q = p^s, elements 0..q-1 as base-p digit vectors (digit i = coefficient of x^i)
/// modulo the smallest monic irreducible polynomial of degree s.
class SmallField {
 public:
  explicit SmallField(unsigned q);
  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;

 private:
  unsigned q_, p_ = 0, s_ = 0;
  std::vector<unsigned> add_, mul_, neg_;
};

/// PG(k, q): points of GF(q)^(k+1) \ {0} modulo scalars, scaled so the first
/// nonzero coordinate is 1, in lexicographic order.
class ProjGeometry {
 public:
  ProjGeometry(unsigned k, unsigned q);
  unsigned k() const { return k_; }
  const SmallField& field() const { return field_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<unsigned>& point(std::size_t i) const { return points_[i]; }
  /// Index of a canonical point.
  std::size_t index_of(const std::vector<unsigned>& canonical) const;

 private:
  unsigned k_;
  SmallField field_;
  std::vector<std::vector<unsigned>> points_;
  std::vector<std::size_t> by_key_;   // base-q key -> point index (or npos)
};

/// Incidence structure: b blocks (rows) over v points (columns).
struct Configuration {
  unsigned k = 0, q = 0, l = 0;   // geometry it came from (0 when built by hand)
  BitMatrix incidence;
  std::size_t b = 0, v = 0, r = 0, kprime = 0, lambda = 0;
  /// Distinct sizes of pairwise row intersections.
  std::set<std::size_t> row_intersections;

  std::string name() const;
};

struct ConfigParams {
  std::size_t b, v, r, kprime, lambda;
  friend bool operator==(const ConfigParams&, const ConfigParams&) = default;
};

/// Closed-form counts for l-spaces of PG(k, q): b blocks, v points, r blocks per
/// point, k' points per block, lambda blocks through two points.
ConfigParams config_params(unsigned k, unsigned q, unsigned l);

/// All l-spaces of PG(k, q), as (l+1)-dimensional subspaces in rref form.
/// Verifies row weight, column weight and column-pair coverage against config_params.
Configuration enumerate_spaces(const ProjGeometry& geom, unsigned l);
Configuration enumerate_spaces(unsigned k, unsigned q, unsigned l);

/// Fills b, v, r, k', lambda and row_intersections from the incidence matrix.
/// Throws ConsistencyError if the row weights, column weights or column-pair
/// coverage are not constant.
Configuration configuration_from_incidence(const BitMatrix& incidence);

/// True when the code needs the all-ones column (odd blocks meeting in odd counts).
bool needs_extension(const Configuration& cfg);

/// Span of the incidence rows, extended by an all-ones column when blocks and
/// all their intersections are odd. Mixed parities throw PreconditionError.
LinearCode build_so_code(const Configuration& cfg);

/// One-step majority-logic decoding of the dual of the configuration code.
class RudolphDecoder {
 public:
  RudolphDecoder(const Configuration& cfg, bool extended);
  RudolphDecoder(const Configuration& cfg, bool extended, std::size_t radius);

  /// Corrected word, or nullopt if no pass yields a codeword within the radius.
  std::optional<BitVector> decode(const BitVector& received) const;
  std::size_t length() const { return cfg_.v + (extended_ ? 1 : 0); }
  std::size_t radius() const { return radius_; }
  bool extended() const { return extended_; }
  /// Flip a bit when more than this many of its checks fail.
  std::size_t threshold() const { return (cfg_.r + cfg_.lambda - 1) / 2; }

 private:
  std::optional<BitVector> pass(const BitVector& word) const;

  Configuration cfg_;
  bool extended_;
  std::size_t radius_;
  std::vector<BitVector> checks_on_point_;   // per point: the blocks containing it
};

/// floor((r + lambda - 1) / (2 lambda)).
std::size_t rudolph_bound(const Configuration& cfg);
/// floor((r + lambda) / (2 lambda)), the two-pass bound for extended codes.
std::size_t rudolph_extended_bound(const Configuration& cfg);

}  // namespace qcss
