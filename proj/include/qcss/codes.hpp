#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcss/gf2.hpp"

namespace qcss {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on the number of codewords any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 29;

/// Binary linear [n, k] code given by k independent generator rows.
class LinearCode {
 public:
  LinearCode() = default;
  /// Keeps a maximal independent subset of `rows`, preserving their order.
  explicit LinearCode(const BitMatrix& rows);

  static LinearCode zero(std::size_t n);
  static LinearCode full(std::size_t n);
  static LinearCode repetition(std::size_t n);
  static LinearCode even_weight(std::size_t n);

  std::size_t n() const { return g_.cols(); }
  std::size_t k() const { return g_.rows(); }
  const BitMatrix& generator() const { return g_; }
  const RowSpace& space() const { return space_; }

  bool contains(const BitVector& v) const { return space_.contains(v); }
  /// Same set of codewords.
  bool same_code(const LinearCode& other) const;
  /// Codeword for a k-bit message (row combination).
  BitVector encode(const BitVector& message) const { return g_.combine(message); }

 private:
  BitMatrix g_;
  RowSpace space_;
};

/// A_0..A_n for an [n, k] code.
struct WeightEnumerator {
  std::vector<BigInt> coeffs;

  std::size_t length() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt total() const;
  /// Smallest w > 0 with A_w != 0.
  std::optional<std::size_t> min_nonzero_weight() const;
  /// One "w,count" line per weight with a nonzero count.
  std::string to_csv() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

LinearCode dual(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
/// Every generator of `a` lies in `b`. Throws InvalidInput on length mismatch.
bool is_subcode(const LinearCode& a, const LinearCode& b);
/// Intersection of two codes of equal length.
LinearCode intersection(const LinearCode& a, const LinearCode& b);

/// Exact A_w by Gray-code enumeration of all 2^k codewords.
WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Dual enumerator via Krawtchouk polynomials in exact arithmetic.
/// Throws ConsistencyError if a coefficient is not a non-negative integer.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t n, std::size_t k);

/// Minimum weight over nonzero codewords. [n,n] codes give 1; the zero code
/// throws InvalidInput ("undefined"); k beyond the budget throws ResourceError.
std::size_t min_distance_exhaustive(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Minimum distance of the dual code, by enumerating whichever of C and C^perp is smaller.
std::size_t dual_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

struct SplitVerdict {
  enum class Kind { kNoCodewordBelow, kFoundWeight };
  Kind kind = Kind::kNoCodewordBelow;
  /// kNoCodewordBelow: bound + 1; kFoundWeight: the exact minimum distance.
  std::size_t weight = 0;
  std::optional<BitVector> witness;
  /// Weight bound actually searched after divisibility reduction, and per-side pattern weight.
  std::size_t effective_bound = 0;
  std::size_t side_weight = 0;
  std::uint64_t patterns = 0;
};

/// Meet-in-the-middle certificate: enumerates codewords of weight <= side_weight
/// on the rref pivot columns and on an information set inside the non-pivot
/// columns. Throws PreconditionError when the non-pivot columns hold no information set.
SplitVerdict min_distance_split(const LinearCode& c, std::size_t bound);

/// Calls visit(codeword) for every codeword, zero included. Slow path for small codes.
void for_each_codeword(const LinearCode& c, const std::function<void(const BitVector&)>& visit,
                       std::uint64_t budget = kDefaultBudget);

/// Nonzero codewords of minimum weight, ordered by lexicographically smallest support.
std::vector<BitVector> min_weight_codewords(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Matrix text format (see BitMatrix::to_text) of the generator rows.
std::string to_text(const LinearCode& c);
LinearCode code_from_text(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& c);

/// Support comparison used for deterministic tie-breaks: smaller first index wins.
bool support_less(const BitVector& a, const BitVector& b);

}  // namespace qcss
