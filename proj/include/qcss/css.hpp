#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcss/codes.hpp"
#include "qcss/decoders.hpp"

namespace qcss {

/// Pauli operator up to phase: x marks X or Y, z marks Y or Z.
struct PauliError {
  BitVector x, z;

  PauliError() = default;
  explicit PauliError(std::size_t n) : x(n), z(n) {}
  PauliError(BitVector xb, BitVector zb);
  /// "IXYZ..." (case-insensitive).
  static PauliError from_string(std::string_view s);
  /// Single-qubit operator ('X', 'Y' or 'Z') at position i.
  static PauliError single(std::size_t n, std::size_t i, char op);

  std::size_t n() const { return x.size(); }
  std::size_t weight() const { return (x | z).weight(); }
  std::string to_string() const;
  PauliError& operator+=(const PauliError& o);
  friend PauliError operator+(PauliError a, const PauliError& b) { return a += b; }
  friend bool operator==(const PauliError&, const PauliError&) = default;
};

/// 0 iff E and F commute.
bool star(const PauliError& e, const PauliError& f);

struct Syndrome {
  BitVector s_x;   // X-stabilizers (rows of G1) against the z part
  BitVector s_z;   // Z-stabilizers (rows of G2) against the x part
  bool zero() const { return s_x.none() && s_z.none(); }
  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// CSS code from C1 (X-stabilizers) and C2 (Z-stabilizers) with C2 inside dual(C1).
class CssCode {
 public:
  CssCode(LinearCode c1, LinearCode c2, DecoderPtr dual1, DecoderPtr dual2);

  std::size_t n() const { return c1_.n(); }
  std::size_t quantum_k() const { return n() - c1_.k() - c2_.k(); }
  const LinearCode& c1() const { return c1_; }
  const LinearCode& c2() const { return c2_; }
  /// Decoder of dual(C1), which estimates the z part; and of dual(C2) for the x part.
  const DecoderPtr& z_decoder() const { return dec1_; }
  const DecoderPtr& x_decoder() const { return dec2_; }
  /// min(d(dual C1), d(dual C2)) when enumerable within the budget.
  std::optional<std::size_t> distance(std::uint64_t budget = kDefaultBudget) const;
  /// The X- and Z-stabilizer generators.
  PauliError x_stabilizer(std::size_t i) const;
  PauliError z_stabilizer(std::size_t i) const;
  const RightInverse& g1_inverse() const { return inv1_; }
  const RightInverse& g2_inverse() const { return inv2_; }

 private:
  LinearCode c1_, c2_;
  DecoderPtr dec1_, dec2_;
  RightInverse inv1_, inv2_;
};

/// Checks C2 inside dual(C1) and attaches decoders of the requested kinds.
CssCode build_css(const LinearCode& c1, const LinearCode& c2, const std::string& z_kind = "auto",
                  const std::string& x_kind = "auto");
/// Self-orthogonal C used on both sides.
CssCode build_css(const LinearCode& c, const std::string& kind = "auto");

Syndrome syndrome(const CssCode& code, const PauliError& e);

struct CssDecodeResult {
  enum class Failure { kNone, kZSide, kXSide, kBoth };
  std::optional<PauliError> estimate;
  Failure failure = Failure::kNone;
};

/// Estimates the z part from s_x with dual(C1)'s decoder and the x part from s_z with dual(C2)'s.
CssDecodeResult decode(const CssCode& code, const Syndrome& s);

/// True iff E + estimate has zero syndrome but is not in the stabilizer group.
/// A nonzero residual syndrome throws ConsistencyError.
bool residual_is_logical(const CssCode& code, const PauliError& e, const PauliError& estimate);

/// Line-oriented file: "qcss-css 1", key: value header, then "c1:" and "c2:" matrix blocks.
void write_css(std::ostream& out, const CssCode& code);
CssCode read_css(std::istream& in);
void write_css_file(const std::string& path, const CssCode& code);
CssCode read_css_file(const std::string& path);

}  // namespace qcss
