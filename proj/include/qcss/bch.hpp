#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcss/codes.hpp"
#include "qcss/gf2m.hpp"

namespace qcss {

// Binary polynomials are BitVectors with bit i = coefficient of x^i; the
// vector length is only storage, trailing zeros are ignored.
long poly_degree(const BitVector& p);
BitVector poly_mul(const BitVector& a, const BitVector& b);
BitVector poly_mod(const BitVector& a, const BitVector& b);
bool poly_divides(const BitVector& divisor, const BitVector& p);
/// x^n + 1.
BitVector poly_xn_plus_1(std::size_t n);

/// Smallest m with n | 2^m - 1 (n odd).
unsigned multiplicative_order_of_2(std::size_t n);
/// Orbit of e under multiplication by 2 mod n, sorted.
std::vector<std::size_t> cyclotomic_coset(std::size_t e, std::size_t n);

/// Minimal polynomial of alpha^e over GF(2).
BitVector minimal_polynomial(const Gf2mField& f, std::uint32_t e);

/// Best BCH window of a zero set: the longest run b, b+a, ..., b+(L-1)a (mod n)
/// with gcd(a, n) = 1; designed distance L + 1.
struct BchWindow {
  std::size_t step = 1;
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t designed_distance() const { return length + 1; }
};
BchWindow best_window(const std::vector<std::size_t>& zero_set, std::size_t n);

/// Cyclic code of odd length n described by its zero set I = {i : g(beta^i) = 0},
/// beta = alpha^((2^m - 1)/n).
struct CyclicCodeSpec {
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t b = 0, delta = 0;   // BCH parameters the spec was built from (0 if none)
  std::vector<std::size_t> zero_set;
  BitVector generator;            // length n + 1

  std::size_t dimension() const { return n - zero_set.size(); }
  std::string generator_hex() const;
};

/// Closes `zeros` under cyclotomic cosets and builds g = prod (x - beta^i).
CyclicCodeSpec cyclic_from_zero_set(std::size_t n, const std::vector<std::size_t>& zeros);
/// g = lcm of minimal polynomials of beta^k, b <= k <= b + delta - 2 (exponents mod n).
CyclicCodeSpec bch_generator(std::size_t n, std::size_t b, std::size_t delta);
/// Zero set of g evaluated directly (for polynomials read from a table).
std::vector<std::size_t> zero_set_of(const BitVector& g, std::size_t n);

/// I_{C^perp} = { i : n - i not in I_C } (indices mod n).
std::vector<std::size_t> dual_zero_set(const std::vector<std::size_t>& zero_set, std::size_t n);
/// For all i: (n - i) not in I_C implies i in I_C.
bool is_self_orthogonal_cyclic(const std::vector<std::size_t>& zero_set, std::size_t n);

/// Generator matrix from the n - deg(g) cyclic shifts of g.
LinearCode cyclic_code(const CyclicCodeSpec& spec);

/// Berlekamp-Massey + Chien search over the best window of the zero set.
/// Returns error positions, or nullopt when the error exceeds the decoder's reach.
class BchDecoder {
 public:
  explicit BchDecoder(const CyclicCodeSpec& spec);
  std::optional<std::vector<std::size_t>> decode(const BitVector& received) const;
  std::size_t radius() const { return (window_.designed_distance() - 1) / 2; }
  const BchWindow& window() const { return window_; }

 private:
  CyclicCodeSpec spec_;
  const Gf2mField& field_;
  BchWindow window_;
  std::uint32_t gamma_log_ = 0;   // log_alpha of gamma = beta^step
  std::uint32_t beta_log_ = 0;
};

std::optional<std::vector<std::size_t>> bm_decode(const CyclicCodeSpec& spec, const BitVector& received);

/// Self-orthogonal cyclic C whose dual is a BCH code, found by enumerating (b, delta).
struct SoBchResult {
  CyclicCodeSpec code;        // C (self-orthogonal)
  std::size_t dual_designed_distance = 0;
  std::size_t quantum_k() const { return code.n - 2 * code.dimension(); }
};
std::vector<SoBchResult> search_self_orthogonal_bch(std::size_t n);

/// Unit j mod n with j * a = b as sets, if any.
std::optional<std::size_t> zero_set_multiplier(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                               std::size_t n);

/// Extended binary Golay [24,12,8] code (cyclic [23,12,7] plus overall parity).
LinearCode golay24();

}  // namespace qcss
