#pragma once

#include <random>

#include "qcss/codes.hpp"
#include "qcss/gf2.hpp"

namespace qcss::test {

inline BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m[r] = random_vector(cols, rng);
  return m;
}

/// The 7x8 extended incidence matrix of the Fano plane PG(2,2).
inline BitMatrix fano_extended() {
  return BitMatrix::from_strings({
      "11100001",
      "10011001",
      "10000111",
      "01010101",
      "01001011",
      "00110011",
      "00101101",
  });
}

inline BitMatrix extended_hamming_generator() {
  return BitMatrix::from_strings({"11110000", "00111100", "00001111", "01010101"});
}

inline LinearCode extended_hamming() { return LinearCode(extended_hamming_generator()); }

/// Brute-force weight distribution over all 2^k combinations of the generator rows.
inline std::vector<std::uint64_t> brute_weights(const LinearCode& c) {
  std::vector<std::uint64_t> counts(c.n() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.k()); ++mask) {
    BitVector acc(c.n());
    for (std::size_t r = 0; r < c.k(); ++r) {
      if ((mask >> r) & 1U) acc ^= c.generator()[r];
    }
    ++counts[acc.weight()];
  }
  return counts;
}

/// Brute-force dual distance: the smallest nonzero vector orthogonal to every generator.
inline std::size_t brute_dual_distance(const LinearCode& c) {
  std::size_t best = c.n() + 1;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << c.n()); ++v) {
    BitVector x(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
      if ((v >> i) & 1U) x.set(i);
    }
    if (x.weight() >= best) continue;
    bool ok = true;
    for (const auto& g : c.generator().row_list()) {
      if (dot(g, x)) {
        ok = false;
        break;
      }
    }
    if (ok) best = x.weight();
  }
  return best;
}

/// Random codeword of c.
inline BitVector random_codeword(const LinearCode& c, std::mt19937_64& rng) {
  return c.encode(random_vector(c.k(), rng));
}

/// Random self-orthogonal code inside `ambient`: greedily adds random ambient
/// words orthogonal to everything chosen so far.
inline LinearCode random_self_orthogonal_in(const LinearCode& ambient, std::size_t target_k, std::mt19937_64& rng) {
  const std::size_t n = ambient.n();
  BitMatrix rows = BitMatrix::with_cols(n);
  for (int attempt = 0; attempt < 400 && rows.rows() < target_k; ++attempt) {
    const auto v = random_codeword(ambient, rng);
    if (v.weight() % 2 != 0 || v.none()) continue;
    bool ok = true;
    for (const auto& r : rows.row_list()) {
      if (dot(r, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    BitMatrix trial = rows;
    trial.append_row(v);
    if (rank(trial) == trial.rows()) rows = trial;
  }
  return LinearCode(rows);
}

inline LinearCode random_self_orthogonal(std::size_t n, std::size_t target_k, std::mt19937_64& rng) {
  return random_self_orthogonal_in(LinearCode::full(n), target_k, rng);
}

/// Random subcode spanned by `k` random codewords.
inline LinearCode random_subcode(const LinearCode& c, std::size_t k, std::mt19937_64& rng) {
  BitMatrix rows = BitMatrix::with_cols(c.n());
  for (std::size_t i = 0; i < k; ++i) rows.append_row(random_codeword(c, rng));
  return LinearCode(rows);
}

/// First-order Reed-Muller code from coordinates: point j has the bits of j.
inline LinearCode rm1(std::size_t m) {
  const std::size_t n = std::size_t{1} << m;
  BitMatrix g(m + 1, n);
  g[0] = BitVector::ones(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((j >> i) & 1U) g.set(i + 1, j);
    }
  }
  return LinearCode(g);
}

}  // namespace qcss::test
