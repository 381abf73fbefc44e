#include "qcss/bch.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qcss/errors.hpp"
#include "test_util.hpp"

using namespace qcss;

namespace {

// Independent GF(16) arithmetic: shift-and-add multiplication modulo x^4+x+1.
unsigned gf16_mul(unsigned a, unsigned b) {
  unsigned r = 0;
  for (int i = 0; i < 4; ++i) {
    if ((b >> i) & 1U) r ^= a << i;
  }
  for (int d = 7; d >= 4; --d) {
    if ((r >> d) & 1U) r ^= 0x13U << (d - 4);
  }
  return r;
}

unsigned gf16_pow_alpha(unsigned e) {
  unsigned x = 1;
  for (unsigned i = 0; i < e; ++i) x = gf16_mul(x, 2);
  return x;
}

// Every union of cyclotomic cosets mod n (excluding the full set).
std::vector<std::vector<std::size_t>> all_cyclic_zero_sets(std::size_t n) {
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<bool> seen(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    auto c = cyclotomic_coset(e, n);
    for (auto x : c) seen[x] = true;
    cosets.push_back(c);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << cosets.size()); ++mask) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if ((mask >> i) & 1U) z.insert(z.end(), cosets[i].begin(), cosets[i].end());
    }
    std::sort(z.begin(), z.end());
    out.push_back(z);
  }
  return out;
}

BitVector random_error(std::size_t n, std::size_t weight, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  BitVector e(n);
  for (std::size_t i = 0; i < weight; ++i) e.set(idx[i]);
  return e;
}

}  // namespace

TEST(Gf2m, LogAntilogRoundTrip) {
  for (unsigned m = 2; m <= 12; ++m) {
    const Gf2mField f(m);
    for (std::uint32_t x = 1; x < f.size(); ++x) EXPECT_EQ(f.alpha_pow(f.log(x)), x);
  }
}

TEST(Gf2m, MatchesShiftAndAddMultiplication) {
  const Gf2mField f(4);
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) EXPECT_EQ(f.mul(a, b), gf16_mul(a, b));
  }
}

TEST(Gf2m, RejectsNonPrimitivePolynomial) {
  // x^4+x^3+x^2+x+1 is irreducible but alpha has order 5
  EXPECT_THROW(Gf2mField(4, 0x1F), PreconditionError);
}

TEST(Gf2m, AllDefaultPolynomialsArePrimitive) {
  for (unsigned m = 2; m <= 20; ++m) EXPECT_NO_THROW(Gf2mField{m}) << m;
}

TEST(MinimalPolynomial, Examples) {
  const Gf2mField f(4);
  EXPECT_EQ(minimal_polynomial(f, 0).to_hex(), "0x3");
  EXPECT_EQ(minimal_polynomial(f, 1).to_hex(), "0x13");
  const auto p3 = minimal_polynomial(f, 3);
  EXPECT_EQ(poly_degree(p3), 4);
  EXPECT_TRUE(poly_divides(p3, poly_xn_plus_1(15)));
  // alpha^3 is a root, evaluated with the independent multiplier
  unsigned acc = 0;
  for (auto i : p3.support()) acc ^= gf16_pow_alpha(3 * static_cast<unsigned>(i) % 15);
  EXPECT_EQ(acc, 0U);
}

TEST(BchGenerator, HammingCodes) {
  const auto h15 = bch_generator(15, 1, 2);
  EXPECT_EQ(poly_degree(h15.generator), 4);
  EXPECT_EQ(h15.dimension(), 11U);
  EXPECT_TRUE(poly_divides(h15.generator, poly_xn_plus_1(15)));

  const auto h7 = bch_generator(7, 1, 2);
  const auto code = cyclic_code(h7);
  EXPECT_EQ(code.k(), 4U);
  EXPECT_EQ(min_distance_exhaustive(code), 3U);
}

TEST(BchGenerator, FullZeroSetIsEmptyCode) {
  EXPECT_THROW(bch_generator(7, 7, 7), PreconditionError);
  EXPECT_THROW(bch_generator(7, 1, 8), PreconditionError);
}

TEST(DualZeroSet, Examples) {
  EXPECT_EQ(dual_zero_set({1, 2, 4}, 7), (std::vector<std::size_t>{0, 1, 2, 4}));
  std::vector<std::size_t> all(7);
  for (std::size_t i = 0; i < 7; ++i) all[i] = i;
  EXPECT_TRUE(dual_zero_set(all, 7).empty());
}

TEST(DualZeroSet, InvolutionAndComplementSize) {
  for (std::size_t n : {7, 15, 21, 31}) {
    for (const auto& z : all_cyclic_zero_sets(n)) {
      const auto d = dual_zero_set(z, n);
      EXPECT_EQ(z.size() + d.size(), n);
      EXPECT_EQ(dual_zero_set(d, n), z);
    }
  }
}

TEST(CyclicCriterion, AgreesWithMatrixCheckUpToLength31) {
  for (std::size_t n = 3; n <= 31; n += 2) {
    if (multiplicative_order_of_2(n) > 20) continue;  // no fixed field polynomial beyond m=20
    for (const auto& z : all_cyclic_zero_sets(n)) {
      if (z.size() >= n) continue;
      const auto spec = cyclic_from_zero_set(n, z);
      ASSERT_TRUE(poly_divides(spec.generator, poly_xn_plus_1(n)));
      const auto code = cyclic_code(spec);
      ASSERT_EQ(code.k(), spec.dimension());
      EXPECT_EQ(is_self_orthogonal_cyclic(z, n), is_self_orthogonal(code)) << "n=" << n;
      // the dual zero set describes the dual code
      const auto d = dual_zero_set(z, n);
      if (d.size() < n) {
        EXPECT_TRUE(cyclic_code(cyclic_from_zero_set(n, d)).same_code(dual(code))) << "n=" << n;
      }
    }
  }
}

TEST(CyclicCriterion, HammingVersusSimplex) {
  EXPECT_FALSE(is_self_orthogonal_cyclic({1, 2, 4}, 7));
  EXPECT_TRUE(is_self_orthogonal_cyclic({0, 1, 2, 4}, 7));
}

TEST(ZeroSetOf, RecoversBuiltZeroSet) {
  const auto spec = bch_generator(31, 1, 5);
  EXPECT_EQ(zero_set_of(spec.generator, 31), spec.zero_set);
}

TEST(BestWindow, UsesCoprimeSteps) {
  // {1,2,4,8,16} mod 31: consecutive run 1,2 (length 2); also 1,2,4,8,16 is a
  // geometric, not arithmetic, progression. Designed distance 3.
  EXPECT_EQ(best_window({1, 2, 4, 8, 16}, 31).designed_distance(), 3U);
  // zero set {3,6,12,24,17} with step 3: 3, 6 only... but multiplied by 21 (inverse of 3)
  // it becomes {1,2,4,8,16}; the window length must be invariant.
  EXPECT_EQ(best_window({3, 6, 12, 17, 24}, 31).designed_distance(), 3U);
}

TEST(BmDecode, ZeroSyndrome) {
  const auto spec = bch_generator(15, 1, 3);
  EXPECT_EQ(bm_decode(spec, BitVector(15)), std::vector<std::size_t>{});
}

TEST(BmDecode, AllSingleFlipsOnHamming15) {
  const auto spec = bch_generator(15, 1, 3);
  const auto code = cyclic_code(spec);
  std::mt19937_64 rng(2);
  for (std::size_t i = 0; i < 15; ++i) {
    const auto c = test::random_codeword(code, rng);
    auto r = c;
    r.flip(i);
    EXPECT_EQ(bm_decode(spec, r), std::vector<std::size_t>{i});
  }
}

TEST(BmDecode, AllDoubleFlipsOn31_21) {
  const auto spec = bch_generator(31, 1, 5);
  ASSERT_EQ(spec.dimension(), 21U);
  const BchDecoder dec(spec);
  ASSERT_EQ(dec.radius(), 2U);
  const auto code = cyclic_code(spec);
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < 31; ++i) {
    for (std::size_t j = i + 1; j < 31; ++j) {
      auto r = test::random_codeword(code, rng);
      r.flip(i);
      r.flip(j);
      EXPECT_EQ(dec.decode(r), (std::vector<std::size_t>{i, j}));
    }
  }
}

TEST(BmDecode, RandomErrorsWithinRadiusOnNonNarrowSense) {
  std::mt19937_64 rng(4);
  for (auto [n, b, delta] : {std::tuple<std::size_t, std::size_t, std::size_t>{63, 3, 7}, {127, 5, 11}, {93, 1, 7}}) {
    const auto spec = bch_generator(n, b, delta);
    const BchDecoder dec(spec);
    const auto code = cyclic_code(spec);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t w = 1 + rng() % dec.radius();
      const auto e = random_error(n, w, rng);
      const auto c = test::random_codeword(code, rng);
      const auto got = dec.decode(c ^ e);
      ASSERT_TRUE(got) << n;
      EXPECT_EQ(*got, e.support());
    }
  }
}

TEST(BmDecode, ReportsFailureBeyondRadius) {
  const auto spec = bch_generator(15, 1, 3);
  auto r = BitVector(15);
  r.flip(0);
  r.flip(1);
  // a double error on a single-error-correcting code either fails or miscorrects
  // to a codeword; it never returns the true pattern
  const auto got = bm_decode(spec, r);
  if (got) EXPECT_NE(*got, (std::vector<std::size_t>{0, 1}));
}

TEST(Search, Length15ContainsTableRow) {
  const auto res = search_self_orthogonal_bch(15);
  const bool found = std::any_of(res.begin(), res.end(), [](const SoBchResult& r) {
    return r.code.dimension() == 4 && r.dual_designed_distance == 3 && r.code.generator_hex() == "0x9AF";
  });
  EXPECT_TRUE(found);
}

TEST(Search, Length31ContainsTableParameters) {
  const auto res = search_self_orthogonal_bch(31);
  std::set<std::pair<std::size_t, std::size_t>> params;
  for (const auto& r : res) params.insert({r.quantum_k(), r.dual_designed_distance});
  EXPECT_TRUE(params.count({1, 7}));
  EXPECT_TRUE(params.count({11, 5}));
  EXPECT_TRUE(params.count({21, 3}));
}

TEST(Search, EveryResultIsSelfOrthogonalAndDividesXnPlus1) {
  for (std::size_t n : {15, 21, 31, 45}) {
    for (const auto& r : search_self_orthogonal_bch(n)) {
      EXPECT_TRUE(poly_divides(r.code.generator, poly_xn_plus_1(n)));
      EXPECT_TRUE(is_self_orthogonal(cyclic_code(r.code)));
    }
  }
}

TEST(Multiplier, MapsEquivalentZeroSets) {
  EXPECT_EQ(zero_set_multiplier({1, 2, 4, 8, 16}, {3, 6, 12, 17, 24}, 31), std::optional<std::size_t>{3});
  EXPECT_FALSE(zero_set_multiplier({0}, {1}, 7));
}

TEST(Golay, Parameters) {
  const auto g = golay24();
  EXPECT_EQ(g.n(), 24U);
  EXPECT_EQ(g.k(), 12U);
  const auto w = test::brute_weights(g);
  EXPECT_EQ(w[8], 759U);
  EXPECT_EQ(w[12], 2576U);
  EXPECT_EQ(w[16], 759U);
  EXPECT_TRUE(is_self_orthogonal(g));
}
