#include "qcss/codes.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qcss/errors.hpp"
#include "test_util.hpp"

using namespace qcss;

namespace {

std::vector<std::uint64_t> as_u64(const WeightEnumerator& w) {
  std::vector<std::uint64_t> out;
  for (const auto& c : w.coeffs) out.push_back(static_cast<std::uint64_t>(c));
  return out;
}

}  // namespace

TEST(LinearCode, DropsDependentRowsInOrder) {
  const LinearCode c(test::fano_extended());
  EXPECT_EQ(c.k(), 4U);
  EXPECT_EQ(c.n(), 8U);
  EXPECT_EQ(c.generator()[0].to_string(), "11100001");
  EXPECT_EQ(c.generator()[1].to_string(), "10011001");
}

TEST(WeightEnumerator, RepetitionCode) {
  EXPECT_EQ(as_u64(weight_enumerator(LinearCode::repetition(3))), (std::vector<std::uint64_t>{1, 0, 0, 1}));
}

TEST(WeightEnumerator, ExtendedHamming) {
  const auto w = weight_enumerator(test::extended_hamming());
  EXPECT_EQ(as_u64(w), test::brute_weights(test::extended_hamming()));
  EXPECT_EQ(w.coeffs[4], 14);
  EXPECT_EQ(w.to_csv(), "w,count\n0,1\n4,14\n8,1\n");
}

TEST(WeightEnumerator, FirstOrderReedMuller) {
  const auto c = test::rm1(4);
  const auto w = weight_enumerator(c);
  EXPECT_EQ(as_u64(w), test::brute_weights(c));
  EXPECT_EQ(w.coeffs[8], 30);
}

TEST(WeightEnumerator, MatchesBruteForceOnRandomCodes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    // widths chosen to exercise 1-, 2-, 3- and 4-word kernels plus the generic path
    const std::size_t widths[] = {7, 64, 65, 130, 190, 256, 300};
    const std::size_t n = widths[trial % 7];
    const LinearCode c(test::random_matrix(1 + rng() % 10, n, rng));
    EXPECT_EQ(as_u64(weight_enumerator(c)), test::brute_weights(c)) << "n=" << n;
  }
}

TEST(WeightEnumerator, BudgetIsEnforced) {
  std::mt19937_64 rng(1);
  const LinearCode c(test::random_matrix(12, 40, rng));
  EXPECT_THROW(weight_enumerator(c, 100), ResourceError);
}

TEST(MacWilliams, RmOneGivesHammingSixteen) {
  const auto c = test::rm1(4);
  const auto dual_w = macwilliams(weight_enumerator(c), 16, 5);
  EXPECT_EQ(dual_w.coeffs[4], 140);
  EXPECT_EQ(as_u64(dual_w), test::brute_weights(dual(c)));
}

TEST(MacWilliams, AgreesWithDirectDualEnumeration) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + rng() % 14;
    const LinearCode c(test::random_matrix(1 + rng() % (n - 1), n, rng));
    if (c.k() == n) continue;
    EXPECT_EQ(as_u64(macwilliams(weight_enumerator(c), n, c.k())), test::brute_weights(dual(c)));
  }
}

TEST(MacWilliams, RejectsInvalidEnumerator) {
  WeightEnumerator bogus;
  bogus.coeffs = {1, 0, 1, 0};
  EXPECT_NO_THROW(macwilliams(bogus, 3, 1));
  // three weight-1 words and nothing else cannot be closed under addition
  bogus.coeffs = {1, 3, 0, 0};
  EXPECT_THROW(macwilliams(bogus, 3, 2), ConsistencyError);
  bogus.coeffs = {2, 0, 0, 0};
  EXPECT_THROW(macwilliams(bogus, 3, 1), ConsistencyError);
}

TEST(MinDistance, EdgeCases) {
  EXPECT_EQ(min_distance_exhaustive(LinearCode::full(5)), 1U);
  EXPECT_THROW(min_distance_exhaustive(LinearCode::zero(5)), InvalidInput);
  EXPECT_EQ(min_distance_exhaustive(test::extended_hamming()), 4U);
  EXPECT_EQ(dual_distance(test::extended_hamming()), 4U);
  EXPECT_THROW(dual_distance(LinearCode::full(4)), InvalidInput);
}

TEST(MinDistance, DualDistanceMatchesBruteForce) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + rng() % 12;
    const LinearCode c(test::random_matrix(1 + rng() % (n - 1), n, rng));
    if (c.k() == n) continue;
    EXPECT_EQ(dual_distance(c), test::brute_dual_distance(c));
  }
}

TEST(Duality, SelfOrthogonalityAndSubcodes) {
  EXPECT_TRUE(is_self_orthogonal(test::extended_hamming()));
  EXPECT_FALSE(is_self_orthogonal(LinearCode::even_weight(4)));
  EXPECT_TRUE(is_subcode(test::rm1(4), dual(test::rm1(4))));
  EXPECT_THROW(is_subcode(test::rm1(3), test::rm1(4)), InvalidInput);
  EXPECT_TRUE(dual(dual(test::rm1(4))).same_code(test::rm1(4)));
}

TEST(Duality, IntersectionMatchesMembership) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10;
    const LinearCode a(test::random_matrix(6, n, rng));
    const LinearCode b(test::random_matrix(6, n, rng));
    const auto both = intersection(a, b);
    std::size_t count = 0;
    for_each_codeword(a, [&](const BitVector& v) {
      if (b.contains(v)) ++count;
    });
    EXPECT_EQ(count, std::size_t{1} << both.k());
    for (const auto& r : both.generator().row_list()) {
      EXPECT_TRUE(a.contains(r));
      EXPECT_TRUE(b.contains(r));
    }
  }
}

TEST(Split, HammingWithBoundBelowDistance) {
  const auto v = min_distance_split(test::extended_hamming(), 3);
  EXPECT_EQ(v.kind, SplitVerdict::Kind::kNoCodewordBelow);
  EXPECT_EQ(v.weight, 4U);
  EXPECT_EQ(v.effective_bound, 0U);
}

TEST(Split, HammingWithBoundAtDistance) {
  const auto v = min_distance_split(test::extended_hamming(), 4);
  ASSERT_EQ(v.kind, SplitVerdict::Kind::kFoundWeight);
  EXPECT_EQ(v.weight, 4U);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->weight(), 4U);
  EXPECT_TRUE(test::extended_hamming().contains(*v.witness));
}

TEST(Split, AgreesWithExhaustiveOnRandomCodes) {
  std::mt19937_64 rng(66);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const std::size_t n = 12 + rng() % 30;
    const std::size_t k = 2 + rng() % (n / 2 - 1);
    const LinearCode c(test::random_matrix(k, n, rng));
    SplitVerdict v;
    const std::size_t bound = 1 + rng() % 10;
    try {
      v = min_distance_split(c, bound);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    const std::size_t d = min_distance_exhaustive(c);
    if (d <= bound) {
      ASSERT_EQ(v.kind, SplitVerdict::Kind::kFoundWeight);
      EXPECT_EQ(v.weight, d);
      ASSERT_TRUE(v.witness);
      EXPECT_EQ(v.witness->weight(), d);
      EXPECT_TRUE(c.contains(*v.witness));
    } else {
      EXPECT_EQ(v.kind, SplitVerdict::Kind::kNoCodewordBelow);
      EXPECT_EQ(v.weight, bound + 1);
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(Split, NoInformationSetInComplement) {
  // [4,3] code: only one non-pivot column, cannot hold 3 information positions.
  EXPECT_THROW(min_distance_split(LinearCode::even_weight(4), 2), PreconditionError);
}

TEST(MinWeightWords, OrderedBySmallestSupport) {
  const auto words = min_weight_codewords(test::extended_hamming());
  ASSERT_EQ(words.size(), 14U);
  EXPECT_EQ(words.front().support(), (std::vector<std::size_t>{0, 1, 2, 3}));
  for (std::size_t i = 1; i < words.size(); ++i) EXPECT_TRUE(support_less(words[i - 1], words[i]));
}

TEST(CodeText, RoundTrip) {
  const auto c = test::rm1(3);
  std::istringstream in(to_text(c));
  EXPECT_EQ(code_from_text(in).generator(), c.generator());
}
