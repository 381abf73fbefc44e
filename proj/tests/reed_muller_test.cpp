#include "qcss/reed_muller.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qcss/constructions.hpp"
#include "qcss/errors.hpp"
#include "test_util.hpp"

using namespace qcss;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// span of (u | u + v), u in RM(m-1, r), v in RM(m-1, r-1)
LinearCode raw_plotkin(const LinearCode& a, const LinearCode& b) {
  BitMatrix rows = BitMatrix::with_cols(2 * a.n());
  for (const auto& u : a.generator().row_list()) rows.append_row(BitVector::concat(u, u));
  for (const auto& v : b.generator().row_list()) rows.append_row(BitVector::concat(BitVector(a.n()), v));
  return LinearCode(rows);
}

void for_each_pattern(std::size_t n, std::size_t w, std::size_t first, BitVector& e, const auto& fn) {
  if (w == 0) {
    fn(e);
    return;
  }
  for (std::size_t i = first; i + w <= n; ++i) {
    e.set(i);
    for_each_pattern(n, w - 1, i + 1, e, fn);
    e.set(i, false);
  }
}

}  // namespace

TEST(RmGenerator, Parameters) {
  const auto rm = rm_generator(4, 1);
  EXPECT_EQ(rm.code.n(), 16U);
  EXPECT_EQ(rm.code.k(), 5U);
  EXPECT_EQ(min_distance_exhaustive(rm.code), 8U);
  EXPECT_TRUE(rm.code.same_code(test::rm1(4)));
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t r = 0; r < m; ++r) {
      const auto c = rm_generator(m, r);
      std::size_t k = 0;
      for (std::size_t i = 0; i <= r; ++i) k += binom(m, i);
      EXPECT_EQ(c.code.k(), k);
      EXPECT_EQ(c.monomials.size(), k);
    }
  }
}

TEST(RmGenerator, RepetitionAndParity) {
  for (std::size_t m = 1; m <= 5; ++m) {
    EXPECT_TRUE(rm_generator(m, 0).code.same_code(LinearCode::repetition(std::size_t{1} << m)));
    EXPECT_TRUE(rm_generator(m, m - 1).code.same_code(LinearCode::even_weight(std::size_t{1} << m)));
  }
}

TEST(RmGenerator, Errors) {
  EXPECT_THROW(rm_generator(3, 3), InvalidInput);
  EXPECT_THROW(rm_generator(0, 0), InvalidInput);
}

TEST(RmGenerator, MonomialOrder) {
  const auto rm = rm_generator(3, 2);
  EXPECT_EQ(rm.monomials, (std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6}));
  EXPECT_EQ(rm.code.generator()[1].to_string(), "01010101");
}

TEST(RmGenerator, PlotkinRecursion) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t r = 1; r + 2 <= m; ++r) {
      const auto lhs = rm_generator(m, r).code;
      const auto rhs = raw_plotkin(rm_generator(m - 1, r).code, rm_generator(m - 1, r - 1).code);
      EXPECT_TRUE(lhs.same_code(rhs)) << m << "," << r;
    }
  }
  // where the self-orthogonality gate holds, the construction agrees too
  EXPECT_TRUE(plotkin(rm_generator(3, 1).code, rm_generator(3, 0).code).result.same_code(rm_generator(4, 1).code));
}

TEST(RmGenerator, DualityAndSelfOrthogonality) {
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t r = 0; r < m; ++r) {
      const auto c = rm_generator(m, r).code;
      if (r + 1 < m) EXPECT_TRUE(dual(c).same_code(rm_generator(m, m - r - 1).code));
      EXPECT_EQ(is_self_orthogonal(c), 2 * r <= m - 1) << m << "," << r;
    }
  }
}

TEST(ReedDecode, ZeroErrorRecoversMessage) {
  const auto rm = rm_generator(4, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 32; ++t) {
    const auto msg = test::random_vector(rm.code.k(), rng);
    const auto got = reed_decode(rm, rm.code.encode(msg));
    ASSERT_TRUE(got);
    EXPECT_EQ(got->coefficients, msg);
    EXPECT_EQ(got->flips, 0U);
  }
}

TEST(ReedDecode, ExhaustiveWithinRadiusSmallM) {
  std::mt19937_64 rng(6);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t r = 0; r < m; ++r) {
      const auto rm = rm_generator(m, r);
      const std::size_t n = rm.code.n();
      for (std::size_t w = 0; w <= reed_radius(rm); ++w) {
        BitVector e(n);
        for_each_pattern(n, w, 0, e, [&](const BitVector& err) {
          const auto msg = test::random_vector(rm.code.k(), rng);
          const auto c = rm.code.encode(msg);
          const auto got = reed_decode(rm, c ^ err);
          ASSERT_TRUE(got);
          EXPECT_EQ(got->codeword, c);
          EXPECT_EQ(got->coefficients, msg);
          EXPECT_EQ(got->flips, w);
        });
      }
    }
  }
}

TEST(ReedDecode, SampledWithinRadiusLargerM) {
  std::mt19937_64 rng(7);
  for (std::size_t m = 5; m <= 7; ++m) {
    for (std::size_t r = 0; r + 1 < m; ++r) {
      const auto rm = rm_generator(m, r);
      const std::size_t n = rm.code.n();
      for (int trial = 0; trial < 100; ++trial) {
        BitVector e(n);
        const std::size_t w = rng() % (reed_radius(rm) + 1);
        while (e.weight() < w) e.set(rng() % n);
        const auto c = test::random_codeword(rm.code, rng);
        const auto got = reed_decode(rm, c ^ e);
        ASSERT_TRUE(got);
        EXPECT_EQ(got->codeword, c);
      }
    }
  }
}

TEST(ReedDecode, TieIsFailure) {
  // RM(2,0) = repetition of length 4: two flips leave a 2-2 vote
  const auto rm = rm_generator(2, 0);
  EXPECT_FALSE(reed_decode(rm, BitVector::from_string("1100")));
  EXPECT_THROW(reed_decode(rm, BitVector(5)), InvalidInput);
}

TEST(ReedDecode, Rm42CorrectsSingleFlips) {
  const auto rm = rm_generator(4, 2);
  ASSERT_EQ(rm.code.k(), 11U);
  EXPECT_EQ(min_distance_exhaustive(rm.code), 4U);
  std::mt19937_64 rng(8);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto c = test::random_codeword(rm.code, rng);
    auto r = c;
    r.flip(i);
    const auto got = reed_decode(rm, r);
    ASSERT_TRUE(got);
    EXPECT_EQ(got->codeword, c);
  }
}
