#include "qcss/projective.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qcss/errors.hpp"
#include "test_util.hpp"

using namespace qcss;

namespace {

struct Geo {
  unsigned k, q;
};

// Every geometry of length <= 128 the search covers.
const Geo kInScope[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 2},
                        {3, 3}, {3, 4}, {4, 2}, {4, 3}, {5, 2}};

std::set<std::string> row_strings(const BitMatrix& m) {
  std::set<std::string> out;
  for (const auto& r : m.row_list()) out.insert(r.to_string());
  return out;
}

BitVector random_error(std::size_t n, std::size_t w, std::mt19937_64& rng) {
  BitVector e(n);
  while (e.weight() < w) e.set(rng() % n);
  return e;
}

}  // namespace

TEST(SmallField, Axioms) {
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 16U, 27U}) {
    const SmallField f(q);
    for (unsigned a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
      for (unsigned b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (unsigned c = 0; c < q; c += 1 + q / 5) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        }
      }
    }
  }
  EXPECT_THROW(SmallField(6), InvalidInput);
}

TEST(ProjGeometry, PointCountsAndCanonicalForm) {
  for (const auto& g : kInScope) {
    const ProjGeometry geom(g.k, g.q);
    std::size_t expect = 0, pw = 1;
    for (unsigned i = 0; i <= g.k; ++i, pw *= g.q) expect += pw;
    EXPECT_EQ(geom.point_count(), expect);
    for (std::size_t i = 0; i < geom.point_count(); ++i) {
      const auto& x = geom.point(i);
      EXPECT_EQ(*std::find_if(x.begin(), x.end(), [](unsigned c) { return c != 0; }), 1U);
      if (i) EXPECT_LT(geom.point(i - 1), x);
      EXPECT_EQ(geom.index_of(x), i);
    }
  }
}

TEST(ConfigParams, Examples) {
  EXPECT_EQ(config_params(2, 2, 1), (ConfigParams{7, 7, 3, 3, 1}));
  EXPECT_EQ(config_params(4, 2, 2), (ConfigParams{155, 31, 35, 7, 7}));
  EXPECT_EQ(config_params(5, 2, 3), (ConfigParams{651, 63, 155, 15, 35}));
  EXPECT_EQ(config_params(4, 2, 3).b, 31U);
  EXPECT_EQ(config_params(4, 2, 3).kprime, 15U);
  EXPECT_THROW(config_params(2, 2, 2), InvalidInput);
}

TEST(EnumerateSpaces, CountsMatchClosedFormForAllGeometriesInScope) {
  // enumerate_spaces itself throws if the counts or incidence invariants disagree
  for (const auto& g : kInScope) {
    for (unsigned l = 1; l < g.k; ++l) {
      const auto cfg = enumerate_spaces(g.k, g.q, l);
      EXPECT_EQ(cfg.incidence.rows(), cfg.b);
      // double-counting identity b k' = v r
      EXPECT_EQ(cfg.b * cfg.kprime, cfg.v * cfg.r);
    }
  }
}

TEST(EnumerateSpaces, FanoMatchesPrintedMatrix) {
  const auto cfg = enumerate_spaces(2, 2, 1);
  EXPECT_EQ(cfg.row_intersections, (std::set<std::size_t>{1}));
  BitMatrix printed = BitMatrix::with_cols(7);
  const BitMatrix fano = test::fano_extended();
  for (const auto& r : fano.row_list()) printed.append_row(r.slice(0, 7));
  EXPECT_EQ(row_strings(cfg.incidence), row_strings(printed));
}

TEST(EnumerateSpaces, Pg42Hierarchy) {
  const auto planes = enumerate_spaces(4, 2, 2);
  EXPECT_EQ(planes.b, 155U);
  EXPECT_EQ(planes.kprime, 7U);
  EXPECT_EQ(planes.row_intersections, (std::set<std::size_t>{1, 3}));
  const auto solids = enumerate_spaces(4, 2, 3);
  EXPECT_EQ(solids.b, 31U);
  EXPECT_EQ(solids.kprime, 15U);
  EXPECT_EQ(solids.row_intersections, (std::set<std::size_t>{7}));
  const auto lines = enumerate_spaces(4, 2, 1);
  EXPECT_EQ(lines.b, 155U);
  EXPECT_EQ(lines.row_intersections, (std::set<std::size_t>{0, 1}));
}

TEST(ConfigurationFromIncidence, RejectsIrregular) {
  EXPECT_THROW(configuration_from_incidence(BitMatrix::from_strings({"110", "100"})), ConsistencyError);
}

TEST(BuildSoCode, FanoGivesExtendedHamming) {
  const auto code = build_so_code(enumerate_spaces(2, 2, 1));
  EXPECT_EQ(code.n(), 8U);
  EXPECT_EQ(code.k(), 4U);
  EXPECT_EQ(min_distance_exhaustive(code), 4U);
  EXPECT_TRUE(code.same_code(LinearCode(test::fano_extended())));
}

TEST(BuildSoCode, Pg32Planes) {
  const auto code = build_so_code(enumerate_spaces(3, 2, 2));
  EXPECT_EQ(code.n(), 16U);
  EXPECT_EQ(code.k(), 5U);
  EXPECT_EQ(min_distance_exhaustive(code), 8U);
  EXPECT_EQ(dual_distance(code), 4U);
}

TEST(BuildSoCode, MixedParityRejected) {
  EXPECT_THROW(build_so_code(enumerate_spaces(4, 2, 1)), PreconditionError);
}

TEST(BuildSoCode, OddCharacteristicNeverSelfOrthogonal) {
  for (const auto& g : kInScope) {
    if (g.q % 2 == 0) continue;
    for (unsigned l = 1; l < g.k; ++l) {
      const auto cfg = enumerate_spaces(g.k, g.q, l);
      bool so = false;
      try {
        so = is_self_orthogonal(build_so_code(cfg));
      } catch (const PreconditionError&) {
      }
      EXPECT_FALSE(so) << cfg.name();
    }
  }
}

TEST(Rudolph, ZeroErrorAndBounds) {
  const auto cfg = enumerate_spaces(2, 2, 1);
  const RudolphDecoder dec(cfg, true);
  EXPECT_EQ(rudolph_bound(cfg), 1U);
  EXPECT_EQ(rudolph_extended_bound(cfg), 2U);
  EXPECT_EQ(dec.decode(BitVector(8)), BitVector(8));
  EXPECT_THROW(dec.decode(BitVector(7)), InvalidInput);
}

TEST(Rudolph, ExtendedFanoCorrectsSingleFlips) {
  const auto cfg = enumerate_spaces(2, 2, 1);
  const auto code = build_so_code(cfg);   // self-dual, so the decoded code is itself
  const RudolphDecoder dec(cfg, true, 1);
  std::mt19937_64 rng(9);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto c = test::random_codeword(code, rng);
    auto r = c;
    r.flip(i);
    EXPECT_EQ(dec.decode(r), c) << i;
  }
}

TEST(Rudolph, Pg28PlaneCorrectsFourFlips) {
  const auto cfg = enumerate_spaces(2, 8, 1);
  ASSERT_EQ(cfg.v, 73U);
  ASSERT_EQ(cfg.r, 9U);
  const auto code = build_so_code(cfg);
  const auto decoded = dual(code);
  const RudolphDecoder dec(cfg, true, 4);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t w = 1 + trial % 4;
    const auto c = test::random_codeword(decoded, rng);
    const auto e = random_error(74, w, rng);
    const auto got = dec.decode(c ^ e);
    ASSERT_TRUE(got) << "weight " << w;
    EXPECT_EQ(*got, c);
  }
}

TEST(Rudolph, UnextendedPlaneCorrectsWithinBound) {
  // PG(2,4) lines without the extra column: one-step decoding of the dual of the line code
  const auto cfg = enumerate_spaces(2, 4, 1);
  const RudolphDecoder dec(cfg, false);
  ASSERT_EQ(dec.radius(), 2U);
  const LinearCode decoded = dual(LinearCode(cfg.incidence));
  std::mt19937_64 rng(11);
  for (std::size_t i = 0; i < 21; ++i) {
    for (std::size_t j = i + 1; j < 21; ++j) {
      const auto c = test::random_codeword(decoded, rng);
      auto r = c;
      r.flip(i);
      r.flip(j);
      EXPECT_EQ(dec.decode(r), c);
    }
  }
}
