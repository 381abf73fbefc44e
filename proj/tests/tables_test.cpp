#include "qcss/tables.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace qcss;

TEST(Table1, SteaneLikeRowPasses) {
  const auto rep = verify_table1_row({15, 7, 3, "0x9AF"}, {});
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.values.at("certified"), "exact");
  EXPECT_EQ(rep.values.at("d(dual)"), "3");
}

TEST(Table1, FlippedConstantTermFails) {
  // Clearing the constant term makes x a factor, so it cannot divide x^15+1.
  const auto rep = verify_table1_row({15, 7, 3, "0x9AE"}, {});
  EXPECT_FALSE(rep.pass());
}

TEST(Table1, WrongDimensionFails) {
  const auto rep = verify_table1_row({15, 5, 3, "0x9AF"}, {});
  EXPECT_FALSE(rep.pass());
}

TEST(Table2, FanoRow) {
  const auto rep = verify_table2_row({2, 2, 1, 8, 4, 4, 4, 1}, {});
  EXPECT_TRUE(rep.pass());
  const auto bad = verify_table2_row({2, 2, 1, 8, 4, 4, 4, 2}, {});
  EXPECT_FALSE(bad.pass());
}

TEST(TableReport, JsonRoundTrip) {
  TableReport t;
  t.title = "demo";
  t.rows.push_back(verify_table2_row({2, 2, 1, 8, 4, 4, 4, 1}, {}));
  const auto j = nlohmann::json::parse(t.to_json());
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("rows").size(), 1U);
  EXPECT_NE(t.to_text().find(t.rows[0].label), std::string::npos);
}

TEST(RmScan, ReproducesPrintedSets) {
  const auto scan = rm_scan(4, 7);
  ASSERT_EQ(scan.size(), kRmPrinted.size());
  EXPECT_TRUE(verify_rm_scan().pass());
}
