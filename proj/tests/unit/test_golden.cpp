#include <gtest/gtest.h>

#include <algorithm>

#include "cosecant/golden.hpp"

TEST(Golden, TableOneLayout) {
  const auto& rows = cosecant::table1_golden();
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[3].parts, (std::vector<unsigned>{4, 1, 1}));
  EXPECT_EQ(rows[3].length, 3u);
}

TEST(Golden, TableTwoRows) {
  const auto& rows = cosecant::table2_golden();
  ASSERT_EQ(rows.size(), 16u);
  for (unsigned k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].k, k);
    EXPECT_EQ(rows[k].polynomial().degree(), k);
  }
  EXPECT_EQ(rows[6].prefactor_text, "2/(9*15!)");
  ASSERT_EQ(rows[6].expect_diff.size(), 1u);
  EXPECT_EQ(rows[6].expect_diff[0].printed, "3327594");
  EXPECT_EQ(rows[13].prefactor_text, "232/(81*30!)");
}

TEST(Golden, TableThreeCells) {
  const auto& cells = cosecant::table3_golden();
  ASSERT_EQ(cells.size(), 35u);
  const auto marked = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.expect_diff_kind.empty(); });
  const auto typos = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.expect_diff_kind == "typo"; });
  EXPECT_EQ(marked, 13);
  EXPECT_EQ(typos, 3);
}

TEST(Golden, TableFourRows) {
  const auto& rows = cosecant::table4_golden();
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[2].printed_text, "k(k-1)(1)/2");
  EXPECT_TRUE(rows[7].expect_diff.has_value());
  EXPECT_TRUE(rows[8].expect_diff.has_value());
  EXPECT_FALSE(rows[9].expect_diff.has_value());
  EXPECT_EQ(rows[8].polynomial.degree(), 9u);
}
