#include <gtest/gtest.h>

#include <set>

#include "cosecant/errors.hpp"
#include "cosecant/golden.hpp"
#include "cosecant/partitions.hpp"
#include "oracles.hpp"

using cosecant::PartitionMultiset;

TEST(Partitions, CountMatchesRecursiveCount) {
  for (unsigned k = 0; k <= 40; ++k) {
    EXPECT_EQ(cosecant::partition_count(k), oracle::count_partitions(k, k)) << k;
  }
  EXPECT_EQ(cosecant::partition_count(100), 190569292);
  EXPECT_EQ(cosecant::partition_count(200), cosecant::BigInt("3972999029388"));
}

TEST(Partitions, EnumerationIsCompleteAndDistinct) {
  for (unsigned k = 0; k <= 22; ++k) {
    const auto all = cosecant::enumerate_partitions(k);
    ASSERT_EQ(all.size(), oracle::count_partitions(k, k)) << k;
    std::set<std::vector<unsigned>> seen;
    for (const auto& pm : all) {
      unsigned sum = 0;
      unsigned length = 0;
      for (const auto& e : pm.multiplicities()) {
        sum += e.part * e.multiplicity;
        length += e.multiplicity;
      }
      EXPECT_EQ(sum, k);
      EXPECT_EQ(pm.length(), length);
      EXPECT_TRUE(seen.insert(pm.parts()).second);
    }
  }
}

TEST(Partitions, DecreasingLexicographicOrder) {
  const auto all = cosecant::enumerate_partitions(12);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1].parts(), all[i].parts());
}

TEST(Partitions, ZeroHasOnlyTheEmptyPartition) {
  const auto all = cosecant::enumerate_partitions(0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].length(), 0u);
  EXPECT_EQ(all[0].to_string(), "{}");
}

TEST(Partitions, SixMatchesGoldenLayout) {
  const auto all = cosecant::enumerate_partitions(6);
  const auto& golden = cosecant::table1_golden();
  ASSERT_EQ(all.size(), golden.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].parts(), golden[i].parts);
    EXPECT_EQ(std::vector<cosecant::PartCount>(all[i].multiplicities().begin(), all[i].multiplicities().end()),
              golden[i].multiplicities);
    EXPECT_EQ(all[i].length(), golden[i].length);
  }
}

TEST(Partitions, RangeMatchesVector) {
  std::vector<PartitionMultiset> via_range;
  for (const auto& pm : cosecant::Partitions(9)) via_range.push_back(pm);
  EXPECT_EQ(via_range, cosecant::enumerate_partitions(9));
}

TEST(Partitions, ValidatingConstructor) {
  const PartitionMultiset pm(6, {{4, 1}, {1, 2}});
  EXPECT_EQ(pm.multiplicity(1), 2u);
  EXPECT_EQ(pm.multiplicity(4), 1u);
  EXPECT_EQ(pm.multiplicity(3), 0u);
  EXPECT_EQ(pm.length(), 3u);
  EXPECT_EQ(pm.to_string(), "{4,1,1}");
  EXPECT_THROW(PartitionMultiset(6, {{4, 1}, {1, 1}}), cosecant::DomainError);  // sum 5
  EXPECT_THROW(PartitionMultiset(6, {{1, 2}, {4, 1}}), cosecant::DomainError);  // order
  EXPECT_THROW(PartitionMultiset(6, {{0, 1}, {6, 1}}), cosecant::DomainError);
  EXPECT_THROW(PartitionMultiset(6, {{4, 2}}), cosecant::DomainError);          // 2 > floor(6/4)
}

TEST(Partitions, FromParts) {
  const std::vector<unsigned> parts{1, 3, 1, 1};
  const auto pm = PartitionMultiset::from_parts(parts);
  EXPECT_EQ(pm.weight(), 6u);
  EXPECT_EQ(pm.parts(), (std::vector<unsigned>{3, 1, 1, 1}));
}

TEST(Partitions, MultinomialFactor) {
  EXPECT_EQ(cosecant::multinomial_factor(PartitionMultiset(4, {{2, 1}, {1, 2}})), 3);
  EXPECT_EQ(cosecant::multinomial_factor(PartitionMultiset(6, {{1, 6}})), 1);
  EXPECT_EQ(cosecant::multinomial_factor(PartitionMultiset(6, {{3, 1}, {2, 1}, {1, 1}})), 6);
}
