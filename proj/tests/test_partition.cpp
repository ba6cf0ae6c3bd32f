#include <gtest/gtest.h>

#include "kint/partition.hpp"
#include "oracles.hpp"

using namespace kint;

TEST(Partition, RejectsNonCanonicalParts) {
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({2, 0}), InvalidInput);
  EXPECT_THROW(Partition::parse("3++1"), InvalidInput);
  EXPECT_THROW(Partition::parse("3+x"), InvalidInput);
  EXPECT_EQ(Partition::parse("3+2+2"), Partition({3, 2, 2}));
  EXPECT_EQ(Partition({3, 2, 2}).to_string(), "3+2+2");
}

TEST(Partition, EnumerateInDecreasingLexOrder) {
  const auto four = enumerate_partitions(4);
  const std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(four, want);
  EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{Partition{1}});
  EXPECT_EQ(enumerate_partitions(7).size(), oracle::count_partitions_brute(7));
  EXPECT_EQ(enumerate_partitions(7).size(), 15u);
  for (int n = 1; n <= 14; ++n) {
    const auto ps = enumerate_partitions(n);
    EXPECT_EQ(ps.size(), partition_count(n));
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
    for (const auto& p : ps) EXPECT_EQ(p.n(), n);
  }
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominates({3, 1}, {2, 2}));
  EXPECT_FALSE(dominates({2, 2}, {3, 1}));
  EXPECT_TRUE(dominates({2, 2}, {2, 2}));
  EXPECT_THROW(dominates({3}, {2}), InvalidInput);
}

TEST(Partition, LexCompare) {
  EXPECT_EQ(lex_compare({3, 1}, {2, 2}), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare({2, 1, 1}, {2, 2}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare({2, 1, 1}, {2, 1, 1}), std::strong_ordering::equal);
  EXPECT_THROW(lex_compare({3}, {2, 2}), InvalidInput);
}

TEST(Partition, LexRefinesDominance) {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = enumerate_partitions(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (dominates(a, b)) EXPECT_NE(lex_compare(a, b), std::strong_ordering::less) << a << b;
  }
}

TEST(Partition, Transpose) {
  EXPECT_EQ(transpose({3, 2, 2}), Partition({3, 3, 1}));
  EXPECT_EQ(transpose({6}), Partition({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(transpose({2, 2}), Partition({2, 2}));
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(transpose(transpose(p)), p);
}

TEST(Partition, Split) {
  EXPECT_EQ(split({9, 1}, 2), Partition({6, 3, 1}));
  EXPECT_EQ(split({6}, 1), Partition({4, 2}));
  EXPECT_EQ(split({8, 2}, 2), Partition({5, 3, 2}));
  EXPECT_THROW(split({7}, 2), InvalidInput);      // n = 7 = 3k+1
  EXPECT_THROW(split({7, 3}, 2), InvalidInput);   // first part below n-k
}

TEST(Partition, SplitFlipsParityAndKeepsFixedPoints) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 3 * k + 2; n <= 14; ++n)
      for (const auto& p : enumerate_partitions(n)) {
        if (p.first_row() < n - k) continue;
        const Partition s = split(p, k);
        EXPECT_EQ(s.n(), n);
        EXPECT_NE(s.is_even_class(), p.is_even_class()) << p;
        EXPECT_EQ(s.multiplicity(1), p.multiplicity(1)) << p;
      }
}

TEST(Partition, HookLengths) {
  using Rows = std::vector<std::vector<int>>;
  EXPECT_EQ(hook_lengths({2, 2}), (Rows{{3, 2}, {2, 1}}));
  EXPECT_EQ(hook_lengths({5}), (Rows{{5, 4, 3, 2, 1}}));
  EXPECT_EQ(hook_lengths({3, 1}), (Rows{{4, 2, 1}, {1}}));
}

TEST(Partition, DimensionMatchesTableauxCount) {
  EXPECT_EQ(dim_irrep({2, 2}), 2);
  EXPECT_EQ(oracle::count_syt({2, 2}), 2);
  EXPECT_EQ(dim_irrep({4, 1}), 4);
  EXPECT_EQ(dim_irrep({1, 1, 1, 1, 1}), 1);
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n))
      EXPECT_EQ(dim_irrep(p), oracle::count_syt(p.parts())) << p;
}

TEST(Partition, SumOfSquaredDimensionsIsGroupOrder) {
  for (int n = 1; n <= 12; ++n) {
    Integer s = 0;
    for (const auto& p : enumerate_partitions(n)) {
      s += dim_irrep(p) * dim_irrep(p);
      EXPECT_EQ(dim_irrep(p), dim_irrep(transpose(p)));
    }
    EXPECT_EQ(s, factorial(static_cast<unsigned>(n)));
  }
}

TEST(Partition, Classify) {
  EXPECT_EQ(classify({8, 1, 1}, 2), PartitionClass::fat);
  EXPECT_EQ(classify({3, 1, 1, 1, 1, 1, 1, 1}, 2), PartitionClass::tall);
  EXPECT_EQ(classify({5, 5}, 2), PartitionClass::medium);
  EXPECT_EQ(classify({10}, 2), PartitionClass::trivial);
  EXPECT_EQ(classify(transpose({10}), 2), PartitionClass::sign);
  EXPECT_THROW(classify({2, 2}, 2), InvalidInput);
}

TEST(Partition, FatList) {
  const std::vector<Partition> want{{10}, {9, 1}, {8, 2}, {8, 1, 1}};
  EXPECT_EQ(fat_list(10, 2), want);
  EXPECT_EQ(fat_list(10, 1), (std::vector<Partition>{{10}, {9, 1}}));
  EXPECT_EQ(fat_list(12, 3).size(), 7u);
  for (int k = 0; k <= 4; ++k)
    for (int n = std::max(1, 2 * k); n <= 14; ++n) {
      std::size_t q = 0;
      for (int t = 0; t <= k; ++t) q += partition_count(t);
      const auto fat = fat_list(n, k);
      EXPECT_EQ(fat.size(), q);
      EXPECT_EQ(fat.back(), hook_partition(n, k));
      // exactly the partitions lexicographically >= (n-k, 1^k)
      std::size_t above = 0;
      for (const auto& p : enumerate_partitions(n)) above += p >= hook_partition(n, k);
      EXPECT_EQ(above, q);
    }
}

TEST(Partition, DimBoundReport) {
  // oracle: minimum of the tableaux count over medium partitions of 8
  std::int64_t brute = -1;
  for (const auto& p : enumerate_partitions(8))
    if (classify(p, 1) == PartitionClass::medium) {
      auto d = oracle::count_syt(p.parts());
      if (brute < 0 || d < brute) brute = d;
    }
  ASSERT_EQ(brute, 14);
  const auto r8 = dim_bound_report(8, 1);
  EXPECT_EQ(r8.min_medium_dim, 14);
  EXPECT_TRUE(r8.long_row_checks);
  const auto r6 = dim_bound_report(6, 1);
  EXPECT_TRUE(r6.long_row_checks);
  EXPECT_GT(r6.long_row_checked, 0u);
  // (4,1): hook product 30 <= 1! 4! (5/4)^4
  EXPECT_EQ(hook_product({4, 1}), 30);
  EXPECT_LE(Integer(30) * 256, Integer(24) * 625);
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 2; n <= 14; ++n) EXPECT_TRUE(dim_bound_report(n, k).long_row_checks);
  EXPECT_THROW(dim_bound_report(5, 2), InvalidInput);
}
