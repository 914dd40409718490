#include "hecke/partitions.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hecke;

TEST(Partitions, ParseAndValidate) {
  EXPECT_EQ(parse_partition("3,2,1"), (Partition{3, 2, 1}));
  EXPECT_EQ(parse_composition("2,0,1"), (Composition{2, 0, 1}));
  EXPECT_THROW(parse_partition("1,2"), DomainError);
  EXPECT_THROW(parse_partition("3,,1"), DomainError);
  EXPECT_THROW(parse_composition("2,-1"), DomainError);
  EXPECT_THROW(parse_partition("a"), DomainError);
}

TEST(Partitions, Conjugate) {
  EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate({4}), (Partition{1, 1, 1, 1}));
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(size(conjugate(p)), n);
    }
}

TEST(Partitions, CountsMatchThePartitionFunction) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), counts[n]);
  EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
  EXPECT_EQ(partitions_of(4).back(), (Partition{1, 1, 1, 1}));
}

TEST(Dominance, ExamplesAndConjugateReversal) {
  EXPECT_TRUE(dominates({3}, {2, 1}));
  EXPECT_FALSE(dominates({2, 1}, {3}));
  EXPECT_TRUE(dominates({2, 2}, {2, 1, 1}));
  EXPECT_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
  EXPECT_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
  EXPECT_TRUE(dominates({1, 2}, {1, 1, 1}));
  EXPECT_THROW(dominates({2}, {1}), DomainError);
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) EXPECT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a)));
}

TEST(Hooks, ExamplesAndHookFormulaCount) {
  EXPECT_EQ(hook_length({2, 1}, {1, 1}), 3);
  EXPECT_EQ(hook_length({2, 2}, {1, 1}), 3);
  EXPECT_EQ(hook_length({2, 2}, {2, 2}), 1);
  EXPECT_THROW(hook_length({2, 1}, {2, 2}), DomainError);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      Partition c = conjugate(p);
      for (const Node& nd : nodes(p)) EXPECT_EQ(hook_length(p, nd), hook_length(c, {nd.col, nd.row}));
    }
}

TEST(MergedCompositions, Examples) {
  EXPECT_EQ(nu_composition({2, 1}, 1, 0), (Composition{3, 0}));
  EXPECT_EQ(nu_composition({3, 2, 1}, 2, 0), (Composition{3, 3, 0}));
  EXPECT_EQ(nu_composition({2, 2, 1}, 1, 1), (Composition{3, 1, 1}));
  EXPECT_THROW(nu_composition({2, 1}, 1, 1), DomainError);
  EXPECT_THROW(nu_composition({2, 1}, 2, 0), DomainError);
}

TEST(Trimming, RowsAndColumns) {
  EXPECT_EQ(trim_first_row({2, 2}, {2, 1, 1}), (std::pair<Partition, Partition>{{2}, {1, 1}}));
  EXPECT_EQ(trim_first_column({3, 2, 1}, {2, 2, 2}), (std::pair<Partition, Partition>{{2, 1}, {1, 1, 1}}));
  EXPECT_THROW(trim_first_row({3}, {2, 1}), DomainError);
  EXPECT_THROW(trim_first_column({3, 2}, {2, 2, 1}), DomainError);
}

TEST(Regularity, TwoRegular) {
  EXPECT_TRUE(is_2regular({3, 1}));
  EXPECT_FALSE(is_2regular({2, 2}));
  EXPECT_TRUE(is_2regular({}));
}
