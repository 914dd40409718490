#include "hecke/tableaux.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hecke;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Permutations, ProductsComposeLeftToRight) {
  Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  Permutation w = s1 * s2;  // k(s1 s2) = (k s1) s2
  EXPECT_EQ(w(1), 3);
  EXPECT_EQ(w(2), 1);
  EXPECT_EQ(w(3), 2);
  EXPECT_EQ(Permutation::from_word(3, {1, 2}), w);
  EXPECT_EQ(w * w.inverse(), Permutation::identity(3));
  EXPECT_THROW(Permutation(std::vector<int>{1, 1, 2}), DomainError);
}

TEST(Permutations, LengthEqualsReducedWordLength) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_perms(n)) {
      auto word = w.reduced_word();
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(Permutation::from_word(n, word), w);
      for (int i = 1; i < n; ++i) EXPECT_EQ(w.times_simple(i).length(), w.length() + (w.is_right_descent(i) ? -1 : 1));
    }
}

TEST(DistinguishedTableaux, WLambdaExamples) {
  EXPECT_EQ(w_lambda({3, 2}), Permutation(std::vector<int>{1, 3, 5, 2, 4}));
  EXPECT_TRUE(w_lambda({4}).is_identity());
  EXPECT_EQ(w_lambda({2, 1}), Permutation::simple(3, 2));
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(t_row(p).act(w_lambda(p)), t_col(p));
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(enumerate_semistandard({3}, {2, 1}).size(), 1u);
  EXPECT_EQ(enumerate_semistandard({2, 1}, {2, 1}).size(), 1u);
  auto t = enumerate_semistandard({3, 1}, {2, 1, 1});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].to_string(), "[[1,1,2],[3]]");
  EXPECT_EQ(t[1].to_string(), "[[1,1,3],[2]]");
  EXPECT_TRUE(enumerate_semistandard({2}, {1, 1}).size() == 1);
  EXPECT_TRUE(enumerate_semistandard({1, 1}, {2}).empty());
  EXPECT_THROW(enumerate_row_standard({2}, {2, 1}), DomainError);
}

TEST(Enumeration, CountsPredicatesAndOrder) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        auto rs = enumerate_row_standard(lambda, mu);
        auto ss = enumerate_semistandard(lambda, mu);
        std::set<std::vector<int>> words;
        for (const auto& A : rs) {
          EXPECT_TRUE(A.is_row_standard());
          EXPECT_EQ(A.type(static_cast<int>(mu.size())), mu);
          words.insert(A.reading_word());
        }
        EXPECT_EQ(words.size(), rs.size());
        EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end(), [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); }));
        for (const auto& A : ss) {
          EXPECT_TRUE(A.is_semistandard());
          EXPECT_TRUE(words.count(A.reading_word()));
        }
        std::size_t ss_filter = static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [](const Tableau& A) { return A.is_semistandard(); }));
        EXPECT_EQ(ss.size(), ss_filter);
        // Kostka numbers vanish off the dominance order.
        if (!dominates(lambda, mu)) {
          EXPECT_TRUE(ss.empty());
        }
      }
}

TEST(Enumeration, StandardTableauxMatchHookFormula) {
  for (int n = 1; n <= 7; ++n) {
    std::size_t total = 0;
    for (const auto& lambda : partitions_of(n)) {
      std::size_t f = count_standard_tableaux(lambda);
      EXPECT_EQ(enumerate_semistandard(lambda, Composition(static_cast<std::size_t>(n), 1)).size(), f);
      total += f * f;
    }
    EXPECT_EQ(static_cast<long>(total), factorial(n));
  }
}

TEST(RowClasses, SizesAndExamples) {
  EXPECT_EQ(row_equiv_class(parse_tableau("[[1,1,2]]")).size(), 3u);
  EXPECT_EQ(row_equiv_class(parse_tableau("[[1,2,3],[4,5]]")).size(), 12u);
  EXPECT_EQ(row_equiv_class(parse_tableau("[[1],[2],[3]]")).size(), 1u);
  for (const auto& B : row_equiv_class(parse_tableau("[[1,2,2],[3,1]]"))) EXPECT_EQ(B.type(3), (Composition{2, 2, 1}));
}

TEST(CosetReps, ExamplesAndMinimality) {
  EXPECT_EQ(coset_reps({4}).size(), 1u);
  EXPECT_EQ(coset_reps({2, 1}).size(), 3u);
  EXPECT_EQ(coset_reps({1, 1, 1, 1}).size(), 24u);
  for (const auto& mu : std::vector<Composition>{{2, 1}, {2, 2}, {1, 3}, {2, 0, 2}, {3, 1, 2}}) {
    auto reps = coset_reps(mu);
    long expect = factorial(size(mu));
    for (int part : mu) expect /= factorial(part);
    EXPECT_EQ(static_cast<long>(reps.size()), expect);
    for (const auto& d : reps) EXPECT_TRUE(t_row(mu).act(d).is_row_standard()) << d.to_string();
  }
}

TEST(OneLineTableauMap, ExamplesAndBijection) {
  EXPECT_TRUE(perm_of_tableau(parse_tableau("[[1,1],[2]]"), {2, 1}).is_identity());
  EXPECT_TRUE(perm_of_tableau(parse_tableau("[[1,1,2]]"), {2, 1}).is_identity());
  Permutation d = perm_of_tableau(parse_tableau("[[1,2,1]]"), {2, 1});
  EXPECT_EQ(t_row(Composition{2, 1}).act(d).to_string(), "[[1,3],[2]]");
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        auto reps = coset_reps(mu);
        std::set<Permutation> expect(reps.begin(), reps.end()), got;
        std::size_t count = 0;
        for (const auto& R : enumerate_row_standard(lambda, mu))
          for (const auto& A : row_equiv_class(R)) {
            got.insert(perm_of_tableau(A, mu));
            ++count;
          }
        EXPECT_EQ(count, expect.size());
        EXPECT_TRUE(got == expect) << to_string(lambda) << " " << to_string(mu);
      }
}

TEST(OneNodeCodes, RoundTripAndAccessors) {
  auto codes = one_node_codes({2, 1, 1});
  ASSERT_EQ(codes.size(), 2u);
  EXPECT_EQ(codes[0].to_string(), "mu:2,3|base=2,1,1");
  EXPECT_EQ(codes[1].to_string(), "mu:3,2|base=2,1,1");
  EXPECT_EQ(OneNodeCode::parse("mu:3,2|base=2,1,1"), codes[1]);
  EXPECT_EQ(codes[1].r(3), 1);
  EXPECT_EQ(codes[1].r_check(3), 1);
  EXPECT_THROW(codes[1].r_check(2), DomainError);
  EXPECT_THROW(OneNodeCode({2, 1, 1}, {2, 2}), DomainError);
  EXPECT_THROW(OneNodeCode({2, 1}, {2, 3}), DomainError);
  EXPECT_THROW(OneNodeCode::parse("mu:2|base=2"), DomainError);
  for (int n = 2; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      if (!OneNodeCode::is_one_node_base(mu)) continue;
      Partition lambda = OneNodeCode::source_of(mu);
      auto all = enumerate_semistandard(lambda, mu);
      EXPECT_EQ(one_node_codes(mu).size(), all.size());
      for (const auto& A : all) {
        OneNodeCode c = OneNodeCode::encode(A, mu);
        EXPECT_EQ(c.decode(), A);
        EXPECT_TRUE(c.is_semistandard());
        EXPECT_EQ(OneNodeCode::parse(c.to_string()), c);
      }
    }
}

TEST(Tableaux, ParseAndPrint) {
  Tableau t = parse_tableau("[[1,1,2],[3]]");
  EXPECT_EQ(t.shape(), (Composition{3, 1}));
  EXPECT_EQ(t.to_string(), "[[1,1,2],[3]]");
  EXPECT_EQ(t.at(2, 1), 3);
  EXPECT_THROW(parse_tableau("[[1,2]"), DomainError);
  EXPECT_THROW(parse_tableau("[1,2]"), DomainError);
}
