#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hym/combinatorics.hpp"
#include "hym/error.hpp"
#include "oracles.hpp"

namespace hym {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 5), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(5), 120u);
}

TEST(CombIndex, RankOfExampleSubsets) {
  EXPECT_EQ(CombIndex(4, {1, 2}).rank(), 1u);
  EXPECT_EQ(CombIndex(4, {1, 4}).rank(), 3u);
  EXPECT_EQ(CombIndex(4, {2, 3}).rank(), 4u);
  EXPECT_EQ(CombIndex(4, {3, 4}).rank(), 6u);
  EXPECT_EQ(CombIndex(3, {1, 2, 3}).rank(), 1u);
}

TEST(CombIndex, RejectsBadMembers) {
  EXPECT_THROW(CombIndex(3, {2, 1}), Error);
  EXPECT_THROW(CombIndex(3, {1, 4}), Error);
  EXPECT_THROW(CombIndex(3, {0, 1}), Error);
  EXPECT_THROW(CombIndex::unrank(4, 2, 7), Error);
  EXPECT_THROW(CombIndex::unrank(4, 2, 0), Error);
}

TEST(CombIndex, RankUnrankAreInverse) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto subsets = combinations(n, k);
      ASSERT_EQ(subsets.size(), binomial(n, k));
      for (std::size_t r = 1; r <= subsets.size(); ++r) {
        const CombIndex c = CombIndex::unrank(n, k, r);
        ASSERT_EQ(c.rank(), r);
        std::vector<std::size_t> zero_based;
        for (std::size_t m : c.members()) zero_based.push_back(m - 1);
        ASSERT_EQ(zero_based, subsets[r - 1]);
      }
    }
}

TEST(Combinations, LexicographicAndDistinct) {
  const auto subsets = combinations(6, 3);
  EXPECT_TRUE(std::is_sorted(subsets.begin(), subsets.end()));
  EXPECT_EQ(std::set(subsets.begin(), subsets.end()).size(), subsets.size());
  EXPECT_EQ(subsets.front(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(subsets.back(), (std::vector<std::size_t>{3, 4, 5}));
}

TEST(PermutationWalker, VisitsAllInLexOrderWithCorrectSigns) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto expected = oracle::all_permutations(n);
    PermutationWalker w(n);
    std::size_t seen = 0;
    do {
      ASSERT_LT(seen, expected.size());
      const std::vector<std::size_t> cur(w.current().begin(), w.current().end());
      ASSERT_EQ(cur, expected[seen]);
      ASSERT_EQ(w.sign(), oracle::inversion_sign(cur));
      ++seen;
    } while (w.next());
    EXPECT_EQ(seen, factorial(n));
  }
}

}  // namespace
}  // namespace hym
