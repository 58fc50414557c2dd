#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "duflo/engine.hpp"
#include "duflo/io.hpp"
#include "duflo/oracle.hpp"

namespace duflo {
namespace {

Tableau tab(const std::string& s) { return parse_tableau(s); }

TEST(Oracle, WeakCoversListAscentSteps) {
  const std::vector<std::pair<Word, Word>> covers = weak_covers(3);
  EXPECT_EQ(covers.size(), 6u);
  for (const auto& [lower, upper] : covers) {
    EXPECT_EQ(coxeter_length(upper), coxeter_length(lower) + 1);
    EXPECT_TRUE(duflo_leq_words(lower, upper));
    // The two words differ by one adjacent swap.
    int mismatches = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) mismatches += lower[i] != upper[i];
    EXPECT_EQ(mismatches, 2);
  }
  const std::pair<Word, Word> first{{1, 2, 3}, {1, 3, 2}};
  EXPECT_EQ(covers.front(), first);
}

TEST(Oracle, BruteForceCellMatchesKnownFibers) {
  const std::vector<Word> small{{2, 1, 4, 3}, {2, 4, 1, 3}};
  EXPECT_EQ(cell_bruteforce(tab("1 3/2 4")), small);

  const std::vector<Word> hook{{1, 3, 2, 4}, {1, 3, 4, 2}, {3, 1, 2, 4}};
  EXPECT_EQ(cell_bruteforce(tab("1 2 4/3")), hook);
}

TEST(Oracle, BruteForceOffspringsOfAKnownTableau) {
  const std::set<Tableau> expected{tab("1 2/3 4"), tab("1 2/3/4"), tab("1 4/2/3")};
  EXPECT_EQ(offsprings_bruteforce(tab("1 2/3 4")), expected);
}

TEST(Oracle, SweepCollectsEveryTableau) {
  const auto all = offsprings_bruteforce_all(4);
  EXPECT_EQ(all.size(), 10u);
  for (const auto& [t, kids] : all) {
    EXPECT_EQ(kids, offsprings_bruteforce(t)) << to_text(t);
    EXPECT_TRUE(kids.count(t)) << to_text(t);
  }
}

TEST(Oracle, BruteForceOrderChainsThreeFibers) {
  const Tableau t1 = rs_tableau(Word{1, 3, 2, 4});
  const Tableau t2 = rs_tableau(Word{3, 1, 4, 2});
  const Tableau t3 = rs_tableau(Word{3, 2, 1, 4});
  EXPECT_EQ(t1, tab("1 2 4/3"));
  EXPECT_EQ(t2, tab("1 2/3 4"));
  EXPECT_EQ(t3, tab("1 4/2/3"));

  const std::vector<Word> fiber2{{3, 1, 4, 2}, {3, 4, 1, 2}};
  const std::vector<Word> fiber3{{3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 2, 1}};
  EXPECT_EQ(cell_bruteforce(t2), fiber2);
  EXPECT_EQ(cell_bruteforce(t3), fiber3);

  const OrderOracle oracle = induced_order_bruteforce(4);
  EXPECT_TRUE(oracle.leq(t1, t2));
  EXPECT_TRUE(oracle.leq(t2, t3));
  EXPECT_TRUE(oracle.leq(t1, t3));
  EXPECT_FALSE(oracle.leq(t2, t1));
  EXPECT_FALSE(oracle.leq(t3, t2));
}

TEST(Oracle, MatchesTheRecursiveOrderOnRankFour) {
  const OrderOracle oracle = induced_order_bruteforce(4);
  const TableauPoset poset = induced_order(4);
  ASSERT_EQ(oracle.nodes.size(), poset.nodes.size());
  for (const Tableau& a : oracle.nodes) {
    for (const Tableau& b : oracle.nodes) {
      EXPECT_EQ(oracle.leq(a, b), poset.leq(a, b)) << to_text(a) << " vs " << to_text(b);
    }
  }
}

}  // namespace
}  // namespace duflo
