#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "duflo/words.hpp"

namespace duflo {
namespace {

Word identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

TEST(Words, RecognizesWordsAndStandardWords) {
  EXPECT_TRUE(is_word({2, 5, 1}));
  EXPECT_TRUE(is_word({}));
  EXPECT_FALSE(is_word({2, 2}));
  EXPECT_FALSE(is_word({0, 1}));
  EXPECT_FALSE(is_word({-3}));

  EXPECT_TRUE(is_standard_word({2, 1, 3}));
  EXPECT_FALSE(is_standard_word({2, 5, 1}));
  EXPECT_THROW(require_standard_word({1, 3}, "test"), std::invalid_argument);
}

TEST(Words, PositionAndInverseAgree) {
  const Word w{2, 5, 1, 4, 3};
  EXPECT_EQ(position(w, 5), 2);
  EXPECT_EQ(position(w, 3), 5);
  const Word inv = inverse_word(w);
  for (int v = 1; v <= 5; ++v) {
    EXPECT_EQ(inv[static_cast<std::size_t>(v) - 1], position(w, v));
  }
  EXPECT_EQ(compose(w, inv), identity(5));
  EXPECT_EQ(compose(inv, w), identity(5));
}

TEST(Words, ComposeEvaluatesOuterAfterInner) {
  EXPECT_EQ(compose(Word{2, 1, 3}, Word{3, 1, 2}), (Word{3, 2, 1}));
  EXPECT_EQ(apply_right_s(Word{2, 5, 1, 4, 3}, 2), (Word{2, 1, 5, 4, 3}));
  EXPECT_THROW(compose(Word{1, 2}, Word{1, 2, 3}), std::invalid_argument);
}

TEST(Words, InversionDataOfAKnownWord) {
  const Word w{2, 5, 1, 4, 3};
  const RootSet expected{{1, 2}, {1, 5}, {3, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(inversion_set(w), expected);
  EXPECT_EQ(coxeter_length(w), 5u);
  EXPECT_EQ(tau_word(w), (std::vector<int>{1, 3, 4}));

  RootSet all = inversion_set(w);
  const RootSet rest = complement_roots(w);
  all.insert(all.end(), rest.begin(), rest.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, inversion_set(longest_element(5)));
}

TEST(Words, ContainmentComparesInversionSets) {
  EXPECT_TRUE(duflo_leq_words(Word{1, 3, 2}, Word{3, 1, 2}));
  EXPECT_FALSE(duflo_leq_words(Word{3, 1, 2}, Word{1, 3, 2}));
  EXPECT_TRUE(duflo_leq_words(Word{2, 1, 3}, Word{2, 1, 3}));
  // The identity sits below everything, the longest element above.
  Word w = identity(4);
  do {
    EXPECT_TRUE(duflo_leq_words(identity(4), w));
    EXPECT_TRUE(duflo_leq_words(w, longest_element(4)));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Words, LongestElementIdentities) {
  EXPECT_EQ(longest_element(5), (Word{5, 4, 3, 2, 1}));
  const Word w{2, 5, 1, 4, 3};
  EXPECT_EQ(reversal(w), compose(w, longest_element(5)));
  EXPECT_EQ(compose(inverse_word(w), reversal(w)), longest_element(5));
}

TEST(Words, RenumberingShiftsAroundAFreedValue) {
  EXPECT_EQ(shift_value_up(3, 4), 3);
  EXPECT_EQ(shift_value_up(4, 4), 5);
  EXPECT_EQ(shift_value_down(5, 4), 4);
  const Word w{2, 5, 1, 4, 3};
  EXPECT_EQ(renumber_down(renumber_up(w, 3), 3), w);
  EXPECT_EQ(renumber_up(w, 3), (Word{2, 6, 1, 5, 4}));
  EXPECT_EQ(standardize_word(Word{4, 7, 2}), (Word{2, 3, 1}));
}

TEST(Words, SurgeryRestrictsAndDeletes) {
  const Word w{2, 5, 1, 4, 3};
  EXPECT_EQ(deletion(w, 5), (Word{2, 1, 4, 3}));
  EXPECT_EQ(restriction(w, 2, 4), (Word{5, 1, 4}));
  EXPECT_EQ(value_restriction(w, 2, 4), (Word{2, 4, 3}));
  EXPECT_EQ(colligation(Word{1, 3}, Word{4, 2}), (Word{1, 3, 4, 2}));
  EXPECT_THROW(colligation(Word{1, 3}, Word{3, 2}), std::invalid_argument);
  EXPECT_EQ(word_alphabet(Word{5, 2, 9}), (std::vector<int>{2, 5, 9}));
}

TEST(Words, RangeCyclesSpellTranspositionProducts) {
  EXPECT_EQ(range_cycle_gt(4, 1, 5), (Word{5, 1, 2, 3, 4}));
  EXPECT_EQ(range_cycle_lt(1, 2, 3), (Word{2, 3, 1}));
  EXPECT_EQ(range_cycle_lt(3, 2, 4), identity(4));  // empty product
  EXPECT_EQ(range_cycle_gt(1, 2, 4), identity(4));  // empty product
}

TEST(Words, ExtremePeelingRebuildsTheWord) {
  const Word w{2, 5, 1, 4, 3};

  const auto [top, top_cycle] = decompose_extreme(w, Extreme::max_entry);
  EXPECT_EQ(top, (Word{2, 1, 4, 3}));
  EXPECT_EQ(compose(colligation(top, Word{5}), top_cycle), w);
  EXPECT_EQ(coxeter_length(w), coxeter_length(top) + 3u);  // 5 sits at position 2

  const auto [low, low_cycle] = decompose_extreme(w, Extreme::min_entry);
  EXPECT_EQ(low, (Word{2, 5, 4, 3}));  // keeps its alphabet {2..5}
  EXPECT_EQ(compose(colligation(Word{1}, low), low_cycle), w);
  EXPECT_EQ(coxeter_length(w), 2u + coxeter_length(standardize_word(low)));
}

}  // namespace
}  // namespace duflo
