#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>

#include "duflo/io.hpp"
#include "duflo/tableaux.hpp"

namespace duflo {
namespace {

Tableau tab(const std::string& s) { return parse_tableau(s); }

TEST(Tableaux, RecognizesTableaux) {
  EXPECT_TRUE(is_tableau(tab("1 2 5/3 4/6")));
  EXPECT_TRUE(is_tableau(Tableau{}));
  EXPECT_FALSE(is_tableau(Tableau{{2, 1}, {3}}));     // row not increasing
  EXPECT_FALSE(is_tableau(Tableau{{2, 3}, {1, 4}}));  // column not increasing
  EXPECT_FALSE(is_tableau(Tableau{{1}, {2, 3}}));     // row lengths grow
  EXPECT_TRUE(is_standard_tableau(tab("1 3/2 4/5")));
  EXPECT_FALSE(is_standard_tableau(tab("2 4/7")));
  EXPECT_EQ(tableau_size(tab("1 2 5/3 4/6")), 6);
  EXPECT_EQ(tableau_alphabet(tab("2 4/7")), (std::vector<int>{2, 4, 7}));
}

TEST(Tableaux, ShapeAndCornerOrder) {
  const Tableau t = tab("1 2 5/3 4/6");
  EXPECT_EQ(shape(t), (Diagram{3, 2, 1}));
  const std::vector<Corner> cs = corners(t);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (Corner{1, 3}));  // the first corner sits in the last column
  EXPECT_EQ(cs[1], (Corner{2, 2}));
  EXPECT_EQ(cs[2], (Corner{3, 1}));
  EXPECT_TRUE(is_corner(Diagram{3, 2, 1}, Corner{2, 2}));
  EXPECT_FALSE(is_corner(Diagram{3, 2, 1}, Corner{1, 2}));
}

TEST(Tableaux, ReversedDominanceOnDiagrams) {
  EXPECT_TRUE(dominance_geq(Diagram{3, 3, 1}, Diagram{4, 2, 1}));
  EXPECT_FALSE(dominance_geq(Diagram{4, 2, 1}, Diagram{3, 3, 1}));
  EXPECT_TRUE(dominance_geq(Diagram{2, 2}, Diagram{2, 2}));
  EXPECT_TRUE(dominance_geq(Diagram{1, 1, 1}, Diagram{3}));  // column above row
  EXPECT_THROW(dominance_geq(Diagram{2}, Diagram{2, 1}), std::invalid_argument);
}

TEST(Tableaux, DiagramDescendantsAreTheKnownCovers) {
  const std::vector<Diagram> expected{{3, 3, 1}, {4, 1, 1, 1}};
  EXPECT_EQ(diagram_descendants(Diagram{4, 2, 1}), expected);
  EXPECT_EQ(diagram_descendants(Diagram{3}), (std::vector<Diagram>{{2, 1}}));
  EXPECT_TRUE(diagram_descendants(Diagram{1, 1, 1}).empty());  // already maximal
}

TEST(Tableaux, PartitionsEnumerate) {
  EXPECT_EQ(partitions_of(6).size(), 11u);
  for (const Diagram& d : partitions_of(6)) {
    EXPECT_TRUE(is_partition(d));
    int total = 0;
    for (int part : d) total += part;
    EXPECT_EQ(total, 6);
  }
  EXPECT_EQ(partitions_of(0), (std::vector<Diagram>{{}}));
}

TEST(Tableaux, RowOperations) {
  const RowInsertResult bumped = row_insert(Row{1, 3, 5}, 2);
  EXPECT_EQ(bumped.row, (Row{1, 2, 5}));
  EXPECT_EQ(bumped.expelled, std::optional<int>(3));

  const RowInsertResult appended = row_insert(Row{1, 2}, 5);
  EXPECT_EQ(appended.row, (Row{1, 2, 5}));
  EXPECT_FALSE(appended.expelled.has_value());

  EXPECT_EQ(row_add(Row{1, 4}, 2), (Row{1, 2, 4}));
  EXPECT_EQ(row_remove(Row{1, 2, 4}, 2), (Row{1, 4}));

  const RowPushupResult pushed = row_pushup(Row{1, 3, 5}, 4);
  EXPECT_EQ(pushed.row, (Row{1, 4, 5}));
  EXPECT_EQ(pushed.expelled, 3);
}

TEST(Tableaux, InsertionBumpsThroughRows) {
  const InsertResult r = insert(tab("1 4/2 5"), 3);
  EXPECT_EQ(r.tableau, tab("1 3/2 4/5"));
  EXPECT_EQ(r.corner, (Corner{3, 1}));
  const InsertResult fresh = insert(Tableau{}, 2);
  EXPECT_EQ(fresh.tableau, tab("2"));
  EXPECT_EQ(fresh.corner, (Corner{1, 1}));
}

TEST(Tableaux, CornerDeletionTracksItsSegment) {
  const CornerDeletionResult d = delete_corner(tab("1 3/2 4/5"), Corner{3, 1});
  EXPECT_EQ(d.tableau, tab("1 4/2 5"));
  EXPECT_EQ(d.expelled, 3);
  const std::vector<Corner> segment{{1, 2}, {2, 2}, {3, 1}};
  EXPECT_EQ(d.segment, segment);
  EXPECT_THROW(delete_corner(tab("1 3/2 4/5"), Corner{1, 2}), std::invalid_argument);
}

TEST(Tableaux, PushUpExpelsThroughTheRows) {
  const PushupResult r = push_up(tab("1 3/2 4/5"), 6);
  EXPECT_EQ(r.tableau, tab("1 4/2 5/6"));
  EXPECT_EQ(r.expelled, 3);
}

TEST(Tableaux, ColumnOperationsConjugateByTranspose) {
  const Tableau t = tab("1 2 5/3 4/6");
  EXPECT_EQ(transpose(transpose(t)), t);
  EXPECT_EQ(transpose(t), tab("1 3 6/2 4/5"));
  for (int j : {7, 8}) {
    EXPECT_EQ(column_insert(t, j).tableau,
              transpose(insert(transpose(t), j).tableau));
  }
  const CornerDeletionResult d = column_delete(t, Corner{1, 3});
  const CornerDeletionResult via = delete_corner(transpose(t), Corner{3, 1});
  EXPECT_EQ(d.tableau, transpose(via.tableau));
  EXPECT_EQ(d.expelled, via.expelled);
}

TEST(Tableaux, SlicesSelectRowsAndColumns) {
  const Tableau t = tab("1 2 5/3 4/6");
  EXPECT_EQ(row_slice(t, 1, 2), tab("1 2 5/3 4"));
  EXPECT_EQ(row_tail(t, 2), tab("3 4/6"));
  EXPECT_EQ(row_tail(t, 4), Tableau{});
  EXPECT_EQ(col_slice(t, 1, 2), tab("1 2/3 4/6"));
  EXPECT_EQ(col_tail(t, 3), tab("5"));
  EXPECT_EQ(column_of(t, 1), (std::vector<int>{1, 3, 6}));
  EXPECT_EQ(stack_rows(Row{1, 2, 5}, row_tail(t, 2)), t);
  EXPECT_EQ(juxtapose_column({1, 3, 6}, col_tail(t, 2)), t);
}

TEST(Tableaux, SlidesRemoveAnEntry) {
  const Tableau t = tab("1 2 5/3 4/6");
  EXPECT_EQ(jdt_remove(t, 6), tab("1 2 5/3 4"));
  EXPECT_EQ(jdt_remove(t, 1), tab("2 4 5/3/6"));
  EXPECT_EQ(project(tab("1 3 5/2 4"), 2, 5), tab("2 3 5/4"));
  EXPECT_EQ(project(t, 1, 6), t);
}

TEST(Tableaux, ShapeChainsRoundTrip) {
  const Tableau t = tab("1 2 5/3 4/6");
  const Chain expected{{3, 2, 1}, {3, 2}, {2, 2}, {2, 1}, {2}, {1}};
  EXPECT_EQ(chain_psi(t), expected);
  EXPECT_EQ(chain_psi_inverse(expected), t);
  EXPECT_THROW(chain_psi_inverse(Chain{{2, 1}, {2}, {2}}), std::invalid_argument);
}

TEST(Tableaux, DescentValuesOfATableau) {
  EXPECT_EQ(tau_tableau(tab("1 3/2 4/5")), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(tau_tableau(tab("1 2 3")), (std::vector<int>{}));
  EXPECT_EQ(tau_tableau(tab("1/2/3")), (std::vector<int>{1, 2}));
}

TEST(Tableaux, RelabelingRoundTrips) {
  const Tableau t = tab("2 4/7");
  EXPECT_EQ(standardize_tableau(t), tab("1 2/3"));
  EXPECT_EQ(relabel_tableau(tab("1 2/3"), {2, 4, 7}), t);
  EXPECT_EQ(renumber_down_tableau(renumber_up_tableau(t, 4), 4), t);
  EXPECT_EQ(relabel_word(Word{2, 1, 3}, {2, 4, 7}), (Word{4, 2, 7}));
}

TEST(Tableaux, EnumerationMatchesHookCounts) {
  const std::size_t sizes[] = {1, 1, 2, 4, 10, 26};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(standard_tableaux(n).size(), sizes[n]) << "rank " << n;
  }
  EXPECT_EQ(count_standard_tableaux(Diagram{2, 2, 1}), 5u);
  EXPECT_EQ(count_standard_tableaux(Diagram{}), 1u);

  // Sum of squared shape counts over all shapes of 5 boxes = 5!.
  std::uint64_t total = 0;
  for (const Diagram& d : partitions_of(5)) {
    const std::uint64_t count = count_standard_tableaux(d);
    total += count * count;
  }
  EXPECT_EQ(total, 120u);
}

}  // namespace
}  // namespace duflo
