#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "duflo/engine.hpp"
#include "duflo/io.hpp"

namespace duflo {
namespace {

Tableau tab(const std::string& s) { return parse_tableau(s); }

std::vector<Tableau> tabs(const std::vector<std::string>& texts) {
  std::vector<Tableau> out;
  out.reserve(texts.size());
  for (const std::string& s : texts) out.push_back(parse_tableau(s));
  return out;
}

// The offspring enumerations return structurally sorted vectors.
std::vector<Tableau> sorted(std::vector<Tableau> ts) {
  std::sort(ts.begin(), ts.end());
  return ts;
}

TEST(Engine, CornerShiftMovesABoxDown) {
  EXPECT_EQ(corner_shift(tab("1 2/3 4"), Corner{2, 2}),
            std::optional<Tableau>(tab("1 4/2/3")));
  EXPECT_EQ(corner_shift(tab("1 3/2 4"), Corner{2, 2}), std::nullopt);
  EXPECT_EQ(corner_shift(tab("1 2 6 7/3 5/4"), Corner{1, 4}),
            std::optional<Tableau>(tab("1 2 6/3 5 7/4")));
}

TEST(Engine, DualCornerShiftMovesAcrossColumns) {
  EXPECT_EQ(dual_corner_shift(tab("1 2 3"), Corner{1, 3}),
            std::optional<Tableau>(tab("1 3/2")));
  // At the same corner the two constructions give different offsprings; both
  // land in the common offspring set.
  const Tableau t = tab("1 2 6 7/3 5/4");
  const std::optional<Tableau> by_rows = corner_shift(t, Corner{1, 4});
  const std::optional<Tableau> by_columns = dual_corner_shift(t, Corner{1, 4});
  EXPECT_EQ(by_rows, std::optional<Tableau>(tab("1 2 6/3 5 7/4")));
  EXPECT_EQ(by_columns, std::optional<Tableau>(tab("1 2 7/3 6/4/5")));
  const std::vector<Tableau> kids = offsprings_recursive(t);
  EXPECT_TRUE(std::binary_search(kids.begin(), kids.end(), *by_rows));
  EXPECT_TRUE(std::binary_search(kids.begin(), kids.end(), *by_columns));
}

TEST(Engine, OffspringSetsOfSmallTableaux) {
  EXPECT_EQ(offsprings_recursive(tab("1 2/3 4")),
            sorted(tabs({"1 2/3 4", "1 2/3/4", "1 4/2/3"})));
  EXPECT_EQ(offsprings_dual(tab("1 2/3 4")),
            sorted(tabs({"1 2/3 4", "1 2/3/4", "1 4/2/3"})));
  EXPECT_EQ(offsprings_recursive(tab("1 3/2 4")), sorted(tabs({"1 3/2 4", "1 3/2/4"})));
  EXPECT_EQ(offsprings_recursive(tab("1 3/2")), sorted(tabs({"1 3/2", "1/2/3"})));
  EXPECT_EQ(offsprings_recursive(tab("1")), tabs({"1"}));
}

TEST(Engine, NineBoxOffspringSet) {
  const Tableau t = tab("1 2 6 7/3 5/4");
  const std::vector<Tableau> kids = offsprings_recursive(t);
  EXPECT_EQ(kids.size(), 9u);
  EXPECT_TRUE(std::binary_search(kids.begin(), kids.end(), t));
  EXPECT_TRUE(std::binary_search(kids.begin(), kids.end(), tab("1 2 6/3 5 7/4")));
  EXPECT_EQ(kids, offsprings_dual(t));
}

TEST(Engine, TenBoxFirstRowForms) {
  const Tableau t = tab("1 2 3 4 5 6 8/7 9 10");
  const std::vector<Tableau> kids = offsprings_recursive(t);
  // One entry drops out of the first row; or it shortens by a trade; or it
  // keeps its length with one entry replaced by a larger one.
  for (const char* child :
       {"1 3 4 5 6 8/2 7 9 10", "1 2 3 4 5 8 10/6 9/7", "1 2 3 4 5 6 10/7 8/9"}) {
    EXPECT_TRUE(std::binary_search(kids.begin(), kids.end(), tab(child))) << child;
  }

  const Tableau s = tab("1 2 3 4/5 6 9 10/7 8");
  const std::vector<Tableau> shifted = offsprings_recursive(s);
  for (const char* child : {"1 2 3 10/4 6 9/5 8/7", "1 2 3 6/4 8 9 10/5/7"}) {
    EXPECT_TRUE(std::binary_search(shifted.begin(), shifted.end(), tab(child))) << child;
  }
}

TEST(Engine, InducedOrderOnRankThree) {
  const TableauPoset poset = induced_order(3);
  EXPECT_EQ(poset.n, 3);
  EXPECT_EQ(poset.nodes, tabs({"1 2 3", "1 2/3", "1 3/2", "1/2/3"}));
  const std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(poset.cover_edges, covers);

  EXPECT_TRUE(poset.leq(tab("1 2 3"), tab("1/2/3")));
  EXPECT_TRUE(poset.leq(tab("1 2/3"), tab("1 2/3")));
  EXPECT_FALSE(poset.leq(tab("1 2/3"), tab("1 3/2")));
  EXPECT_FALSE(poset.leq(tab("1 3/2"), tab("1 2/3")));
  EXPECT_EQ(poset.index_of(tab("1 2")), -1);
}

TEST(Engine, OrderQueriesAgreeWithThePoset) {
  const TableauPoset poset = induced_order(4);
  for (const Tableau& a : poset.nodes) {
    for (const Tableau& b : poset.nodes) {
      EXPECT_EQ(duflo_leq_tableaux(a, b), poset.leq(a, b))
          << to_text(a) << " vs " << to_text(b);
    }
  }
}

TEST(Engine, DescendantsAreTheCovers) {
  EXPECT_EQ(duflo_descendants(tab("1 2/3 4")), tabs({"1 2/3/4", "1 4/2/3"}));
  EXPECT_TRUE(duflo_descendants(tab("1/2/3")).empty());  // the column is maximal
}

TEST(Engine, ShapeWitnessFindsATableauAbove) {
  EXPECT_EQ(shape_witness(tab("1 2 3"), Diagram{2, 1}), tab("1 2/3"));
  const Tableau t = tab("1 2 5/3 4/6");
  const Tableau witness = shape_witness(t, Diagram{2, 2, 1, 1});
  EXPECT_EQ(shape(witness), (Diagram{2, 2, 1, 1}));
  EXPECT_TRUE(duflo_leq_tableaux(t, witness));
  EXPECT_NE(witness, t);
  EXPECT_THROW(shape_witness(tab("1 2 3"), Diagram{3}), std::invalid_argument);
  EXPECT_THROW(shape_witness(tab("1/2/3"), Diagram{2, 1}), std::invalid_argument);
}

TEST(Engine, WordProjectionMatchesTableauProjection) {
  const Word w{2, 5, 1, 4, 3};
  EXPECT_EQ(project_word(w, 2, 4), (Word{2, 4, 3}));
  for (int lo = 1; lo <= 5; ++lo) {
    for (int hi = lo; hi <= 5; ++hi) {
      EXPECT_EQ(rs_tableau(project_word(w, lo, hi)), project(rs_tableau(w), lo, hi))
          << "window " << lo << ".." << hi;
    }
  }
}

}  // namespace
}  // namespace duflo
