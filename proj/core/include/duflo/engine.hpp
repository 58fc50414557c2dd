#ifndef DUFLO_ENGINE_HPP
#define DUFLO_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "duflo/rs.hpp"
#include "duflo/tableaux.hpp"
#include "duflo/words.hpp"

namespace duflo {

// --- One-step offspring constructions --------------------------------------
//
// The offspring set D(T) of a standard tableau T consists of T itself and
// every insertion tableau reached from a word of the cell of T by one
// ascent step.  Two independent recursions compute it:
//
//   row recursion:    D(T) = union over corners c_i of
//                       { relabeled S inserted back at p_i :
//                         S in D(standardized (T ^ c_i)) }
//                     plus the nonempty corner shifts,
//   column recursion: the transpose-conjugate of the above, with column
//                     deletion / column insertion and dual corner shifts.

// The shape-increasing shift at corner c, empty when the construction fails.
//
// Writing (U, p) = delete_corner(T, c), the candidate is U's first row
// stacked over U rows 2.. with p row-inserted; it survives only when p is
// the largest entry of row 1 of T, the array is a standard tableau and its
// shape strictly dominates-below the shape of T.  For a row-1 corner this is
// equivalent to: row 1 is at least two boxes longer than row 2, or exactly
// one box longer with its last entry smaller than the last entry of row 2.
std::optional<Tableau> corner_shift(const Tableau& t, Corner c);

// Dual (column-side) shift at corner c, empty when the construction fails.
//
// For c not the bottom corner of column 1: delete c from columns 2.. (as
// their own tableau), obtaining U and the expelled entry d.  If d is larger
// than the last entry of column 1, the result is column 1 with d appended,
// juxtaposed with U.  If d falls between the last two entries of column 1,
// the candidate is d column-inserted into (column 1 juxtaposed with U) and
// survives only if its shape strictly dominates-below the shape of T.
std::optional<Tableau> dual_corner_shift(const Tableau& t, Corner c);

// Offspring set via the row recursion (memoized), sorted, contains t.
std::vector<Tableau> offsprings_recursive(const Tableau& t);

// Offspring set via the column recursion (memoized), sorted, contains t.
std::vector<Tableau> offsprings_dual(const Tableau& t);

// --- The induced order on standard tableaux -----------------------------------

struct TableauPoset {
  int n = 0;
  std::vector<Tableau> nodes;                     // sorted by text form
  std::vector<std::pair<int, int>> cover_edges;   // (i, j): nodes[i] covered by nodes[j]
  std::vector<std::vector<char>> reach;           // reach[i][j]: nodes[i] <= nodes[j]

  int index_of(const Tableau& t) const;           // -1 when absent
  bool leq(const Tableau& a, const Tableau& b) const;
};

// Reflexive-transitive closure of the offspring relation on all standard
// tableaux with n boxes.
TableauPoset induced_order(int n);

// Order query without materializing the full poset (breadth-first search
// through memoized offspring sets).
bool duflo_leq_tableaux(const Tableau& a, const Tableau& b);

// Covers of t in the induced order on tableaux of its size.
std::vector<Tableau> duflo_descendants(const Tableau& t);

// Some tableau strictly above t with the requested shape; the shape must
// strictly dominate-below the shape of t.  Returns the first hit in text
// order.
Tableau shape_witness(const Tableau& t, const Diagram& target_shape);

// Subword of the entries of w lying in [lo, hi] (compatible with the jeu de
// taquin projection of the insertion tableau).
Word project_word(const Word& w, int lo, int hi);

}  // namespace duflo

#endif  // DUFLO_ENGINE_HPP
