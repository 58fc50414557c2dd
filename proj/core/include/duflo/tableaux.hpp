#ifndef DUFLO_TABLEAUX_HPP
#define DUFLO_TABLEAUX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "duflo/words.hpp"

namespace duflo {

// A diagram is an integer partition written as its weakly decreasing list of
// positive parts; the empty diagram is {}.
using Diagram = std::vector<int>;

// A Young tableau is stored row-major.  Rows and columns are strictly
// increasing, entries are pairwise distinct positive integers, row lengths
// weakly decrease.  A tableau is *standard* when its entries are {1..n}.
using Row = std::vector<int>;
using Tableau = std::vector<Row>;

// A decreasing chain of diagrams (largest first), one box removed per step.
using Chain = std::vector<Diagram>;

// Box coordinates, 1-based.
struct Corner {
  int row = 0;
  int col = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// --- Validation ----------------------------------------------------------

bool is_partition(const Diagram& d);
void require_partition(const Diagram& d, const char* what);

bool is_tableau(const Tableau& t);
bool is_standard_tableau(const Tableau& t);
void require_tableau(const Tableau& t, const char* what);
void require_standard_tableau(const Tableau& t, const char* what);

int tableau_size(const Tableau& t);                // number of boxes
std::vector<int> tableau_alphabet(const Tableau& t);  // sorted entries

// --- Shape and corners ------------------------------------------------------

Diagram shape(const Tableau& t);

// Corners (boxes whose removal leaves a diagram), ordered by increasing row
// index; the first corner therefore sits in the last column.
std::vector<Corner> corners(const Tableau& t);
std::vector<Corner> diagram_corners(const Diagram& d);
bool is_corner(const Diagram& d, Corner c);

// --- Dominance (reversed) and diagram descendants -----------------------------

// lam >= mu iff every prefix sum of lam is <= the matching prefix sum of mu
// (rows padded with zeros); both must partition the same number.
bool dominance_geq(const Diagram& lam, const Diagram& mu);

// The covers of mu going up: the descendants lam > mu with nothing in between,
// sorted.  Obtained by moving one box either one row down to the next shorter
// row, or past a run of equal-length rows to the first strictly shorter one.
std::vector<Diagram> diagram_descendants(const Diagram& mu);

// All partitions of n, sorted.
std::vector<Diagram> partitions_of(int n);

// --- Row operations -----------------------------------------------------------

struct RowInsertResult {
  Row row;
  std::optional<int> expelled;  // entry bumped out; empty if j was appended
};

// (R v j): replace the least entry >= j by j, or append j at the end.
RowInsertResult row_insert(const Row& r, int j);

// (R + j): plain sorted insertion of a fresh value.
Row row_add(const Row& r, int j);

// (R - a): remove the entry a.
Row row_remove(const Row& r, int a);

// (R ^ j): replace the greatest entry < j by j; requires j > r[0], j not in r.
// Returns the new row and the replaced entry.
struct RowPushupResult {
  Row row;
  int expelled = 0;
};
RowPushupResult row_pushup(const Row& r, int j);

// --- Insertion and its inverses ------------------------------------------------

struct InsertResult {
  Tableau tableau;
  Corner corner;  // the newly created box
};

// Row insertion (T v j): bump through successive rows; j must be fresh.
// The entry finally sitting in the new box is tableau[corner].
InsertResult insert(const Tableau& t, int j);

struct PushupResult {
  Tableau tableau;
  int expelled = 0;  // the entry pushed out of row 1
};

// (T ^ j): push j up from below the bottom row; requires j to be fresh and
// greater than the first entry of the last row.
PushupResult push_up(const Tableau& t, int j);

struct CornerDeletionResult {
  Tableau tableau;
  int expelled = 0;              // the entry pushed out of row 1
  std::vector<Corner> segment;   // displaced boxes, the corner included
};

// (T ^ c): delete the corner box c, pushing its entry up through the rows
// above.  For a row-1 corner the box is simply dropped and its entry expelled.
CornerDeletionResult delete_corner(const Tableau& t, Corner c);

// --- Column operations ----------------------------------------------------------

Tableau transpose(const Tableau& t);

// (j => T): column insertion, the transpose-conjugate of insert().
InsertResult column_insert(const Tableau& t, int j);

// (T <= c): column deletion, the transpose-conjugate of delete_corner().
CornerDeletionResult column_delete(const Tableau& t, Corner c);

// --- Assembly helpers -------------------------------------------------------------

// Rows i..j of t (1-based, clamped); row_tail(t, i) = rows i..end.
Tableau row_slice(const Tableau& t, int i, int j);
Tableau row_tail(const Tableau& t, int i);

// Columns i..j of t; col_tail(t, i) = columns i..end.
Tableau col_slice(const Tableau& t, int i, int j);
Tableau col_tail(const Tableau& t, int i);

// Stack a row array on top of another (no reordering; the result need not be
// a tableau — validate with is_tableau).
Tableau stack_rows(const Row& top, const Tableau& rest);

// Prefix a column on the left of `rest` (entry i of col heads row i).
Tableau juxtapose_column(const std::vector<int>& col, const Tableau& rest);

// Column j of t, top to bottom.
std::vector<int> column_of(const Tableau& t, int j);

// --- Jeu de taquin -----------------------------------------------------------------

// Remove the box holding `entry` and close the gap by inward slides.
Tableau jdt_remove(const Tableau& t, int entry);

// Keep only the entries in [lo, hi], removing the others by slides (the
// result does not depend on the removal order).
Tableau project(const Tableau& t, int lo, int hi);

// --- Shape chains -------------------------------------------------------------------

// The chain (shape of project(t,1,n), ..., shape of project(t,1,1)) for a
// standard tableau with n boxes.
Chain chain_psi(const Tableau& t);

// Inverse: place entry i in the box removed between steps i and i-1.
Tableau chain_psi_inverse(const Chain& chain);

// --- Entry statistics and relabeling --------------------------------------------------

// { i : the row of i+1 is strictly below the row of i } for standard t.
std::vector<int> tau_tableau(const Tableau& t);

Tableau renumber_up_tableau(const Tableau& t, int j);    // entrywise shift up
Tableau renumber_down_tableau(const Tableau& t, int j);  // entrywise shift down
Tableau standardize_tableau(const Tableau& t);           // relabel onto {1..n}

// Relabel a standard tableau through the sorted alphabet `values`
// (inverse of standardize_tableau for that alphabet).
Tableau relabel_tableau(const Tableau& t, const std::vector<int>& values);
Word relabel_word(const Word& w, const std::vector<int>& values);

// --- Enumeration and counting -----------------------------------------------------------

// All standard tableaux with n boxes, sorted.
std::vector<Tableau> standard_tableaux(int n);

// Number of standard tableaux of the given shape (hook length formula);
// only defined for |d| <= 20.
std::uint64_t count_standard_tableaux(const Diagram& d);

}  // namespace duflo

#endif  // DUFLO_TABLEAUX_HPP
