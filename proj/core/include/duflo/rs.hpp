#ifndef DUFLO_RS_HPP
#define DUFLO_RS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "duflo/tableaux.hpp"
#include "duflo/words.hpp"

namespace duflo {

// Row-insertion tableau of a word: insert the letters left to right.
Tableau rs_tableau(const Word& w);

// The prefix tableaux (insertion of [a_1..a_i] for i = 0..n); trace[i] has i
// boxes.
std::vector<Tableau> rs_trace(const Word& w);

// Insertion and recording tableau.  The recording tableau is rebuilt from the
// chain of prefix shapes via chain_psi_inverse, so it is standard even when w
// lives on a larger alphabet.
std::pair<Tableau, Tableau> rs_pair(const Word& w);

// Inverse of rs_pair: recover the word from (T, Q); shapes must match and Q
// must be standard.
Word rs_inverse(const Tableau& t, const Tableau& q);

// The cell of t: all words on the alphabet of t whose insertion tableau is t,
// sorted.  Dispatches to the filter below for small sizes and to the
// recursive enumeration otherwise.
std::vector<Word> cell(const Tableau& t);

// Cell by filtering all arrangements of the alphabet.
std::vector<Word> cell_by_filter(const Tableau& t);

// Cell by the last-letter recursion: split by the last letter p_i = entry
// expelled when deleting corner c_i; each part is
// { [shift-up of u at p_i, p_i] : u in the cell of the standardized
//   corner deletion }.
std::vector<Word> cell_recursive(const Tableau& t);

// Reading words: rows bottom-to-top, and columns left-to-right each read
// bottom-to-top.  Both insert back to t.
std::pair<Word, Word> canonical_words(const Tableau& t);

// The last-letter split data: (p_i, standardized (t ^ c_i)) per corner c_i.
std::vector<std::pair<int, Tableau>> decompose_cell_rows(const Tableau& t);

// The first-letter split data: (q_i, standardized (t <= c_i)) per corner c_i;
// part i of the cell is { [q_i, u] : u in the relabeled sub-cell }.
std::vector<std::pair<int, Tableau>> decompose_cell_cols(const Tableau& t);

// |cell(t)| by the hook length formula.
std::uint64_t cell_size(const Tableau& t);

}  // namespace duflo

#endif  // DUFLO_RS_HPP
