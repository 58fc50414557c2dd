#ifndef DUFLO_WORDS_HPP
#define DUFLO_WORDS_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace duflo {

// A word is a sequence of pairwise distinct positive integers, written
// [a_1, ..., a_n].  A word is *standard* when its entries are exactly
// {1, ..., n}; standard words are identified with permutations, a_i = w(i).
// General words on an arbitrary alphabet E of positive integers appear as
// restrictions and building blocks of standard ones.
using Word = std::vector<int>;

// A root (i, j) stands for the pair of values i < j taken from the alphabet.
using Root = std::pair<int, int>;
using RootSet = std::vector<Root>;  // always kept sorted ascending

// --- Validation -----------------------------------------------------------

bool is_word(const Word& w);           // pairwise distinct positive entries
bool is_standard_word(const Word& w);  // entries are exactly {1..n}
void require_word(const Word& w, const char* what);
void require_standard_word(const Word& w, const char* what);

// Sorted list of the distinct entries of w.
std::vector<int> word_alphabet(const Word& w);

// --- Basic permutation operations ------------------------------------------

// 1-based index of `value` in w (the inverse permutation evaluated at value).
int position(const Word& w, int value);

// w * s_i: swap the entries at positions i and i+1 (1-based, 1 <= i < n).
Word apply_right_s(const Word& w, int i);

// Composition of standard words of equal rank: (outer . inner)(k) =
// outer[inner(k)].  Right multiplication by x is compose(w, x); left
// multiplication is compose(x, w).
Word compose(const Word& outer, const Word& inner);

// Inverse permutation of a standard word.
Word inverse_word(const Word& w);

// The longest element [n, n-1, ..., 1].
Word longest_element(int n);

// --- Inversions and the containment order -----------------------------------

// Inversion set: pairs of values (a, b), a < b, with b occurring before a.
RootSet inversion_set(const Word& w);

// All value pairs of the alphabet that are NOT inversions of w.
RootSet complement_roots(const Word& w);

// Number of inversions.
std::size_t coxeter_length(const Word& w);

// Descent values of a standard word: { i : i+1 occurs before i }.
std::vector<int> tau_word(const Word& w);

// Containment order on standard words of equal rank:
// y <= w  iff  every inversion of y is an inversion of w.
bool duflo_leq_words(const Word& y, const Word& w);

// --- Alphabet renumbering ----------------------------------------------------

// Entry map that frees the value j: a -> a for a < j, a -> a+1 for a >= j.
int shift_value_up(int a, int j);
// Inverse entry map (defined when j is not an entry): a -> a for a < j,
// a -> a-1 for a > j.
int shift_value_down(int a, int j);

Word renumber_up(const Word& w, int j);    // entrywise shift_value_up
Word renumber_down(const Word& w, int j);  // entrywise shift_value_down; j must not occur

// Order-isomorphic relabeling onto {1..n}.
Word standardize_word(const Word& w);

// --- Word surgery -------------------------------------------------------------

// Reversal [a_n, ..., a_1].
Word reversal(const Word& w);

// Remove the entry m (which must occur).
Word deletion(const Word& w, int m);

// Positional restriction to positions i..j (1-based, 1 <= i <= j <= n).
Word restriction(const Word& w, int i, int j);

// Subword of the entries lying in the value interval [lo, hi].
Word value_restriction(const Word& w, int lo, int hi);

// Concatenation [x, y]; the alphabets must be disjoint.
Word colligation(const Word& x, const Word& y);

// --- Simple-transposition ranges ----------------------------------------------

// Word in S_n of the product s_i s_{i+1} ... s_j (identity when i > j).
Word range_cycle_lt(int i, int j, int n);

// Word in S_n of the product s_i s_{i-1} ... s_j (identity when i < j).
Word range_cycle_gt(int i, int j, int n);

// --- Extreme-entry decompositions ----------------------------------------------

enum class Extreme { max_entry, min_entry };

// Peel the extreme entry off a standard word w of rank n >= 1.
//
// max_entry: with i the position of n, w = y * (s_{n-1} ... s_i) where
//   y = deletion(w, n) is standard of rank n-1 (embedded by appending n).
// min_entry: with i the position of 1, w = y * (s_1 ... s_{i-1}) where
//   y = deletion(w, 1) keeps its alphabet {2..n} (embedded by prepending 1).
//
// Returns (y, cycle) with cycle the word of the transposition range in S_n;
// the original word is recovered as compose(embedded y, cycle).
std::pair<Word, Word> decompose_extreme(const Word& w, Extreme which);

}  // namespace duflo

#endif  // DUFLO_WORDS_HPP
