#ifndef DUFLO_ORACLE_HPP
#define DUFLO_ORACLE_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "duflo/rs.hpp"
#include "duflo/tableaux.hpp"
#include "duflo/words.hpp"

// Brute-force reference implementations.  Everything here enumerates the
// symmetric group directly and relies only on the word operations, the plain
// tableau operations and rs_tableau — never on the recursive constructions
// they are meant to check.

namespace duflo {

// All covers (y, y * s_i) of the containment order on S_n: i runs over the
// ascent positions of y.  Pairs are sorted.
std::vector<std::pair<Word, Word>> weak_covers(int n);

// The cell of t by scanning every arrangement of its alphabet.
std::vector<Word> cell_bruteforce(const Tableau& t);

// Offspring set of t by scanning its cell and applying every ascent step;
// contains t itself.
std::set<Tableau> offsprings_bruteforce(const Tableau& t);

// One sweep of S_n producing the offspring set of every standard tableau.
std::map<Tableau, std::set<Tableau>> offsprings_bruteforce_all(int n);

struct OrderOracle {
  int n = 0;
  std::vector<Tableau> nodes;            // sorted (structural order)
  std::vector<std::vector<char>> reach;  // reach[i][j]: nodes[i] <= nodes[j]

  int index_of(const Tableau& t) const;
  bool leq(const Tableau& a, const Tableau& b) const;
};

// Reflexive-transitive closure of the one-ascent-step relation between
// insertion tableaux, over all of S_n.
OrderOracle induced_order_bruteforce(int n);

}  // namespace duflo

#endif  // DUFLO_ORACLE_HPP
