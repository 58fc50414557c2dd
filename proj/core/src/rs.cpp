#include "duflo/rs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace duflo {

Tableau rs_tableau(const Word& w) {
  require_word(w, "rs_tableau");
  Tableau t;
  for (int a : w) t = insert(t, a).tableau;
  return t;
}

std::vector<Tableau> rs_trace(const Word& w) {
  require_word(w, "rs_trace");
  std::vector<Tableau> trace;
  trace.reserve(w.size() + 1);
  Tableau t;
  trace.push_back(t);
  for (int a : w) {
    t = insert(t, a).tableau;
    trace.push_back(t);
  }
  return trace;
}

std::pair<Tableau, Tableau> rs_pair(const Word& w) {
  const std::vector<Tableau> trace = rs_trace(w);
  Chain chain;
  chain.reserve(w.size());
  for (std::size_t i = trace.size(); i-- > 1;) chain.push_back(shape(trace[i]));
  return {trace.back(), chain_psi_inverse(chain)};
}

Word rs_inverse(const Tableau& t, const Tableau& q) {
  require_tableau(t, "rs_inverse");
  require_standard_tableau(q, "rs_inverse");
  if (shape(t) != shape(q)) throw std::invalid_argument("rs_inverse: shape mismatch");
  Tableau cur(t);
  Tableau rec(q);
  const int n = tableau_size(t);
  Word out(static_cast<std::size_t>(n), 0);
  for (int i = n; i >= 1; --i) {
    Corner c{0, 0};
    for (std::size_t r = 0; r < rec.size() && c.row == 0; ++r) {
      for (std::size_t j = 0; j < rec[r].size(); ++j) {
        if (rec[r][j] == i) {
          c = Corner{static_cast<int>(r) + 1, static_cast<int>(j) + 1};
          break;
        }
      }
    }
    CornerDeletionResult step = delete_corner(cur, c);
    cur = std::move(step.tableau);
    out[i - 1] = step.expelled;
    rec[c.row - 1].pop_back();
    if (rec[c.row - 1].empty()) rec.erase(rec.begin() + (c.row - 1));
  }
  return out;
}

std::vector<Word> cell_by_filter(const Tableau& t) {
  require_tableau(t, "cell_by_filter");
  std::vector<int> values = tableau_alphabet(t);
  std::vector<Word> out;
  Word w(values);
  do {
    if (rs_tableau(w) == t) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using CellMemo = std::map<Tableau, std::vector<Word>>;

// Last-letter recursion over standard tableaux; the caller holds the lock.
const std::vector<Word>& cell_standard_locked(const Tableau& t, CellMemo& memo) {
  auto found = memo.find(t);
  if (found != memo.end()) return found->second;

  std::set<Word> words;
  const int n = tableau_size(t);
  if (n == 0) {
    words.insert(Word{});
  } else if (n == 1) {
    words.insert(Word{1});
  } else {
    for (Corner c : corners(t)) {
      CornerDeletionResult step = delete_corner(t, c);
      const int p = step.expelled;
      const std::vector<int> sub_alphabet = tableau_alphabet(step.tableau);
      const std::vector<Word>& sub_cell =
          cell_standard_locked(standardize_tableau(step.tableau), memo);
      for (const Word& u : sub_cell) {
        Word w = relabel_word(u, sub_alphabet);
        w.push_back(p);
        words.insert(std::move(w));
      }
    }
  }
  return memo.emplace(t, std::vector<Word>(words.begin(), words.end()))
      .first->second;
}

std::vector<Word> cell_standard(const Tableau& t) {
  static CellMemo memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return cell_standard_locked(t, memo);
}

}  // namespace

std::vector<Word> cell_recursive(const Tableau& t) {
  require_tableau(t, "cell_recursive");
  const std::vector<int> values = tableau_alphabet(t);
  std::vector<Word> out;
  for (const Word& u : cell_standard(standardize_tableau(t))) {
    out.push_back(relabel_word(u, values));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> cell(const Tableau& t) {
  require_tableau(t, "cell");
  return tableau_size(t) <= 7 ? cell_by_filter(t) : cell_recursive(t);
}

std::pair<Word, Word> canonical_words(const Tableau& t) {
  require_tableau(t, "canonical_words");
  Word by_rows;
  for (std::size_t i = t.size(); i-- > 0;) {
    by_rows.insert(by_rows.end(), t[i].begin(), t[i].end());
  }
  Word by_cols;
  const Tableau tt = transpose(t);
  for (const Row& col : tt) {
    for (std::size_t i = col.size(); i-- > 0;) by_cols.push_back(col[i]);
  }
  return {by_rows, by_cols};
}

std::vector<std::pair<int, Tableau>> decompose_cell_rows(const Tableau& t) {
  require_tableau(t, "decompose_cell_rows");
  std::vector<std::pair<int, Tableau>> out;
  for (Corner c : corners(t)) {
    CornerDeletionResult step = delete_corner(t, c);
    out.emplace_back(step.expelled, standardize_tableau(step.tableau));
  }
  return out;
}

std::vector<std::pair<int, Tableau>> decompose_cell_cols(const Tableau& t) {
  require_tableau(t, "decompose_cell_cols");
  std::vector<std::pair<int, Tableau>> out;
  for (Corner c : corners(t)) {
    CornerDeletionResult step = column_delete(t, c);
    out.emplace_back(step.expelled, standardize_tableau(step.tableau));
  }
  return out;
}

std::uint64_t cell_size(const Tableau& t) {
  require_tableau(t, "cell_size");
  return count_standard_tableaux(shape(t));
}

}  // namespace duflo
