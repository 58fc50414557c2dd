#include "duflo/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "duflo/io.hpp"

namespace duflo {

namespace {

bool strictly_dominates(const Diagram& above, const Diagram& below) {
  return above != below && dominance_geq(above, below);
}

}  // namespace

std::optional<Tableau> corner_shift(const Tableau& t, Corner c) {
  require_standard_tableau(t, "corner_shift");
  if (!is_corner(shape(t), c)) {
    throw std::invalid_argument("corner_shift: not a corner");
  }
  const int row1_max = t[0].back();
  CornerDeletionResult del = delete_corner(t, c);
  if (del.expelled != row1_max) return std::nullopt;
  const Row top = del.tableau.empty() ? Row{} : del.tableau[0];
  const Tableau lower = insert(row_tail(del.tableau, 2), del.expelled).tableau;
  const Tableau candidate = stack_rows(top, lower);
  if (!is_tableau(candidate)) return std::nullopt;
  if (!strictly_dominates(shape(candidate), shape(t))) return std::nullopt;
  return candidate;
}

std::optional<Tableau> dual_corner_shift(const Tableau& t, Corner c) {
  require_standard_tableau(t, "dual_corner_shift");
  if (!is_corner(shape(t), c)) {
    throw std::invalid_argument("dual_corner_shift: not a corner");
  }
  const int k = static_cast<int>(t.size());
  if (c.col == 1) return std::nullopt;  // the bottom corner of column 1
  const std::vector<int> col1 = column_of(t, 1);
  const Tableau rest = col_tail(t, 2);
  CornerDeletionResult del = column_delete(rest, Corner{c.row, c.col - 1});
  const int d = del.expelled;
  const int bottom = col1.back();
  const int second = k >= 2 ? col1[k - 2] : 0;
  if (d > bottom) {
    std::vector<int> grown(col1);
    grown.push_back(d);
    Tableau out = juxtapose_column(grown, del.tableau);
    if (!is_tableau(out)) {
      throw std::logic_error("dual_corner_shift: appended column not a tableau");
    }
    return out;
  }
  if (d > second) {
    const Tableau base = juxtapose_column(col1, del.tableau);
    Tableau candidate = column_insert(base, d).tableau;
    if (!strictly_dominates(shape(candidate), shape(t))) return std::nullopt;
    return candidate;
  }
  return std::nullopt;
}

namespace {

using OffspringMemo = std::map<Tableau, std::vector<Tableau>>;

// Row recursion: split the cell by its last letters, recurse on the corner
// deletions, re-insert, and add the nonempty corner shifts.
const std::vector<Tableau>& offsprings_row_locked(const Tableau& t, OffspringMemo& memo) {
  auto found = memo.find(t);
  if (found != memo.end()) return found->second;

  std::set<Tableau> out;
  if (tableau_size(t) <= 1) {
    out.insert(t);
  } else {
    for (Corner c : corners(t)) {
      CornerDeletionResult del = delete_corner(t, c);
      const std::vector<int> sub_alphabet = tableau_alphabet(del.tableau);
      const std::vector<Tableau>& sub =
          offsprings_row_locked(standardize_tableau(del.tableau), memo);
      for (const Tableau& s : sub) {
        out.insert(insert(relabel_tableau(s, sub_alphabet), del.expelled).tableau);
      }
      if (std::optional<Tableau> shifted = corner_shift(t, c)) {
        out.insert(std::move(*shifted));
      }
    }
  }
  return memo.emplace(t, std::vector<Tableau>(out.begin(), out.end()))
      .first->second;
}

// Column recursion: split the cell by its first letters, recurse on the
// column deletions, re-insert by columns, and add the nonempty dual shifts.
const std::vector<Tableau>& offsprings_col_locked(const Tableau& t, OffspringMemo& memo) {
  auto found = memo.find(t);
  if (found != memo.end()) return found->second;

  std::set<Tableau> out;
  if (tableau_size(t) <= 1) {
    out.insert(t);
  } else {
    for (Corner c : corners(t)) {
      CornerDeletionResult del = column_delete(t, c);
      const std::vector<int> sub_alphabet = tableau_alphabet(del.tableau);
      const std::vector<Tableau>& sub =
          offsprings_col_locked(standardize_tableau(del.tableau), memo);
      for (const Tableau& s : sub) {
        out.insert(
            column_insert(relabel_tableau(s, sub_alphabet), del.expelled).tableau);
      }
      if (std::optional<Tableau> shifted = dual_corner_shift(t, c)) {
        out.insert(std::move(*shifted));
      }
    }
  }
  return memo.emplace(t, std::vector<Tableau>(out.begin(), out.end()))
      .first->second;
}

}  // namespace

std::vector<Tableau> offsprings_recursive(const Tableau& t) {
  require_standard_tableau(t, "offsprings_recursive");
  static OffspringMemo memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return offsprings_row_locked(t, memo);
}

std::vector<Tableau> offsprings_dual(const Tableau& t) {
  require_standard_tableau(t, "offsprings_dual");
  static OffspringMemo memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return offsprings_col_locked(t, memo);
}

int TableauPoset::index_of(const Tableau& t) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == t) return static_cast<int>(i);
  }
  return -1;
}

bool TableauPoset::leq(const Tableau& a, const Tableau& b) const {
  const int i = index_of(a);
  const int j = index_of(b);
  if (i < 0 || j < 0) throw std::invalid_argument("TableauPoset::leq: unknown tableau");
  return reach[i][j] != 0;
}

TableauPoset induced_order(int n) {
  if (n < 0) throw std::invalid_argument("induced_order: negative size");
  static std::map<int, TableauPoset> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto found = memo.find(n);
  if (found != memo.end()) return found->second;

  TableauPoset poset;
  poset.n = n;
  poset.nodes = standard_tableaux(n);
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [](const Tableau& a, const Tableau& b) { return to_text(a) < to_text(b); });
  std::map<Tableau, int> index;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    index[poset.nodes[i]] = static_cast<int>(i);
  }
  const int count = static_cast<int>(poset.nodes.size());
  std::vector<std::vector<int>> step(count);
  for (int i = 0; i < count; ++i) {
    for (const Tableau& s : offsprings_recursive(poset.nodes[i])) {
      const int j = index.at(s);
      if (j != i) step[i].push_back(j);
    }
  }
  poset.reach.assign(count, std::vector<char>(count, 0));
  for (int start = 0; start < count; ++start) {
    std::vector<char>& seen = poset.reach[start];
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : step[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j || !poset.reach[i][j]) continue;
      bool has_middle = false;
      for (int u = 0; u < count && !has_middle; ++u) {
        if (u != i && u != j && poset.reach[i][u] && poset.reach[u][j]) has_middle = true;
      }
      if (!has_middle) poset.cover_edges.emplace_back(i, j);
    }
  }
  std::sort(poset.cover_edges.begin(), poset.cover_edges.end());
  return memo.emplace(n, std::move(poset)).first->second;
}

bool duflo_leq_tableaux(const Tableau& a, const Tableau& b) {
  require_standard_tableau(a, "duflo_leq_tableaux");
  require_standard_tableau(b, "duflo_leq_tableaux");
  if (tableau_size(a) != tableau_size(b)) {
    throw std::invalid_argument("duflo_leq_tableaux: size mismatch");
  }
  std::set<Tableau> seen{a};
  std::deque<Tableau> queue{a};
  while (!queue.empty()) {
    Tableau u = std::move(queue.front());
    queue.pop_front();
    if (u == b) return true;
    for (const Tableau& s : offsprings_recursive(u)) {
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return false;
}

std::vector<Tableau> duflo_descendants(const Tableau& t) {
  require_standard_tableau(t, "duflo_descendants");
  const TableauPoset poset = induced_order(tableau_size(t));
  const int i = poset.index_of(t);
  std::vector<Tableau> out;
  for (const auto& [from, to] : poset.cover_edges) {
    if (from == i) out.push_back(poset.nodes[to]);
  }
  return out;  // node order is text order already
}

Tableau shape_witness(const Tableau& t, const Diagram& target_shape) {
  require_standard_tableau(t, "shape_witness");
  require_partition(target_shape, "shape_witness");
  if (!strictly_dominates(target_shape, shape(t))) {
    throw std::invalid_argument("shape_witness: target shape must strictly dominate");
  }
  const TableauPoset poset = induced_order(tableau_size(t));
  const int i = poset.index_of(t);
  for (std::size_t j = 0; j < poset.nodes.size(); ++j) {
    if (poset.reach[i][j] && shape(poset.nodes[j]) == target_shape) {
      return poset.nodes[j];
    }
  }
  throw std::logic_error("shape_witness: no witness found");
}

Word project_word(const Word& w, int lo, int hi) {
  return value_restriction(w, lo, hi);
}

}  // namespace duflo
