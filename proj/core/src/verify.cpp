#include "duflo/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duflo/engine.hpp"
#include "duflo/io.hpp"
#include "duflo/oracle.hpp"
#include "duflo/rs.hpp"
#include "duflo/tableaux.hpp"
#include "duflo/words.hpp"

namespace duflo {

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (r.ran && !r.passed) return false;
  }
  return true;
}

namespace {

// Collects individual expectations and remembers the first failure.
class Probe {
 public:
  void expect(bool ok, const std::string& context) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = context;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    if (failed_ == 0) {
      out << total_ << " checks";
    } else {
      out << failed_ << " of " << total_ << " checks failed; first: " << first_;
    }
    return out.str();
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  std::string first_;
};

CheckResult make_result(std::string name, const Probe& probe, const std::string& scope = "") {
  CheckResult r;
  r.name = std::move(name);
  r.ran = true;
  r.passed = probe.ok();
  r.detail = scope.empty() ? probe.summary() : scope + ": " + probe.summary();
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.ran = false;
  r.passed = false;
  r.detail = std::move(why);
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

Word identity_word(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  Word w = identity_word(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Word cat(const Word& a, const Word& b) { return colligation(a, b); }
Word cat(const Word& a, const Word& b, const Word& c) {
  return colligation(colligation(a, b), c);
}

Tableau tab(const std::string& s) { return parse_tableau(s); }

std::set<Tableau> tabset(const std::vector<std::string>& texts) {
  std::set<Tableau> out;
  for (const std::string& s : texts) out.insert(tab(s));
  return out;
}

template <typename C>
std::set<Tableau> as_set(const C& items) {
  return std::set<Tableau>(items.begin(), items.end());
}

// The values 1..n with j removed: the alphabet left for the rest of a word
// once the letter j has been split off.
std::vector<int> alphabet_without(int n, int j) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (v != j) out.push_back(v);
  }
  return out;
}

std::string pair_text(const Tableau& a, const Tableau& b) {
  return to_text(a) + " / " + to_text(b);
}

// ---------------------------------------------------------------------------
// Word-level checks
// ---------------------------------------------------------------------------

// The containment order is the reflexive-transitive closure of the
// one-ascent-step relation.
void check_containment_generated(int n, Probe& p) {
  const std::vector<Word> words = all_words(n);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  std::vector<RootSet> inv;
  inv.reserve(words.size());
  for (const Word& w : words) inv.push_back(inversion_set(w));

  std::vector<std::vector<int>> step(words.size());
  for (const auto& [a, b] : weak_covers(n)) {
    const int i = index.at(a);
    const int j = index.at(b);
    step[i].push_back(j);
    p.expect(inv[j].size() == inv[i].size() + 1 &&
                 std::includes(inv[j].begin(), inv[j].end(), inv[i].begin(), inv[i].end()),
             "ascent step must add exactly one inversion at " + to_text(a));
  }

  const int count = static_cast<int>(words.size());
  for (int start = 0; start < count; ++start) {
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : step[u]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    for (int j = 0; j < count; ++j) {
      const bool contained = std::includes(inv[j].begin(), inv[j].end(),
                                           inv[start].begin(), inv[start].end());
      if (seen[static_cast<std::size_t>(j)] != (contained ? 1 : 0)) {
        p.expect(false, "closure disagrees with containment for " + to_text(words[start]) +
                            " vs " + to_text(words[j]));
        return;
      }
    }
  }
  p.expect(true, "closure equals containment");
}

// Inverses, reversals, complements, descent sets and the peeling of extreme
// letters.
void check_word_identities(int n, Probe& p) {
  const Word id = identity_word(n);
  const Word wo = longest_element(n);
  const std::size_t all_roots = static_cast<std::size_t>(n) * (n - 1) / 2;

  // The full descending range is the cycle sending 1..n-1 up one slot.
  Word full_cycle(static_cast<std::size_t>(n));
  full_cycle[0] = n;
  for (int v = 1; v < n; ++v) full_cycle[static_cast<std::size_t>(v)] = v;
  p.expect(range_cycle_gt(n - 1, 1, n) == full_cycle, "descending range word");
  p.expect(range_cycle_lt(2, 1, n) == id && range_cycle_gt(1, 2, n) == id,
           "empty transposition ranges are the identity");

  for (const Word& w : all_words(n)) {
    const std::string at = " at " + to_text(w);
    p.expect(compose(w, inverse_word(w)) == id, "inverse composes to identity" + at);
    p.expect(reversal(w) == compose(w, wo), "reversal is right multiplication by the longest element" + at);
    p.expect(complement_roots(w) == inversion_set(reversal(w)),
             "complement roots are the reversal's inversions" + at);
    p.expect(coxeter_length(w) + coxeter_length(reversal(w)) == all_roots,
             "lengths of a word and its reversal fill the root count" + at);
    p.expect(compose(inverse_word(w), reversal(w)) == wo,
             "inverse times reversal is the longest element" + at);

    std::vector<int> descents;
    const RootSet inv = inversion_set(w);
    for (int i = 1; i < n; ++i) {
      if (std::binary_search(inv.begin(), inv.end(), Root{i, i + 1})) descents.push_back(i);
    }
    p.expect(tau_word(w) == descents, "descents are the adjacent inversions" + at);

    {
      const auto [y, cycle] = decompose_extreme(w, Extreme::max_entry);
      Word embedded = y;
      embedded.push_back(n);
      p.expect(compose(embedded, cycle) == w, "peeled maximum recomposes" + at);
      p.expect(y == deletion(w, n), "peeled maximum drops the top letter" + at);
      p.expect(coxeter_length(w) ==
                   static_cast<std::size_t>(n - position(w, n)) + coxeter_length(y),
               "length splits across the peeled maximum" + at);
    }
    {
      const auto [y, cycle] = decompose_extreme(w, Extreme::min_entry);
      Word embedded{1};
      embedded.insert(embedded.end(), y.begin(), y.end());
      p.expect(compose(embedded, cycle) == w, "peeled minimum recomposes" + at);
      p.expect(y == deletion(w, 1), "peeled minimum drops the bottom letter" + at);
      p.expect(coxeter_length(w) ==
                   static_cast<std::size_t>(position(w, 1) - 1) + coxeter_length(y),
               "length splits across the peeled minimum" + at);
    }
  }

  if (n >= 2) {
    // The longest element factors through the rank below.
    Word dot_wo = longest_element(n - 1);
    dot_wo.push_back(n);
    p.expect(compose(dot_wo, range_cycle_gt(n - 1, 1, n)) == wo,
             "longest element factors through the embedded one");
    for (const Word& y : all_words(n - 1)) {
      const Word reversed_y = compose(y, longest_element(n - 1));
      Word padded{1};
      for (int v : reversed_y) padded.push_back(v + 1);
      Word y_inverse_embedded = inverse_word(y);
      y_inverse_embedded.push_back(n);
      p.expect(compose(y_inverse_embedded, compose(range_cycle_gt(n - 1, 1, n), padded)) == wo,
               "longest element recovers from the reversed sub-word at " + to_text(y));
    }
  }
}

// ---------------------------------------------------------------------------
// Insertion correspondence checks
// ---------------------------------------------------------------------------

void check_rs_roundtrip(int n, Probe& p) {
  for (const Word& w : all_words(n)) {
    const std::string at = " at " + to_text(w);
    const auto [t, q] = rs_pair(w);
    p.expect(rs_tableau(w) == t, "pair agrees with plain insertion" + at);
    p.expect(rs_inverse(t, q) == w, "pair inverts back to the word" + at);

    // Rebuild the recording tableau by tracking where each new box lands.
    Tableau running;
    Tableau tracked;
    bool boxes_ok = true;
    for (int i = 0; i < n; ++i) {
      const InsertResult step = insert(running, w[static_cast<std::size_t>(i)]);
      running = step.tableau;
      const int r = step.corner.row;
      if (r == static_cast<int>(tracked.size()) + 1) {
        tracked.push_back({i + 1});
      } else if (r >= 1 && r <= static_cast<int>(tracked.size())) {
        tracked[static_cast<std::size_t>(r - 1)].push_back(i + 1);
      } else {
        boxes_ok = false;
        break;
      }
      if (static_cast<int>(tracked[static_cast<std::size_t>(r - 1)].size()) != step.corner.col) {
        boxes_ok = false;
        break;
      }
    }
    p.expect(boxes_ok && tracked == q, "recording tableau tracks the new boxes" + at);

    const auto [ti, qi] = rs_pair(inverse_word(w));
    p.expect(ti == q && qi == t, "inverting the word swaps the pair" + at);
    p.expect(rs_tableau(reversal(w)) == transpose(t), "reversal transposes the insertion tableau" + at);
    p.expect(tau_word(w) == tau_tableau(t), "descents carry over to the tableau" + at);

    // The recording tableau's shape chain is the chain of prefix shapes.
    const std::vector<Tableau> trace = rs_trace(w);
    Chain prefix_shapes;
    for (int i = n; i >= 1; --i) prefix_shapes.push_back(shape(trace[static_cast<std::size_t>(i)]));
    p.expect(chain_psi(q) == prefix_shapes, "recording tableau's chain is the prefix shapes" + at);
  }
}

void check_rs_deletions(int n, Probe& p) {
  for (const Word& w : all_words(n)) {
    const std::string at = " at " + to_text(w);
    const Tableau t = rs_tableau(w);
    p.expect(rs_tableau(deletion(w, n)) == jdt_remove(t, n),
             "dropping the largest letter slides it out" + at);
    p.expect(rs_tableau(deletion(w, 1)) == jdt_remove(t, 1),
             "dropping the smallest letter slides it out" + at);
  }
}

// Multiplying by an ascending transposition range pads a word with a fresh
// letter; insertion sees the padding as a relabeled insert.
void check_rs_padding(int n, Probe& p) {
  for (const Word& y : all_words(n)) {
    const Tableau ty = rs_tableau(y);
    Word embedded = y;
    embedded.push_back(n + 1);
    for (int i = 1; i <= n + 1; ++i) {
      const Word product = compose(range_cycle_lt(i, n, n + 1), embedded);
      const Word expected_word = cat(renumber_up(y, i), Word{i});
      const std::string at = " at " + to_text(y) + " with letter " + std::to_string(i);
      p.expect(product == expected_word, "range product appends the fresh letter" + at);
      p.expect(rs_tableau(product) == insert(renumber_up_tableau(ty, i), i).tableau,
               "insertion of the padded word inserts the fresh letter" + at);
    }
  }
}

void check_corner_roundtrips(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    for (const Corner c : corners(t)) {
      const CornerDeletionResult del = delete_corner(t, c);
      const InsertResult back = insert(del.tableau, del.expelled);
      p.expect(back.tableau == t && back.corner == c, "corner deletion then insertion restores" + at);

      bool segment_ok = static_cast<int>(del.segment.size()) == c.row;
      for (std::size_t i = 0; segment_ok && i < del.segment.size(); ++i) {
        if (del.segment[i].row != static_cast<int>(i) + 1) segment_ok = false;
        if (i + 1 < del.segment.size() && del.segment[i].col < del.segment[i + 1].col) {
          segment_ok = false;  // displaced boxes never move right going up
        }
      }
      p.expect(segment_ok && !del.segment.empty() && del.segment.back() == c,
               "deletion segment has one box per row ending at the corner" + at);

      const CornerDeletionResult cdel = column_delete(t, c);
      const InsertResult cback = column_insert(cdel.tableau, cdel.expelled);
      p.expect(cback.tableau == t && cback.corner == c,
               "column deletion then column insertion restores" + at);
    }
    for (int j = 1; j <= n + 1; ++j) {
      const Tableau u = renumber_up_tableau(t, j);
      const std::string with = at + " with letter " + std::to_string(j);
      const InsertResult ins = insert(u, j);
      const CornerDeletionResult del = delete_corner(ins.tableau, ins.corner);
      p.expect(del.tableau == u && del.expelled == j, "insertion then corner deletion restores" + with);

      const InsertResult cins = column_insert(u, j);
      const CornerDeletionResult cdel = column_delete(cins.tableau, cins.corner);
      p.expect(cdel.tableau == u && cdel.expelled == j,
               "column insertion then column deletion restores" + with);
      p.expect(transpose(cins.tableau) == insert(transpose(u), j).tableau,
               "column insertion is insertion on the transpose" + with);
    }
  }
}

void check_projection_insertion(int n, Probe& p) {
  for (const Word& w : all_words(n)) {
    const Tableau t = rs_tableau(w);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        p.expect(rs_tableau(project_word(w, i, j)) == project(t, i, j),
                 "interval projection commutes with insertion at " + to_text(w) + " on [" +
                     std::to_string(i) + "," + std::to_string(j) + "]");
      }
    }
  }
}

void check_shape_chains(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const Chain chain = chain_psi(t);
    p.expect(static_cast<int>(chain.size()) == n && chain_psi_inverse(chain) == t,
             "shape chain round trips at " + to_text(t));
  }
}

// ---------------------------------------------------------------------------
// Cell checks
// ---------------------------------------------------------------------------

void check_hook_counts(int n, Probe& p) {
  std::map<Tableau, std::uint64_t> fiber_sizes;
  Word w = identity_word(n);
  do {
    ++fiber_sizes[rs_tableau(w)];
  } while (std::next_permutation(w.begin(), w.end()));

  const std::vector<Tableau> all = standard_tableaux(n);
  p.expect(fiber_sizes.size() == all.size(), "every standard tableau is an insertion image");

  std::uint64_t total = 0;
  for (const auto& [t, count] : fiber_sizes) {
    total += count;
    p.expect(cell_size(t) == count, "hook count matches the fiber at " + to_text(t));
  }
  p.expect(total == factorial(n), "fibers partition the symmetric group");

  std::uint64_t square_sum = 0;
  for (const Diagram& d : partitions_of(n)) {
    const std::uint64_t count = count_standard_tableaux(d);
    square_sum += count * count;
  }
  p.expect(square_sum == factorial(n), "squared shape counts sum to the group order");
}

void check_cell_methods(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    p.expect(cell_recursive(t) == cell_by_filter(t), "recursive cell matches the filter" + at);
    const auto [by_rows, by_cols] = canonical_words(t);
    p.expect(rs_tableau(by_rows) == t, "row reading word inserts back" + at);
    p.expect(rs_tableau(by_cols) == t, "column reading word inserts back" + at);

    // Reading words built directly from the rows / columns.
    Word rows_direct;
    for (auto row = t.rbegin(); row != t.rend(); ++row) {
      rows_direct.insert(rows_direct.end(), row->begin(), row->end());
    }
    Word cols_direct;
    const int width = t.empty() ? 0 : static_cast<int>(t[0].size());
    for (int j = 1; j <= width; ++j) {
      std::vector<int> column = column_of(t, j);
      cols_direct.insert(cols_direct.end(), column.rbegin(), column.rend());
    }
    p.expect(by_rows == rows_direct, "row reading word lists rows bottom to top" + at);
    p.expect(by_cols == cols_direct, "column reading word lists columns bottom to top" + at);
  }
}

void check_cell_assembly(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    const std::vector<Word> whole = cell_by_filter(t);

    std::vector<Word> from_rows;
    for (const auto& [last, sub] : decompose_cell_rows(t)) {
      const std::vector<int> alphabet = alphabet_without(n, last);
      for (const Word& u : cell(sub)) {
        from_rows.push_back(cat(relabel_word(u, alphabet), Word{last}));
      }
    }
    const std::size_t row_parts_total = from_rows.size();
    std::sort(from_rows.begin(), from_rows.end());
    p.expect(from_rows == whole && row_parts_total == whole.size(),
             "last-letter split partitions the cell" + at);

    std::vector<Word> from_cols;
    for (const auto& [first, sub] : decompose_cell_cols(t)) {
      const std::vector<int> alphabet = alphabet_without(n, first);
      for (const Word& u : cell(sub)) {
        from_cols.push_back(cat(Word{first}, relabel_word(u, alphabet)));
      }
    }
    const std::size_t col_parts_total = from_cols.size();
    std::sort(from_cols.begin(), from_cols.end());
    p.expect(from_cols == whole && col_parts_total == whole.size(),
             "first-letter split partitions the cell" + at);
  }
}

// ---------------------------------------------------------------------------
// Offspring and order checks
// ---------------------------------------------------------------------------

void check_threeway_offsprings(int n, Probe& p) {
  const std::map<Tableau, std::set<Tableau>> reference = offsprings_bruteforce_all(n);
  p.expect(reference.size() == standard_tableaux(n).size(),
           "brute force reaches every standard tableau at rank " + std::to_string(n));
  for (const auto& [t, want] : reference) {
    const std::string at = " at " + to_text(t);
    p.expect(as_set(offsprings_recursive(t)) == want, "row recursion matches brute force" + at);
    p.expect(as_set(offsprings_dual(t)) == want, "column recursion matches brute force" + at);
  }
}

void check_offspring_shapes(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const Diagram base = shape(t);
    for (const Tableau& s : offsprings_recursive(t)) {
      if (s == t) continue;
      const Diagram grown = shape(s);
      p.expect(grown != base && dominance_geq(grown, base),
               "offspring shape strictly grows at " + pair_text(t, s));
    }
  }
}

void check_order_differential(int n, Probe& p) {
  const OrderOracle reference = induced_order_bruteforce(n);
  const TableauPoset poset = induced_order(n);

  std::vector<Tableau> lhs = reference.nodes;
  std::vector<Tableau> rhs = poset.nodes;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  p.expect(lhs == rhs, "node sets agree at rank " + std::to_string(n));
  if (lhs != rhs) return;

  for (const Tableau& a : reference.nodes) {
    for (const Tableau& b : reference.nodes) {
      if (poset.leq(a, b) != reference.leq(a, b)) {
        p.expect(false, "order disagrees at " + pair_text(a, b));
        return;
      }
    }
  }
  p.expect(true, "full relation agrees at rank " + std::to_string(n));
}

void check_order_duality(int n, Probe& p) {
  const TableauPoset poset = induced_order(n);
  const std::size_t count = poset.nodes.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const bool forward = poset.reach[i][j] != 0;
      const bool dual = poset.leq(transpose(poset.nodes[j]), transpose(poset.nodes[i]));
      if (forward != dual) {
        p.expect(false,
                 "transpose duality fails at " + pair_text(poset.nodes[i], poset.nodes[j]));
        return;
      }
    }
  }
  p.expect(true, "transposition reverses the order at rank " + std::to_string(n));
}

void check_diagram_descendants(int n, Probe& p) {
  const std::vector<Diagram> parts = partitions_of(n);
  for (const Diagram& mu : parts) {
    const std::vector<Diagram> steps = diagram_descendants(mu);
    const std::string at = " at " + diagram_text(mu);
    for (const Diagram& lam : steps) {
      p.expect(is_partition(lam) && lam != mu && dominance_geq(lam, mu),
               "descendant strictly dominates" + at);
    }
    // Descendants are exactly the covers of the dominance step.
    for (const Diagram& lam : parts) {
      if (lam == mu || !dominance_geq(lam, mu)) continue;
      bool has_middle = false;
      for (const Diagram& nu : parts) {
        if (nu == mu || nu == lam) continue;
        if (dominance_geq(lam, nu) && dominance_geq(nu, mu)) {
          has_middle = true;
          break;
        }
      }
      const bool listed = std::find(steps.begin(), steps.end(), lam) != steps.end();
      p.expect(listed == !has_middle,
               "descendants are the covers" + at + " vs " + diagram_text(lam));
    }
  }
}

// Classify how an offspring's first row can differ from its parent's.
bool first_row_form_ok(const Row& parent, const Row& child) {
  if (child.size() + 1 == parent.size()) {
    // One entry dropped, nothing added.
    return std::includes(parent.begin(), parent.end(), child.begin(), child.end());
  }
  if (child.size() != parent.size()) return false;
  std::vector<int> removed;
  std::set_difference(parent.begin(), parent.end(), child.begin(), child.end(),
                      std::back_inserter(removed));
  std::vector<int> added;
  std::set_difference(child.begin(), child.end(), parent.begin(), parent.end(),
                      std::back_inserter(added));
  if (removed.size() != 1 || added.size() != 1) return false;
  // The replacement is always by a larger value: either it jumps past the
  // next entry (a drop plus an append) or it lands right on it (a push-up).
  return added[0] > removed[0];
}

void check_first_rows(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    for (const Tableau& s : offsprings_recursive(t)) {
      if (s == t || s[0] == t[0]) continue;
      p.expect(first_row_form_ok(t[0], s[0]),
               "offspring first row has a recognized form at " + pair_text(t, s));
    }
  }
  const TableauPoset poset = induced_order(n);
  const std::size_t count = poset.nodes.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !poset.reach[i][j]) continue;
      const Row& low = poset.nodes[i][0];
      const Row& high = poset.nodes[j][0];
      bool monotone = high.size() <= low.size();
      for (std::size_t k = 0; monotone && k < high.size(); ++k) {
        if (low[k] > high[k]) monotone = false;
      }
      if (!monotone) {
        p.expect(false, "first row must grow entrywise at " +
                            pair_text(poset.nodes[i], poset.nodes[j]));
        return;
      }
    }
  }
  p.expect(true, "first rows grow along the order at rank " + std::to_string(n));
}

void check_preserve_projection(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::vector<Tableau> family = offsprings_recursive(t);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const Tableau tp = standardize_tableau(project(t, i, j));
        const std::set<Tableau> target = as_set(offsprings_recursive(tp));
        for (const Tableau& s : family) {
          const Tableau sp = standardize_tableau(project(s, i, j));
          if (!target.count(sp)) {
            p.expect(false, "projection must preserve offspring at " + pair_text(t, s) +
                                " on [" + std::to_string(i) + "," + std::to_string(j) + "]");
            return;
          }
        }
      }
    }
  }
  p.expect(true, "projections preserve offspring at rank " + std::to_string(n));
}

void check_preserve_padding(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::vector<Tableau> family = offsprings_recursive(t);
    for (int i = 1; i <= n + 1; ++i) {
      const Tableau row_padded = insert(renumber_up_tableau(t, i), i).tableau;
      const Tableau col_padded = column_insert(renumber_up_tableau(t, i), i).tableau;
      const std::set<Tableau> row_target = as_set(offsprings_recursive(row_padded));
      const std::set<Tableau> col_target = as_set(offsprings_recursive(col_padded));
      for (const Tableau& s : family) {
        const Tableau srow = insert(renumber_up_tableau(s, i), i).tableau;
        const Tableau scol = column_insert(renumber_up_tableau(s, i), i).tableau;
        if (!row_target.count(srow) || !col_target.count(scol)) {
          p.expect(false, "padding must preserve offspring at " + pair_text(t, s) +
                              " with letter " + std::to_string(i));
          return;
        }
      }
    }
  }
  p.expect(true, "padding preserves offspring at rank " + std::to_string(n));
}

void check_shape_witnesses(int n, Probe& p) {
  const std::vector<Diagram> parts = partitions_of(n);
  const TableauPoset poset = induced_order(n);
  for (const Tableau& t : standard_tableaux(n)) {
    const Diagram base = shape(t);
    for (const Diagram& target : parts) {
      if (target == base || !dominance_geq(target, base)) continue;
      const std::string at = " at " + to_text(t) + " toward " + diagram_text(target);
      try {
        const Tableau s = shape_witness(t, target);
        p.expect(shape(s) == target && poset.leq(t, s) && s != t,
                 "witness lies strictly above with the requested shape" + at);
      } catch (const std::exception&) {
        p.expect(false, "witness must exist" + at);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Structural checks on deletions, segments, and concatenations
// ---------------------------------------------------------------------------

void check_segments(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    const std::vector<Corner> cs = corners(t);
    std::vector<CornerDeletionResult> dels;
    dels.reserve(cs.size());
    for (const Corner c : cs) dels.push_back(delete_corner(t, c));

    p.expect(dels.front().expelled == t[0].back(),
             "the first corner expels the largest first-row entry" + at);

    for (std::size_t a = 0; a + 1 < dels.size(); ++a) {
      p.expect(dels[a].expelled >= dels[a + 1].expelled,
               "expelled entries weakly decrease along the corners" + at);
    }
    for (std::size_t a = 0; a < dels.size(); ++a) {
      for (std::size_t b = a + 1; b < dels.size(); ++b) {
        const int shared_rows = cs[a].row;  // the earlier corner sits higher
        bool ok = true;
        if (dels[a].expelled == dels[b].expelled) {
          // Both deletions displace the same first-row box, and once the two
          // paths meet they coincide all the way up; below the meeting row the
          // later corner's path stays strictly to the left.
          ok = dels[a].segment[0] == dels[b].segment[0];
          bool together = true;
          for (int r = 1; r < shared_rows && ok; ++r) {
            const int ca = dels[a].segment[static_cast<std::size_t>(r)].col;
            const int cb = dels[b].segment[static_cast<std::size_t>(r)].col;
            if (ca == cb) {
              if (!together) ok = false;
            } else {
              together = false;
              if (ca < cb) ok = false;
            }
          }
          p.expect(ok, "equal expulsions coalesce from their meeting row upward" + at);
        } else {
          for (int r = 0; r < shared_rows && ok; ++r) {
            if (dels[a].segment[static_cast<std::size_t>(r)].col <=
                dels[b].segment[static_cast<std::size_t>(r)].col) {
              ok = false;
            }
          }
          p.expect(ok, "distinct expulsions keep strictly separated segments" + at);
        }
        // Equal expulsions at the ends force equality in between.
        if (dels[a].expelled == dels[b].expelled) {
          for (std::size_t m = a + 1; m < b; ++m) {
            p.expect(dels[m].expelled == dels[a].expelled,
                     "expulsions are constant between equal ones" + at);
          }
        }
      }
    }

    // Deleting a corner shifts every later expulsion down and every earlier
    // one up, relative to the deleted corner's own expulsion.
    for (std::size_t a = 0; a < cs.size(); ++a) {
      const Tableau reduced = dels[a].tableau;
      for (const Corner c2 : corners(reduced)) {
        const int expelled_after = delete_corner(reduced, c2).expelled;
        if (c2.row < cs[a].row) {
          p.expect(expelled_after > dels[a].expelled,
                   "higher corners of the reduced tableau expel more" + at);
        } else {
          p.expect(expelled_after < dels[a].expelled,
                   "lower corners of the reduced tableau expel less" + at);
        }
      }
    }
  }

  // Push-up expulsions grow with the pushed letter.
  if (n >= 1) {
    for (const Tableau& t0 : standard_tableaux(n)) {
      for (int a = 1; a <= n + 1; ++a) {
        for (int b = a + 1; b <= n + 2; ++b) {
          const Tableau u = renumber_up_tableau(renumber_up_tableau(t0, a), b);
          const int bottom_first = u.back()[0];
          if (a <= bottom_first || b <= bottom_first) continue;
          p.expect(push_up(u, a).expelled <= push_up(u, b).expelled,
                   "push-up expulsion is monotone in the letter at " + to_text(u));
        }
      }
    }
  }
}

void check_commuting_deletions(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::vector<Corner> cs = corners(t);
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = 0; b < cs.size(); ++b) {
        if (a == b) continue;
        if (delete_corner(t, cs[a]).expelled == delete_corner(t, cs[b]).expelled) continue;
        const Tableau one = delete_corner(delete_corner(t, cs[a]).tableau, cs[b]).tableau;
        const Tableau two = delete_corner(delete_corner(t, cs[b]).tableau, cs[a]).tableau;
        p.expect(one == two, "distinct expulsions commute at " + to_text(t));
      }
    }
  }
}

void check_cell_concatenations(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    const int rows = static_cast<int>(t.size());
    const int cols = t.empty() ? 0 : static_cast<int>(t[0].size());

    const Word row1(t[0].begin(), t[0].end());
    std::vector<int> last_column = column_of(t, cols);
    const Word last_column_up(last_column.rbegin(), last_column.rend());

    for (const Word& w : cell(row_tail(t, 2))) {
      p.expect(rs_tableau(cat(w, row1)) == t, "tail cell followed by the first row inserts back" + at);
    }
    for (const Word& y : cell(col_slice(t, 1, cols - 1))) {
      p.expect(rs_tableau(cat(y, last_column_up)) == t,
               "left cell followed by the last column inserts back" + at);
    }

    for (int i = 2; i <= rows; ++i) {
      const Word top_word = canonical_words(row_slice(t, 1, i - 1)).first;
      for (const Word& w : cell(row_tail(t, i))) {
        p.expect(rs_tableau(cat(w, top_word)) == t,
                 "tail cell followed by the top reading word inserts back" + at);
      }
      for (const Word& w : cell(row_tail(t, i))) {
        for (const Word& z : cell(row_slice(t, 1, i - 1))) {
          p.expect(rs_tableau(cat(w, z)) == t, "row-split cell product inserts back" + at);
        }
      }
    }
    for (int i = 1; i <= cols - 1; ++i) {
      const Word right_word = canonical_words(col_tail(t, i + 1)).second;
      for (const Word& x : cell(col_slice(t, 1, i))) {
        p.expect(rs_tableau(cat(x, right_word)) == t,
                 "left cell followed by the right reading word inserts back" + at);
      }
      for (const Word& x : cell(col_slice(t, 1, i))) {
        for (const Word& y : cell(col_tail(t, i + 1))) {
          p.expect(rs_tableau(cat(x, y)) == t, "column-split cell product inserts back" + at);
        }
      }
    }
    for (int i = 2; i <= cols; ++i) {
      const Word left_word = canonical_words(col_slice(t, 1, i - 1)).second;
      for (const Word& y : cell(col_tail(t, i))) {
        p.expect(rs_tableau(cat(left_word, y)) == t,
                 "left reading word followed by the right cell inserts back" + at);
      }
    }
    for (int i = 1; i <= rows - 1; ++i) {
      const Word bottom_word = canonical_words(row_tail(t, i + 1)).first;
      for (const Word& z : cell(row_slice(t, 1, i))) {
        p.expect(rs_tableau(cat(bottom_word, z)) == t,
                 "bottom reading word followed by the top cell inserts back" + at);
      }
    }
  }
}

void check_tail_recovery(int n, Probe& p) {
  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    const std::vector<int> first_column = column_of(t, 1);
    const Word column_word(first_column.rbegin(), first_column.rend());
    const Word row1(t[0].begin(), t[0].end());

    std::vector<int> rest_of_column = identity_word(n);
    for (int v : first_column) {
      rest_of_column.erase(std::find(rest_of_column.begin(), rest_of_column.end(), v));
    }
    std::vector<int> rest_of_row = identity_word(n);
    for (int v : t[0]) {
      rest_of_row.erase(std::find(rest_of_row.begin(), rest_of_row.end(), v));
    }

    if (!rest_of_column.empty()) {
      Word x = rest_of_column;
      std::sort(x.begin(), x.end());
      do {
        if (rs_tableau(cat(column_word, x)) == t) {
          p.expect(rs_tableau(x) == col_tail(t, 2),
                   "words completing the first column insert to the column tail" + at);
        }
      } while (std::next_permutation(x.begin(), x.end()));
    }
    if (!rest_of_row.empty()) {
      Word y = rest_of_row;
      std::sort(y.begin(), y.end());
      do {
        if (rs_tableau(cat(y, row1)) == t) {
          p.expect(rs_tableau(y) == row_tail(t, 2),
                   "words preceding the first row insert to the row tail" + at);
        }
      } while (std::next_permutation(y.begin(), y.end()));
    }
  }
}

void check_insertion_splits(int n, Probe& p) {
  // A fresh letter h inserted into a tableau with n-1 boxes (embedded to skip
  // h) factors through the column slices at every split point at or beyond
  // the bumped column.
  for (const Tableau& t0 : standard_tableaux(n - 1)) {
    for (int h = 1; h <= n; ++h) {
      const Tableau u = renumber_up_tableau(t0, h);
      const std::string at = " at " + to_text(u) + " with letter " + std::to_string(h);
      const Tableau inserted = insert(u, h).tableau;
      const Row first_row = u.empty() ? Row{} : u[0];
      const int width = static_cast<int>(first_row.size());
      int bump = width + 1;  // the 1-based column whose entry h replaces
      for (int i = 0; i < width; ++i) {
        if (first_row[static_cast<std::size_t>(i)] > h) {
          bump = i + 1;
          break;
        }
      }
      if (bump <= width) {
        const Word bumped{first_row[static_cast<std::size_t>(bump - 1)]};
        const RowInsertResult replaced = row_insert(first_row, h);
        const Word new_row(replaced.row.begin(), replaced.row.end());
        for (const Word& w : cell(row_tail(u, 2))) {
          p.expect(rs_tableau(cat(w, bumped, new_row)) == inserted,
                   "insertion factors through the bumped first row" + at);
        }
      }
      for (int j = bump; j <= width; ++j) {
        for (const Word& y : cell(col_slice(u, 1, j))) {
          for (const Word& z : cell(col_tail(u, j + 1))) {
            p.expect(rs_tableau(cat(y, Word{h}, z)) == inserted,
                     "insertion factors through the column split" + at + " after column " +
                         std::to_string(j));
          }
        }
      }
    }
  }
}

void check_dual_insertion(int n, Probe& p) {
  if (n < 2) return;  // needs two fresh letters on top of a smaller tableau
  // Fresh letters i < j both missing from a tableau with n-2 boxes.
  for (const Tableau& t0 : standard_tableaux(n - 2)) {
    for (int a = 1; a <= n - 1; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        const Tableau u = renumber_up_tableau(renumber_up_tableau(t0, a), b);
        const std::string at = " at " + to_text(u) + " with letters " + std::to_string(a) +
                               "," + std::to_string(b);
        const std::vector<Word> fiber = cell(u);

        const Tableau col_a = column_insert(u, a).tableau;
        const Tableau col_b = column_insert(u, b).tableau;
        for (const Word& y : fiber) {
          p.expect(rs_tableau(cat(Word{a}, y)) == col_a,
                   "column insertion prefixes the letter" + at);
          p.expect(rs_tableau(cat(Word{b}, y)) == col_b,
                   "column insertion prefixes the larger letter" + at);
        }

        const Tableau both_one = insert(col_a, b).tableau;
        const Tableau both_two = column_insert(insert(u, b).tableau, a).tableau;
        p.expect(both_one == both_two, "row and column insertions commute" + at);
        for (const Word& y : fiber) {
          p.expect(rs_tableau(cat(Word{a}, y, Word{b})) == both_one,
                   "wrapping a cell word inserts both letters" + at);
        }
      }
    }
  }

  for (const Tableau& t : standard_tableaux(n)) {
    const std::string at = " at " + to_text(t);
    const std::vector<Corner> cs = corners(t);
    for (std::size_t ia = 0; ia < cs.size(); ++ia) {
      for (std::size_t ib = 0; ib < cs.size(); ++ib) {
        if (ia == ib) continue;
        const Corner c = cs[ia];
        const Corner c2 = cs[ib];
        const CornerDeletionResult one = delete_corner(column_delete(t, c).tableau, c2);
        const CornerDeletionResult two = column_delete(delete_corner(t, c2).tableau, c);
        p.expect(one.tableau == two.tableau, "distinct corner deletions of both kinds commute" + at);
        p.expect(one.expelled == delete_corner(t, c2).expelled,
                 "row expulsion survives a column deletion elsewhere" + at);
        p.expect(two.expelled == column_delete(t, c).expelled,
                 "column expulsion survives a row deletion elsewhere" + at);
      }
    }
    // A corner with a free box to its left: both deletions meet there.
    const Diagram d = shape(t);
    for (const Corner c : cs) {
      const int below = c.row < static_cast<int>(d.size())
                            ? d[static_cast<std::size_t>(c.row)]
                            : 0;
      if (d[static_cast<std::size_t>(c.row - 1)] - below <= 1) continue;
      const Corner left{c.row, c.col - 1};
      const CornerDeletionResult one = delete_corner(column_delete(t, c).tableau, left);
      const CornerDeletionResult two = column_delete(delete_corner(t, c).tableau, left);
      p.expect(one.tableau == two.tableau, "shifted deletions meet at the left box" + at);
      p.expect(one.expelled == delete_corner(t, c).expelled,
               "row expulsion carries over to the shifted corner" + at);
      p.expect(two.expelled == column_delete(t, c).expelled,
               "column expulsion carries over to the shifted corner" + at);
    }
  }
}

// ---------------------------------------------------------------------------
// Frozen worked examples
// ---------------------------------------------------------------------------

CheckResult criterion_worked_examples() {
  Probe p;

  // Insertion trace and the recording tableau.
  {
    const Word w = parse_word("[2,5,1,4,3]");
    const std::vector<Tableau> trace = rs_trace(w);
    const std::vector<std::string> expected = {"2", "2 5", "1 5/2", "1 4/2 5", "1 3/2 4/5"};
    bool ok = trace.size() == 6 && trace[0].empty();
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
      if (trace[i + 1] != tab(expected[i])) ok = false;
    }
    p.expect(ok, "insertion trace of [2,5,1,4,3]");
    const auto [t, q] = rs_pair(w);
    p.expect(t == tab("1 3/2 4/5") && q == tab("1 2/3 4/5"), "insertion pair of [2,5,1,4,3]");
    p.expect(tau_word(w) == (std::vector<int>{1, 3, 4}), "descents of [2,5,1,4,3]");
  }

  // Corner deletion with its displaced segment.
  {
    const CornerDeletionResult del = delete_corner(tab("1 3/2 4/5"), Corner{3, 1});
    p.expect(del.tableau == tab("1 4/2 5") && del.expelled == 3,
             "corner deletion on 1 3/2 4/5");
    const std::vector<Corner> segment{{1, 2}, {2, 2}, {3, 1}};
    p.expect(del.segment == segment, "deletion segment on 1 3/2 4/5");
  }

  // Sliding out single entries.
  {
    const Tableau t = tab("1 2 5/3 4/6");
    const std::vector<std::pair<int, std::string>> removals = {
        {6, "1 2 5/3 4"}, {5, "1 2/3 4/6"},   {4, "1 2 5/3/6"},
        {3, "1 2 5/4/6"}, {2, "1 4 5/3/6"},   {1, "2 4 5/3/6"}};
    for (const auto& [entry, want] : removals) {
      p.expect(jdt_remove(t, entry) == tab(want),
               "slide removal of " + std::to_string(entry) + " from 1 2 5/3 4/6");
    }
    const Chain expected_chain = {
        {3, 2, 1}, {3, 2}, {2, 2}, {2, 1}, {2}, {1}};
    p.expect(chain_psi(t) == expected_chain, "shape chain of 1 2 5/3 4/6");

    const auto split = decompose_cell_rows(t);
    const bool split_ok = split.size() == 3 &&
                          split[0] == std::pair<int, Tableau>{5, tab("1 2/3 4/5")} &&
                          split[1] == std::pair<int, Tableau>{2, tab("1 3 4/2/5")} &&
                          split[2] == std::pair<int, Tableau>{2, tab("1 3 4/2 5")};
    p.expect(split_ok, "last-letter split of 1 2 5/3 4/6");

    // Segments of the second and third corner coalesce; deleting in either
    // order around the first corner meets in the same tableau.
    const CornerDeletionResult d2 = delete_corner(t, Corner{2, 2});
    const CornerDeletionResult d3 = delete_corner(t, Corner{3, 1});
    p.expect(d2.expelled == 2 && d3.expelled == 2 &&
                 std::equal(d2.segment.begin(), d2.segment.end(), d3.segment.begin()),
             "coalescing segments on 1 2 5/3 4/6");
    p.expect(d2.tableau == tab("1 4 5/3/6"), "middle corner deletion on 1 2 5/3 4/6");
    const Tableau one = delete_corner(delete_corner(t, Corner{1, 3}).tableau, Corner{2, 2}).tableau;
    const Tableau two = delete_corner(d2.tableau, Corner{1, 3}).tableau;
    p.expect(one == tab("1 4/3/6") && two == tab("1 4/3/6"),
             "commuting deletions on 1 2 5/3 4/6");

    const auto [by_rows, by_cols] = canonical_words(t);
    p.expect(by_rows == parse_word("[6,3,4,1,2,5]") && by_cols == parse_word("[6,3,1,4,2,5]"),
             "reading words of 1 2 5/3 4/6");
  }

  // A larger fiber with slice words.
  {
    const Tableau t = tab("1 2 3 7 11/4 5 8/6 10/9");
    p.expect(rs_tableau(parse_word("[9,10,6,4,5,8,1,2,3,7,11]")) == t, "row word of the 11-box tableau");
    p.expect(rs_tableau(parse_word("[9,6,10,4,1,5,2,3,8,7,11]")) == t, "column word of the 11-box tableau");
    p.expect(rs_tableau(parse_word("[9,10,6,4,1,5,2,3,8,7,11]")) == t, "mixed word of the 11-box tableau");
    p.expect(rs_tableau(parse_word("[9,10,6]")) == row_tail(t, 3), "lower-slice word of the 11-box tableau");
    p.expect(rs_tableau(parse_word("[4,1,5,2,3,8,7,11]")) == row_slice(t, 1, 2),
             "upper-slice word of the 11-box tableau");
  }

  // Offspring sets, the shifted corners included.
  {
    const Tableau t = tab("1 2 6 7/3 5/4");
    p.expect(corner_shift(t, Corner{1, 4}) == std::optional<Tableau>(tab("1 2 6/3 5 7/4")),
             "first-corner shift of 1 2 6 7/3 5/4");
    const std::set<Tableau> want = tabset({
        "1 2 6 7/3 5/4", "1 2 6/3 5 7/4", "1 2 6/3 5/4 7", "1 2 7/3 5/4 6",
        "1 2 6 7/3/4/5", "1 5 6 7/2/3/4", "1 2 6/3 5/4/7", "1 2 7/3 5/4/6",
        "1 2 7/3 6/4/5"});
    p.expect(as_set(offsprings_recursive(t)) == want, "offspring set of 1 2 6 7/3 5/4");
    p.expect(as_set(offsprings_dual(t)) == want, "dual offspring set of 1 2 6 7/3 5/4");
  }
  {
    const Tableau t = tab("1 2 3 4/5 6 9 10/7 8");
    p.expect(corner_shift(t, Corner{2, 4}) == std::optional<Tableau>(tab("1 2 3 10/4 6 9/5 8/7")),
             "second-row corner shift of 1 2 3 4/5 6 9 10/7 8");
    p.expect(corner_shift(t, Corner{3, 2}) == std::optional<Tableau>(tab("1 2 3 6/4 8 9 10/5/7")),
             "third-row corner shift of 1 2 3 4/5 6 9 10/7 8");
    const std::set<Tableau> family = as_set(offsprings_recursive(t));
    p.expect(family.count(tab("1 2 3 10/4 6 9/5 8/7")) == 1 &&
                 family.count(tab("1 2 3 6/4 8 9 10/5/7")) == 1,
             "shifted corners are offsprings of 1 2 3 4/5 6 9 10/7 8");
  }

  // First rows of offsprings realize all three forms.
  {
    const Tableau t = tab("1 2 3 4 5 6 8/7 9 10");
    const std::set<Tableau> family = as_set(offsprings_recursive(t));
    const Tableau drop = tab("1 3 4 5 6 8/2 7 9 10");
    const Tableau jump = tab("1 2 3 4 5 8 10/6 9/7");
    const Tableau push = tab("1 2 3 4 5 6 10/7 8/9");
    p.expect(family.count(drop) == 1, "dropped-entry offspring of the ten-box tableau");
    p.expect(family.count(jump) == 1, "jumped-entry offspring of the ten-box tableau");
    p.expect(family.count(push) == 1, "pushed-entry offspring of the ten-box tableau");
    p.expect(first_row_form_ok(t[0], drop[0]) && first_row_form_ok(t[0], jump[0]) &&
                 first_row_form_ok(t[0], push[0]),
             "first rows of the ten-box offsprings classify");
  }

  // Small chains of fibers and their products.
  {
    const Tableau t1 = tab("1 2 4/3");
    const Tableau t2 = tab("1 2/3 4");
    const Tableau t3 = tab("1 4/2/3");
    const std::vector<Word> c1 = {parse_word("[1,3,2,4]"), parse_word("[1,3,4,2]"),
                                  parse_word("[3,1,2,4]")};
    const std::vector<Word> c2 = {parse_word("[3,1,4,2]"), parse_word("[3,4,1,2]")};
    const std::vector<Word> c3 = {parse_word("[3,2,1,4]"), parse_word("[3,2,4,1]"),
                                  parse_word("[3,4,2,1]")};
    auto sorted = [](std::vector<Word> ws) {
      std::sort(ws.begin(), ws.end());
      return ws;
    };
    p.expect(cell(t1) == sorted(c1), "fiber of 1 2 4/3");
    p.expect(cell(t2) == sorted(c2), "fiber of 1 2/3 4");
    p.expect(cell(t3) == sorted(c3), "fiber of 1 4/2/3");
    const std::set<Tableau> d1 = as_set(offsprings_recursive(t1));
    const std::set<Tableau> d2 = as_set(offsprings_recursive(t2));
    p.expect(d1.count(t2) == 1 && d1.count(t3) == 1 && d2.count(t3) == 1,
             "the three four-box fibers chain");
  }

  // Shift constructions pinned on four-box tableaux.
  {
    p.expect(corner_shift(tab("1 2/3 4"), Corner{2, 2}) ==
                 std::optional<Tableau>(tab("1 4/2/3")),
             "corner shift of 1 2/3 4");
    p.expect(corner_shift(tab("1 3/2 4"), Corner{2, 2}) == std::nullopt,
             "corner shift of 1 3/2 4 is empty");
    p.expect(as_set(offsprings_recursive(tab("1 2/3 4"))) ==
                 tabset({"1 2/3 4", "1 2/3/4", "1 4/2/3"}),
             "offspring set of 1 2/3 4");
    p.expect(as_set(offsprings_recursive(tab("1 3/2 4"))) == tabset({"1 3/2 4", "1 3/2/4"}),
             "offspring set of 1 3/2 4");
    p.expect(as_set(offsprings_recursive(tab("1 3/2"))) == tabset({"1 3/2", "1/2/3"}),
             "offspring set of 1 3/2");
    p.expect(dual_corner_shift(tab("1 2 3"), Corner{1, 3}) ==
                 std::optional<Tableau>(tab("1 3/2")),
             "dual corner shift of the three-box row");
    p.expect(cell(tab("1 3/2 4")) ==
                 (std::vector<Word>{parse_word("[2,1,4,3]"), parse_word("[2,4,1,3]")}),
             "fiber of 1 3/2 4");
  }

  // Enumeration sizes.
  {
    p.expect(standard_tableaux(3).size() == 4, "four standard tableaux on three boxes");
    p.expect(standard_tableaux(4).size() == 10, "ten standard tableaux on four boxes");
    p.expect(standard_tableaux(6).size() == 76, "seventy-six standard tableaux on six boxes");
    p.expect(standard_tableaux(7).size() == 232, "232 standard tableaux on seven boxes");
    p.expect(standard_tableaux(8).size() == 764, "764 standard tableaux on eight boxes");
  }

  return make_result("worked examples reproduce", p);
}

// ---------------------------------------------------------------------------
// Frozen counterexamples
// ---------------------------------------------------------------------------

CheckResult criterion_regressions() {
  Probe p;

  // A word ending with the last column whose prefix does not insert to the
  // left slice: the prefix-recovery statement has no column-suffix converse.
  {
    const Tableau t = tab("1 2/3");
    const Word w = parse_word("[1,3,2]");
    p.expect(rs_tableau(w) == t, "the witness word inserts to 1 2/3");
    const std::vector<int> last_column = column_of(t, 2);
    p.expect(Word(w.end() - 1, w.end()) == Word(last_column.rbegin(), last_column.rend()),
             "the witness word ends with the last column");
    p.expect(rs_tableau(parse_word("[1,3]")) == tab("1 3") &&
                 rs_tableau(parse_word("[1,3]")) != col_slice(t, 1, 1),
             "the prefix inserts to a row, not to the first column");
  }

  // Distinct ordered cells collapse onto one tableau after embedding.
  {
    p.expect(duflo_leq_words(parse_word("[1,2]"), parse_word("[2,1]")),
             "the two-letter cells are strictly ordered");
    const Word one = compose(range_cycle_lt(2, 2, 3), parse_word("[1,2,3]"));
    const Word two = compose(range_cycle_lt(2, 2, 3), parse_word("[2,1,3]"));
    p.expect(one == parse_word("[1,3,2]") && two == parse_word("[3,1,2]"),
             "embedding the two-letter cells");
    p.expect(rs_tableau(one) == tab("1 2/3") && rs_tableau(two) == tab("1 2/3"),
             "both embedded cells insert to the same tableau");
  }

  // An offspring whose row tails are incomparable.
  {
    const Tableau t = tab("1 2 3 9/4 5 6/7 8 10");
    const Word w = parse_word("[4,7,8,5,6,10,9,1,2,3]");
    p.expect(rs_tableau(w) == t, "the ten-letter word inserts to its tableau");
    p.expect(w[3] < w[4], "the ten-letter word ascends at the step position");
    const Tableau s = rs_tableau(apply_right_s(w, 4));
    p.expect(s == tab("1 2 3 9/4 5 8/6 10/7"), "one ascent step moves the tableau");
    p.expect(as_set(offsprings_recursive(t)).count(s) == 1, "the stepped tableau is an offspring");
    const Tableau t_tail = standardize_tableau(row_tail(t, 2));
    const Tableau s_tail = standardize_tableau(row_tail(s, 2));
    p.expect(t_tail == tab("1 2 3/4 5 6") && s_tail == tab("1 2 5/3 6/4"),
             "standardized row tails");
    const TableauPoset poset = induced_order(6);
    p.expect(!poset.leq(t_tail, s_tail) && !poset.leq(s_tail, t_tail),
             "row tails are incomparable");
  }

  // A cover that stops being a cover after padding.
  {
    const Tableau t = tab("1 2/3");
    const Tableau s = tab("1/2/3");
    const std::vector<Tableau> covers = duflo_descendants(t);
    p.expect(std::find(covers.begin(), covers.end(), s) != covers.end(),
             "the column covers the hook on three boxes");
    const Tableau tp = insert(t, 4).tableau;
    const Tableau sp = insert(s, 4).tableau;
    const Tableau middle = tab("1 2/3 4");
    p.expect(tp == tab("1 2 4/3") && sp == tab("1 4/2/3"), "padded pair on four boxes");
    p.expect(corner_shift(tp, Corner{1, 3}) == std::optional<Tableau>(middle) &&
                 corner_shift(middle, Corner{2, 2}) == std::optional<Tableau>(sp),
             "two corner shifts bridge the padded pair");
    const TableauPoset poset = induced_order(4);
    p.expect(poset.leq(tp, middle) && poset.leq(middle, sp) && poset.leq(tp, sp),
             "padded pair stays comparable");
    const std::vector<Tableau> padded_covers = duflo_descendants(tp);
    p.expect(std::find(padded_covers.begin(), padded_covers.end(), sp) == padded_covers.end(),
             "padding breaks the cover");
  }

  // A cover whose projections acquire a middle element.
  {
    const Tableau t = tab("1 3 5/2 4");
    const Tableau s = tab("1 3/2 4/5");
    p.expect(rs_tableau(parse_word("[2,1,4,3,5]")) == t && rs_tableau(parse_word("[2,1,5,4,3]")) == s,
             "five-box pair from its words");
    const std::vector<Tableau> covers = duflo_descendants(t);
    p.expect(std::find(covers.begin(), covers.end(), s) != covers.end(),
             "five-box pair is a cover");
    const Tableau tp = standardize_tableau(project(t, 2, 5));
    const Tableau sp = standardize_tableau(project(s, 2, 5));
    p.expect(tp == tab("1 2 4/3") && sp == tab("1 2/3/4"), "projection to the top interval");
    const TableauPoset poset = induced_order(4);
    const Tableau middle = tab("1 2/3 4");
    p.expect(poset.leq(tp, middle) && poset.leq(middle, sp),
             "projection inserts a middle element");
    const std::vector<Tableau> proj_covers = duflo_descendants(tp);
    p.expect(std::find(proj_covers.begin(), proj_covers.end(), sp) == proj_covers.end(),
             "projection breaks the cover");
  }

  // Comparable tableaux without comparable word representatives.
  {
    const Tableau t = tab("1 2 5/3 4");
    const std::vector<Word> fiber_t = {parse_word("[3,1,4,2,5]"), parse_word("[3,1,4,5,2]"),
                                       parse_word("[3,4,1,2,5]"), parse_word("[3,4,1,5,2]"),
                                       parse_word("[3,4,5,1,2]")};
    std::vector<Word> sorted_fiber = fiber_t;
    std::sort(sorted_fiber.begin(), sorted_fiber.end());
    p.expect(cell(t) == sorted_fiber, "fiber of 1 2 5/3 4");

    const Word x = parse_word("[3,4,1,2,5]");
    const Tableau s = rs_tableau(apply_right_s(x, 3));
    p.expect(s == tab("1 4 5/2/3"), "one step out of the fiber");
    const std::vector<Word> fiber_s = {parse_word("[3,2,1,4,5]"), parse_word("[3,2,4,1,5]"),
                                       parse_word("[3,2,4,5,1]"), parse_word("[3,4,2,1,5]"),
                                       parse_word("[3,4,2,5,1]"), parse_word("[3,4,5,2,1]")};
    std::vector<Word> sorted_s = fiber_s;
    std::sort(sorted_s.begin(), sorted_s.end());
    p.expect(cell(s) == sorted_s, "fiber of 1 4 5/2/3");

    const Word y = parse_word("[3,2,1,4,5]");
    p.expect(rs_tableau(y) == s, "a second word of 1 4 5/2/3");
    const Tableau u = rs_tableau(apply_right_s(y, 4));
    p.expect(u == tab("1 4/2 5/3"), "a second step");
    const std::vector<Word> fiber_u = {parse_word("[3,2,1,5,4]"), parse_word("[3,2,5,1,4]"),
                                       parse_word("[3,2,5,4,1]"), parse_word("[3,5,2,1,4]"),
                                       parse_word("[3,5,2,4,1]")};
    std::vector<Word> sorted_u = fiber_u;
    std::sort(sorted_u.begin(), sorted_u.end());
    p.expect(cell(u) == sorted_u, "fiber of 1 4/2 5/3");

    const TableauPoset poset = induced_order(5);
    p.expect(poset.leq(t, s) && poset.leq(s, u) && poset.leq(t, u), "the three tableaux chain");

    // The minimal word below is not below the maximal word above.
    const Word least = parse_word("[3,1,4,2,5]");
    const Word greatest = parse_word("[3,5,2,4,1]");
    std::size_t least_hits = 0;
    for (const Word& v : cell(t)) {
      if (coxeter_length(v) > coxeter_length(least)) continue;
      if (v == least) {
        ++least_hits;
      } else {
        p.expect(false, "another word of the lower fiber is as short");
      }
    }
    p.expect(least_hits == 1 && coxeter_length(least) == 3, "unique shortest word below");
    std::size_t greatest_hits = 0;
    for (const Word& v : cell(u)) {
      if (coxeter_length(v) < coxeter_length(greatest)) continue;
      if (v == greatest) {
        ++greatest_hits;
      } else {
        p.expect(false, "another word of the upper fiber is as long");
      }
    }
    p.expect(greatest_hits == 1 && coxeter_length(greatest) == 7, "unique longest word above");
    p.expect(!duflo_leq_words(least, greatest), "the extreme words do not compare");
    const RootSet inv_least = inversion_set(least);
    p.expect(std::binary_search(inv_least.begin(), inv_least.end(), Root{2, 4}),
             "the separating inversion sits below");
    const RootSet inv_greatest = inversion_set(greatest);
    p.expect(!std::binary_search(inv_greatest.begin(), inv_greatest.end(), Root{2, 4}),
             "the separating inversion is missing above");
    const RootSet complement_least = {{1, 2}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    const RootSet complement_greatest = {{2, 4}, {3, 4}, {3, 5}};
    p.expect(complement_roots(least) == complement_least, "complement roots below");
    p.expect(complement_roots(greatest) == complement_greatest, "complement roots above");
  }

  return make_result("counterexample regressions hold", p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_verification(int n, bool full) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("run_verification: rank must be between 1 and 7");
  }
  std::vector<CheckResult> out;

  {
    Probe p;
    const std::uint64_t words = factorial(n);
    const std::size_t tableaux = standard_tableaux(n).size();
    std::uint64_t square_sum = 0;
    std::size_t by_shape = 0;
    for (const Diagram& d : partitions_of(n)) {
      const std::uint64_t count = count_standard_tableaux(d);
      square_sum += count * count;
      by_shape += static_cast<std::size_t>(count);
    }
    p.expect(square_sum == words, "squared shape counts sum to the group order");
    p.expect(by_shape == tableaux, "shape counts sum to the enumeration");
    CheckResult r = make_result("enumeration counts", p);
    r.detail = std::to_string(words) + " words, " + std::to_string(tableaux) +
               " standard tableaux";
    out.push_back(std::move(r));
  }

  auto gated = [&](const char* name, int bound, auto&& body) {
    if (n > bound) {
      out.push_back(skipped(name, "skipped above rank " + std::to_string(bound)));
      return;
    }
    Probe p;
    body(p);
    out.push_back(make_result(name, p));
  };

  gated("ascent steps generate the containment order", 6,
        [&](Probe& p) { check_containment_generated(n, p); });
  gated("word identities hold", 7, [&](Probe& p) { check_word_identities(n, p); });
  gated("insertion pair round trips", 7, [&](Probe& p) { check_rs_roundtrip(n, p); });
  gated("extreme letters slide out", 7, [&](Probe& p) { check_rs_deletions(n, p); });
  gated("fresh-letter padding matches insertion", 7, [&](Probe& p) { check_rs_padding(n, p); });
  gated("corner operations round trip", 7, [&](Probe& p) { check_corner_roundtrips(n, p); });
  gated("interval projection commutes with insertion", 6,
        [&](Probe& p) { check_projection_insertion(n, p); });
  gated("shape chains round trip", 7, [&](Probe& p) { check_shape_chains(n, p); });
  gated("hook counts match the fibers", 7, [&](Probe& p) { check_hook_counts(n, p); });

  if (n <= 6 || full) {
    Probe p;
    check_cell_methods(n, p);
    out.push_back(make_result("cell recursion matches the filter", p));
  } else {
    out.push_back(skipped("cell recursion matches the filter",
                          "needs the full suite at rank 7"));
  }

  gated("cells assemble from both splits", 6, [&](Probe& p) { check_cell_assembly(n, p); });

  if (n <= 6 || full) {
    Probe p;
    check_threeway_offsprings(n, p);
    out.push_back(make_result("offspring constructions agree with brute force", p));
  } else {
    out.push_back(skipped("offspring constructions agree with brute force",
                          "needs the full suite at rank 7"));
  }

  gated("induced order matches brute force", 5, [&](Probe& p) { check_order_differential(n, p); });
  gated("transposition reverses the order", 6, [&](Probe& p) { check_order_duality(n, p); });
  gated("offspring shapes strictly grow", 7, [&](Probe& p) { check_offspring_shapes(n, p); });
  gated("diagram descendants are the dominance covers", 7,
        [&](Probe& p) { check_diagram_descendants(n, p); });
  gated("first rows classify and grow", 6, [&](Probe& p) { check_first_rows(n, p); });
  gated("projection preserves offspring", 6, [&](Probe& p) { check_preserve_projection(n, p); });
  gated("padding preserves offspring", 5, [&](Probe& p) { check_preserve_padding(n, p); });
  gated("witnesses exist for every greater shape", 5,
        [&](Probe& p) { check_shape_witnesses(n, p); });
  gated("deletion segments are ordered", 6, [&](Probe& p) { check_segments(n, p); });
  gated("distinct expulsions commute", 6, [&](Probe& p) { check_commuting_deletions(n, p); });
  gated("cells concatenate across slices", 5, [&](Probe& p) { check_cell_concatenations(n, p); });
  gated("tail cells recover from products", 5, [&](Probe& p) { check_tail_recovery(n, p); });
  gated("insertion factors through column splits", 5,
        [&](Probe& p) { check_insertion_splits(n, p); });
  gated("dual insertion identities hold", 6, [&](Probe& p) { check_dual_insertion(n, p); });

  return out;
}

std::vector<CheckResult> run_acceptance(bool full) {
  std::vector<CheckResult> out;

  // 1: frozen worked examples.
  out.push_back(criterion_worked_examples());

  // 2: the two offspring recursions against brute force.
  {
    Probe p;
    const int top = full ? 7 : 6;
    for (int n = 2; n <= top; ++n) check_threeway_offsprings(n, p);
    out.push_back(make_result("offspring constructions agree with brute force", p,
                              "ranks 2.." + std::to_string(top)));
  }

  // 3: the induced order against brute force.
  {
    Probe p;
    for (int n = 2; n <= 5; ++n) check_order_differential(n, p);
    out.push_back(make_result("induced order agrees with brute force", p, "ranks 2..5"));
  }

  // 4: insertion correspondence identities.
  {
    Probe p;
    for (int n = 1; n <= 7; ++n) {
      check_rs_roundtrip(n, p);
      check_rs_deletions(n, p);
      check_corner_roundtrips(n, p);
      check_shape_chains(n, p);
      check_rs_padding(n, p);
    }
    out.push_back(make_result("insertion correspondence identities hold", p, "ranks 1..7"));
  }

  // 5: cell counting and assembly.
  {
    Probe p;
    for (int n = 1; n <= 7; ++n) check_hook_counts(n, p);
    for (int n = 1; n <= 6; ++n) {
      check_cell_methods(n, p);
      check_cell_assembly(n, p);
    }
    {
      // Reading words stay in their fiber up to the largest covered rank.
      for (const Tableau& t : standard_tableaux(7)) {
        const auto [by_rows, by_cols] = canonical_words(t);
        p.expect(rs_tableau(by_rows) == t && rs_tableau(by_cols) == t,
                 "reading words insert back at " + to_text(t));
      }
    }
    out.push_back(make_result("cells count and assemble correctly", p,
                              "counts to rank 7, assembly to rank 6"));
  }

  // 6: structural identities.
  {
    Probe p;
    for (int n = 2; n <= 6; ++n) {
      check_word_identities(n, p);
      check_segments(n, p);
      check_commuting_deletions(n, p);
      check_order_duality(n, p);
      check_first_rows(n, p);
      check_dual_insertion(n, p);
    }
    for (int n = 2; n <= 5; ++n) {
      check_cell_concatenations(n, p);
      check_tail_recovery(n, p);
      check_insertion_splits(n, p);
    }
    out.push_back(make_result("structural identities hold", p, "ranks 2..6"));
  }

  // 7: preservation under projection and padding.
  {
    Probe p;
    for (int n = 2; n <= 6; ++n) check_preserve_projection(n, p);
    for (int n = 2; n <= 5; ++n) {
      check_preserve_padding(n, p);
      check_projection_insertion(n, p);
      check_shape_witnesses(n, p);
    }
    out.push_back(make_result("projection and padding preserve offspring", p, "ranks 2..6"));
  }

  // 8: frozen counterexamples.
  out.push_back(criterion_regressions());

  return out;
}

}  // namespace duflo
