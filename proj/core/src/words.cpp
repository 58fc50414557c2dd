#include "duflo/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace duflo {

namespace {

[[noreturn]] void fail(const char* what, const std::string& why) {
  throw std::invalid_argument(std::string(what) + ": " + why);
}

}  // namespace

bool is_word(const Word& w) {
  std::set<int> seen;
  for (int a : w) {
    if (a <= 0) return false;
    if (!seen.insert(a).second) return false;
  }
  return true;
}

bool is_standard_word(const Word& w) {
  if (!is_word(w)) return false;
  for (int a : w) {
    if (a > static_cast<int>(w.size())) return false;
  }
  return true;
}

void require_word(const Word& w, const char* what) {
  if (!is_word(w)) fail(what, "entries must be distinct positive integers");
}

void require_standard_word(const Word& w, const char* what) {
  if (!is_standard_word(w)) fail(what, "word must use each of 1..n exactly once");
}

std::vector<int> word_alphabet(const Word& w) {
  std::vector<int> values(w);
  std::sort(values.begin(), values.end());
  return values;
}

int position(const Word& w, int value) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == value) return static_cast<int>(k) + 1;
  }
  fail("position", "value " + std::to_string(value) + " does not occur");
}

Word apply_right_s(const Word& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size())) {
    fail("apply_right_s", "index " + std::to_string(i) + " out of range");
  }
  Word out(w);
  std::swap(out[i - 1], out[i]);
  return out;
}

Word compose(const Word& outer, const Word& inner) {
  require_standard_word(outer, "compose");
  require_standard_word(inner, "compose");
  if (outer.size() != inner.size()) fail("compose", "rank mismatch");
  Word out(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k] - 1];
  return out;
}

Word inverse_word(const Word& w) {
  require_standard_word(w, "inverse_word");
  Word out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[w[k] - 1] = static_cast<int>(k) + 1;
  return out;
}

Word longest_element(int n) {
  if (n < 0) fail("longest_element", "negative rank");
  Word out(static_cast<std::size_t>(n));
  std::iota(out.rbegin(), out.rend(), 1);
  return out;
}

RootSet inversion_set(const Word& w) {
  require_word(w, "inversion_set");
  RootSet roots;
  for (std::size_t b = 0; b < w.size(); ++b) {
    for (std::size_t a = b + 1; a < w.size(); ++a) {
      if (w[a] < w[b]) roots.emplace_back(w[a], w[b]);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSet complement_roots(const Word& w) {
  const RootSet inv = inversion_set(w);
  const std::vector<int> values = word_alphabet(w);
  RootSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      Root r(values[i], values[j]);
      if (!std::binary_search(inv.begin(), inv.end(), r)) out.push_back(r);
    }
  }
  return out;
}

std::size_t coxeter_length(const Word& w) { return inversion_set(w).size(); }

std::vector<int> tau_word(const Word& w) {
  require_standard_word(w, "tau_word");
  std::vector<int> pos(w.size() + 1, 0);
  for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k) + 1;
  std::vector<int> out;
  for (int i = 1; i + 1 <= static_cast<int>(w.size()); ++i) {
    if (pos[i + 1] < pos[i]) out.push_back(i);
  }
  return out;
}

bool duflo_leq_words(const Word& y, const Word& w) {
  require_standard_word(y, "duflo_leq_words");
  require_standard_word(w, "duflo_leq_words");
  if (y.size() != w.size()) fail("duflo_leq_words", "rank mismatch");
  const RootSet sy = inversion_set(y);
  const RootSet sw = inversion_set(w);
  return std::includes(sw.begin(), sw.end(), sy.begin(), sy.end());
}

int shift_value_up(int a, int j) { return a < j ? a : a + 1; }

int shift_value_down(int a, int j) {
  if (a == j) fail("shift_value_down", "value " + std::to_string(j) + " occurs");
  return a < j ? a : a - 1;
}

Word renumber_up(const Word& w, int j) {
  require_word(w, "renumber_up");
  if (j < 1) fail("renumber_up", "index must be positive");
  Word out(w);
  for (int& a : out) a = shift_value_up(a, j);
  return out;
}

Word renumber_down(const Word& w, int j) {
  require_word(w, "renumber_down");
  if (j < 1) fail("renumber_down", "index must be positive");
  Word out(w);
  for (int& a : out) a = shift_value_down(a, j);
  return out;
}

Word standardize_word(const Word& w) {
  require_word(w, "standardize_word");
  const std::vector<int> values = word_alphabet(w);
  Word out(w);
  for (int& a : out) {
    a = static_cast<int>(std::lower_bound(values.begin(), values.end(), a) -
                         values.begin()) +
        1;
  }
  return out;
}

Word reversal(const Word& w) {
  Word out(w);
  std::reverse(out.begin(), out.end());
  return out;
}

Word deletion(const Word& w, int m) {
  require_word(w, "deletion");
  Word out;
  out.reserve(w.size());
  bool found = false;
  for (int a : w) {
    if (a == m) {
      found = true;
    } else {
      out.push_back(a);
    }
  }
  if (!found) fail("deletion", "value " + std::to_string(m) + " does not occur");
  return out;
}

Word restriction(const Word& w, int i, int j) {
  if (i < 1 || j > static_cast<int>(w.size()) || i > j) {
    fail("restriction", "positions " + std::to_string(i) + ".." + std::to_string(j) +
                            " out of range");
  }
  return Word(w.begin() + (i - 1), w.begin() + j);
}

Word value_restriction(const Word& w, int lo, int hi) {
  require_word(w, "value_restriction");
  if (lo > hi) fail("value_restriction", "empty value interval");
  Word out;
  for (int a : w) {
    if (lo <= a && a <= hi) out.push_back(a);
  }
  return out;
}

Word colligation(const Word& x, const Word& y) {
  Word out(x);
  out.insert(out.end(), y.begin(), y.end());
  require_word(out, "colligation");
  return out;
}

Word range_cycle_lt(int i, int j, int n) {
  if (n < 0) fail("range_cycle_lt", "negative rank");
  Word out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  if (i > j) return out;
  if (i < 1 || j + 1 > n) fail("range_cycle_lt", "index range out of bounds");
  for (int k = i; k <= j; ++k) out = apply_right_s(out, k);
  return out;
}

Word range_cycle_gt(int i, int j, int n) {
  if (n < 0) fail("range_cycle_gt", "negative rank");
  Word out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  if (i < j) return out;
  if (j < 1 || i + 1 > n) fail("range_cycle_gt", "index range out of bounds");
  for (int k = i; k >= j; --k) out = apply_right_s(out, k);
  return out;
}

std::pair<Word, Word> decompose_extreme(const Word& w, Extreme which) {
  require_standard_word(w, "decompose_extreme");
  const int n = static_cast<int>(w.size());
  if (n < 1) fail("decompose_extreme", "word must be nonempty");
  if (which == Extreme::max_entry) {
    const int i = position(w, n);
    return {deletion(w, n), range_cycle_gt(n - 1, i, n)};
  }
  const int i = position(w, 1);
  return {deletion(w, 1), range_cycle_lt(1, i - 1, n)};
}

}  // namespace duflo
