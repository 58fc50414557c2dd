#include "duflo/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace duflo {

namespace {

[[noreturn]] void fail(const char* what, const std::string& why) {
  throw std::invalid_argument(std::string(what) + ": " + why);
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

}  // namespace

bool is_partition(const Diagram& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) return false;
    if (i > 0 && d[i] > d[i - 1]) return false;
  }
  return true;
}

void require_partition(const Diagram& d, const char* what) {
  if (!is_partition(d)) fail(what, "parts must be positive and weakly decreasing");
}

bool is_tableau(const Tableau& t) {
  std::set<int> seen;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty()) return false;
    if (i > 0 && t[i].size() > t[i - 1].size()) return false;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      const int a = t[i][j];
      if (a <= 0) return false;
      if (!seen.insert(a).second) return false;
      if (j > 0 && t[i][j - 1] >= a) return false;
      if (i > 0 && t[i - 1][j] >= a) return false;
    }
  }
  return true;
}

bool is_standard_tableau(const Tableau& t) {
  if (!is_tableau(t)) return false;
  const int n = tableau_size(t);
  for (const Row& r : t) {
    for (int a : r) {
      if (a > n) return false;
    }
  }
  return true;
}

void require_tableau(const Tableau& t, const char* what) {
  if (!is_tableau(t)) fail(what, "not a Young tableau");
}

void require_standard_tableau(const Tableau& t, const char* what) {
  if (!is_standard_tableau(t)) fail(what, "not a standard Young tableau");
}

int tableau_size(const Tableau& t) {
  int n = 0;
  for (const Row& r : t) n += static_cast<int>(r.size());
  return n;
}

std::vector<int> tableau_alphabet(const Tableau& t) {
  std::vector<int> values;
  for (const Row& r : t) values.insert(values.end(), r.begin(), r.end());
  std::sort(values.begin(), values.end());
  return values;
}

Diagram shape(const Tableau& t) {
  Diagram d;
  d.reserve(t.size());
  for (const Row& r : t) d.push_back(static_cast<int>(r.size()));
  return d;
}

std::vector<Corner> diagram_corners(const Diagram& d) {
  std::vector<Corner> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i + 1 == d.size() || d[i + 1] < d[i]) {
      out.push_back(Corner{static_cast<int>(i) + 1, d[i]});
    }
  }
  return out;
}

std::vector<Corner> corners(const Tableau& t) { return diagram_corners(shape(t)); }

bool is_corner(const Diagram& d, Corner c) {
  const std::vector<Corner> cs = diagram_corners(d);
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

bool dominance_geq(const Diagram& lam, const Diagram& mu) {
  require_partition(lam, "dominance_geq");
  require_partition(mu, "dominance_geq");
  const long total_lam = std::accumulate(lam.begin(), lam.end(), 0L);
  const long total_mu = std::accumulate(mu.begin(), mu.end(), 0L);
  if (total_lam != total_mu) fail("dominance_geq", "diagrams of different sizes");
  long sum_lam = 0;
  long sum_mu = 0;
  const std::size_t rows = std::max(lam.size(), mu.size());
  for (std::size_t i = 0; i < rows; ++i) {
    sum_lam += i < lam.size() ? lam[i] : 0;
    sum_mu += i < mu.size() ? mu[i] : 0;
    if (sum_lam > sum_mu) return false;
  }
  return true;
}

std::vector<Diagram> diagram_descendants(const Diagram& mu) {
  require_partition(mu, "diagram_descendants");
  const int m = static_cast<int>(mu.size());
  auto part = [&](int i) { return i <= m ? mu[i - 1] : 0; };  // 1-based, padded
  std::set<Diagram> out;
  auto emit = [&](Diagram lam) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    out.insert(lam);
  };
  for (int i = 1; i <= m; ++i) {
    // Move the last box of row i one row down.
    if (part(i) - part(i + 1) >= 2) {
      Diagram lam(mu);
      lam.resize(static_cast<std::size_t>(std::max(m, i + 1)), 0);
      lam[i - 1] -= 1;
      lam[i] += 1;
      emit(lam);
    }
    // Move the last box of row i below a run of rows exactly one box shorter.
    if (part(i) >= 2) {
      int j = i + 1;
      while (j <= m && part(j) == part(i) - 1) ++j;
      const int k = j - i - 1;
      if (k >= 1 && part(j) == part(i) - 2) {
        Diagram lam(mu);
        lam.resize(static_cast<std::size_t>(std::max(m, j)), 0);
        lam[i - 1] -= 1;
        lam[j - 1] = part(i) - 1;
        emit(lam);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Diagram> partitions_of(int n) {
  if (n < 0) fail("partitions_of", "negative size");
  std::vector<Diagram> out;
  Diagram current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

RowInsertResult row_insert(const Row& r, int j) {
  if (std::find(r.begin(), r.end(), j) != r.end()) {
    fail("row_insert", "entry " + std::to_string(j) + " already present");
  }
  RowInsertResult res;
  res.row = r;
  auto it = std::lower_bound(res.row.begin(), res.row.end(), j);
  if (it == res.row.end()) {
    res.row.push_back(j);
  } else {
    res.expelled = *it;
    *it = j;
  }
  return res;
}

Row row_add(const Row& r, int j) {
  if (std::find(r.begin(), r.end(), j) != r.end()) {
    fail("row_add", "entry " + std::to_string(j) + " already present");
  }
  Row out(r);
  out.insert(std::lower_bound(out.begin(), out.end(), j), j);
  return out;
}

Row row_remove(const Row& r, int a) {
  auto it = std::find(r.begin(), r.end(), a);
  if (it == r.end()) fail("row_remove", "entry " + std::to_string(a) + " absent");
  Row out(r);
  out.erase(out.begin() + (it - r.begin()));
  return out;
}

RowPushupResult row_pushup(const Row& r, int j) {
  if (std::find(r.begin(), r.end(), j) != r.end()) {
    fail("row_pushup", "entry " + std::to_string(j) + " already present");
  }
  if (r.empty() || r.front() > j) {
    fail("row_pushup", "no entry below " + std::to_string(j));
  }
  RowPushupResult res;
  res.row = r;
  auto it = std::lower_bound(res.row.begin(), res.row.end(), j);
  --it;  // the greatest entry < j
  res.expelled = *it;
  *it = j;
  return res;
}

InsertResult insert(const Tableau& t, int j) {
  require_tableau(t, "insert");
  const std::vector<int> values = tableau_alphabet(t);
  if (std::binary_search(values.begin(), values.end(), j) || j <= 0) {
    fail("insert", "entry " + std::to_string(j) + " not insertable");
  }
  InsertResult res;
  res.tableau = t;
  int carried = j;
  for (std::size_t i = 0; i < res.tableau.size(); ++i) {
    RowInsertResult step = row_insert(res.tableau[i], carried);
    res.tableau[i] = std::move(step.row);
    if (!step.expelled) {
      res.corner = Corner{static_cast<int>(i) + 1,
                          static_cast<int>(res.tableau[i].size())};
      return res;
    }
    carried = *step.expelled;
  }
  res.tableau.push_back(Row{carried});
  res.corner = Corner{static_cast<int>(res.tableau.size()), 1};
  return res;
}

PushupResult push_up(const Tableau& t, int j) {
  require_tableau(t, "push_up");
  if (t.empty()) fail("push_up", "empty tableau");
  const std::vector<int> values = tableau_alphabet(t);
  if (std::binary_search(values.begin(), values.end(), j) || j <= t.back().front()) {
    fail("push_up", "entry " + std::to_string(j) + " not pushable");
  }
  PushupResult res;
  res.tableau = t;
  int carried = j;
  for (std::size_t i = res.tableau.size(); i-- > 0;) {
    RowPushupResult step = row_pushup(res.tableau[i], carried);
    res.tableau[i] = std::move(step.row);
    carried = step.expelled;
  }
  res.expelled = carried;
  return res;
}

CornerDeletionResult delete_corner(const Tableau& t, Corner c) {
  require_tableau(t, "delete_corner");
  if (!is_corner(shape(t), c)) {
    fail("delete_corner", "(" + std::to_string(c.row) + "," + std::to_string(c.col) +
                              ") is not a corner");
  }
  CornerDeletionResult res;
  res.tableau = t;
  const int corner_entry = res.tableau[c.row - 1].back();
  res.tableau[c.row - 1].pop_back();
  if (res.tableau[c.row - 1].empty()) res.tableau.erase(res.tableau.begin() + (c.row - 1));
  if (c.row == 1) {
    res.expelled = corner_entry;
    res.segment = {c};
    return res;
  }
  std::vector<Corner> segment;
  int carried = corner_entry;
  for (int i = c.row - 1; i >= 1; --i) {
    RowPushupResult step = row_pushup(res.tableau[i - 1], carried);
    auto it = std::find(step.row.begin(), step.row.end(), carried);
    segment.push_back(Corner{i, static_cast<int>(it - step.row.begin()) + 1});
    res.tableau[i - 1] = std::move(step.row);
    carried = step.expelled;
  }
  segment.push_back(c);
  std::sort(segment.begin(), segment.end());
  res.expelled = carried;
  res.segment = std::move(segment);
  return res;
}

Tableau transpose(const Tableau& t) {
  Tableau out;
  if (t.empty()) return out;
  out.resize(t[0].size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) out[j].push_back(t[i][j]);
  }
  return out;
}

InsertResult column_insert(const Tableau& t, int j) {
  require_tableau(t, "column_insert");
  InsertResult res = insert(transpose(t), j);
  res.tableau = transpose(res.tableau);
  res.corner = Corner{res.corner.col, res.corner.row};
  return res;
}

CornerDeletionResult column_delete(const Tableau& t, Corner c) {
  require_tableau(t, "column_delete");
  CornerDeletionResult res = delete_corner(transpose(t), Corner{c.col, c.row});
  res.tableau = transpose(res.tableau);
  for (Corner& box : res.segment) box = Corner{box.col, box.row};
  std::sort(res.segment.begin(), res.segment.end());
  return res;
}

Tableau row_slice(const Tableau& t, int i, int j) {
  if (i < 1) fail("row_slice", "rows are 1-based");
  const int rows = static_cast<int>(t.size());
  const int lo = std::min(i, rows + 1);
  const int hi = std::min(j, rows);
  if (lo > hi) return {};
  return Tableau(t.begin() + (lo - 1), t.begin() + hi);
}

Tableau row_tail(const Tableau& t, int i) {
  return row_slice(t, i, static_cast<int>(t.size()));
}

Tableau col_slice(const Tableau& t, int i, int j) {
  return transpose(row_slice(transpose(t), i, j));
}

Tableau col_tail(const Tableau& t, int i) {
  const Tableau tt = transpose(t);
  return transpose(row_tail(tt, i));
}

Tableau stack_rows(const Row& top, const Tableau& rest) {
  Tableau out;
  if (!top.empty()) out.push_back(top);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Tableau juxtapose_column(const std::vector<int>& col, const Tableau& rest) {
  if (col.size() < rest.size()) {
    throw std::logic_error("juxtapose_column: column shorter than the row block");
  }
  Tableau out;
  for (std::size_t i = 0; i < col.size(); ++i) {
    Row r{col[i]};
    if (i < rest.size()) r.insert(r.end(), rest[i].begin(), rest[i].end());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> column_of(const Tableau& t, int j) {
  std::vector<int> out;
  for (const Row& r : t) {
    if (j - 1 < static_cast<int>(r.size())) out.push_back(r[j - 1]);
  }
  return out;
}

Tableau jdt_remove(const Tableau& t, int entry) {
  require_tableau(t, "jdt_remove");
  Tableau out(t);
  int r = -1;
  int c = -1;
  for (std::size_t i = 0; i < out.size() && r < 0; ++i) {
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      if (out[i][j] == entry) {
        r = static_cast<int>(i);
        c = static_cast<int>(j);
        break;
      }
    }
  }
  if (r < 0) fail("jdt_remove", "entry " + std::to_string(entry) + " absent");
  while (true) {
    const bool has_right = c + 1 < static_cast<int>(out[r].size());
    const bool has_below =
        r + 1 < static_cast<int>(out.size()) && c < static_cast<int>(out[r + 1].size());
    if (!has_right && !has_below) break;
    if (!has_below || (has_right && out[r][c + 1] < out[r + 1][c])) {
      out[r][c] = out[r][c + 1];
      c += 1;
    } else {
      out[r][c] = out[r + 1][c];
      r += 1;
    }
  }
  out[r].pop_back();
  if (out[r].empty()) out.erase(out.begin() + r);
  return out;
}

Tableau project(const Tableau& t, int lo, int hi) {
  require_tableau(t, "project");
  if (lo > hi) fail("project", "empty value interval");
  Tableau out(t);
  std::vector<int> values = tableau_alphabet(out);
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (*it > hi) out = jdt_remove(out, *it);
  }
  for (int v : values) {
    if (v < lo) out = jdt_remove(out, v);
  }
  return out;
}

Chain chain_psi(const Tableau& t) {
  require_standard_tableau(t, "chain_psi");
  Chain chain;
  Tableau u(t);
  for (int i = tableau_size(t); i >= 1; --i) {
    chain.push_back(shape(u));
    u = jdt_remove(u, i);
  }
  return chain;
}

Tableau chain_psi_inverse(const Chain& chain) {
  const int n = static_cast<int>(chain.size());
  for (const Diagram& d : chain) require_partition(d, "chain_psi_inverse");
  Tableau out;
  for (int step = 0; step < n; ++step) {
    const Diagram& cur = chain[step];
    const Diagram next = step + 1 < n ? chain[step + 1] : Diagram{};
    const int entry = n - step;
    int diff_row = -1;
    const std::size_t rows = std::max(cur.size(), next.size());
    for (std::size_t i = 0; i < rows; ++i) {
      const int a = i < cur.size() ? cur[i] : 0;
      const int b = i < next.size() ? next[i] : 0;
      if (a == b) continue;
      if (a != b + 1 || diff_row >= 0) fail("chain_psi_inverse", "steps must drop one box");
      diff_row = static_cast<int>(i);
    }
    if (diff_row < 0) fail("chain_psi_inverse", "steps must drop one box");
    if (static_cast<std::size_t>(diff_row) >= out.size()) out.resize(diff_row + 1);
    if (out[diff_row].size() < static_cast<std::size_t>(cur[diff_row])) {
      out[diff_row].resize(static_cast<std::size_t>(cur[diff_row]), 0);
    }
    out[diff_row][cur[diff_row] - 1] = entry;
  }
  if (!is_standard_tableau(out) && n > 0) {
    fail("chain_psi_inverse", "chain does not describe a standard tableau");
  }
  return out;
}

std::vector<int> tau_tableau(const Tableau& t) {
  require_standard_tableau(t, "tau_tableau");
  const int n = tableau_size(t);
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int a : t[i]) row_of[a] = static_cast<int>(i) + 1;
  }
  std::vector<int> out;
  for (int i = 1; i + 1 <= n; ++i) {
    if (row_of[i + 1] > row_of[i]) out.push_back(i);
  }
  return out;
}

Tableau renumber_up_tableau(const Tableau& t, int j) {
  require_tableau(t, "renumber_up_tableau");
  Tableau out(t);
  for (Row& r : out) {
    for (int& a : r) a = shift_value_up(a, j);
  }
  return out;
}

Tableau renumber_down_tableau(const Tableau& t, int j) {
  require_tableau(t, "renumber_down_tableau");
  Tableau out(t);
  for (Row& r : out) {
    for (int& a : r) a = shift_value_down(a, j);
  }
  return out;
}

Tableau standardize_tableau(const Tableau& t) {
  require_tableau(t, "standardize_tableau");
  const std::vector<int> values = tableau_alphabet(t);
  Tableau out(t);
  for (Row& r : out) {
    for (int& a : r) {
      a = static_cast<int>(std::lower_bound(values.begin(), values.end(), a) -
                           values.begin()) +
          1;
    }
  }
  return out;
}

Tableau relabel_tableau(const Tableau& t, const std::vector<int>& values) {
  require_standard_tableau(t, "relabel_tableau");
  if (static_cast<int>(values.size()) != tableau_size(t)) {
    fail("relabel_tableau", "alphabet size mismatch");
  }
  Tableau out(t);
  for (Row& r : out) {
    for (int& a : r) a = values[a - 1];
  }
  return out;
}

Word relabel_word(const Word& w, const std::vector<int>& values) {
  require_standard_word(w, "relabel_word");
  if (values.size() != w.size()) fail("relabel_word", "alphabet size mismatch");
  Word out(w);
  for (int& a : out) a = values[a - 1];
  return out;
}

std::vector<Tableau> standard_tableaux(int n) {
  if (n < 0) fail("standard_tableaux", "negative size");
  std::vector<Tableau> current{Tableau{}};
  for (int entry = 1; entry <= n; ++entry) {
    std::vector<Tableau> next;
    for (const Tableau& t : current) {
      for (std::size_t i = 0; i <= t.size(); ++i) {
        const bool addable =
            i == t.size() || i == 0 || t[i].size() < t[i - 1].size();
        if (!addable) continue;
        Tableau u(t);
        if (i == u.size()) u.emplace_back();
        u[i].push_back(entry);
        next.push_back(std::move(u));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::uint64_t count_standard_tableaux(const Diagram& d) {
  require_partition(d, "count_standard_tableaux");
  const int n = std::accumulate(d.begin(), d.end(), 0);
  if (n > 20) fail("count_standard_tableaux", "size above 20 overflows");
  Diagram conj(d.empty() ? 0 : d[0], 0);
  for (std::size_t j = 0; j < conj.size(); ++j) {
    int len = 0;
    while (len < static_cast<int>(d.size()) && d[len] > static_cast<int>(j)) ++len;
    conj[j] = len;
  }
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d[i]; ++j) {
      hooks *= static_cast<std::uint64_t>(d[i] - j + conj[j] - static_cast<int>(i) - 1);
    }
  }
  return factorial(n) / hooks;
}

}  // namespace duflo
