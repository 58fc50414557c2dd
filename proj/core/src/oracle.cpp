#include "duflo/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace duflo {

namespace {

Word identity_word(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

}  // namespace

std::vector<std::pair<Word, Word>> weak_covers(int n) {
  if (n < 0) throw std::invalid_argument("weak_covers: negative rank");
  std::vector<std::pair<Word, Word>> out;
  Word w = identity_word(n);
  do {
    for (int i = 1; i < n; ++i) {
      if (w[i - 1] < w[i]) out.emplace_back(w, apply_right_s(w, i));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> cell_bruteforce(const Tableau& t) {
  require_tableau(t, "cell_bruteforce");
  std::vector<Word> out;
  Word w = tableau_alphabet(t);
  do {
    if (rs_tableau(w) == t) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Tableau> offsprings_bruteforce(const Tableau& t) {
  require_tableau(t, "offsprings_bruteforce");
  std::set<Tableau> out{t};
  const int n = tableau_size(t);
  Word w = tableau_alphabet(t);
  do {
    if (rs_tableau(w) != t) continue;
    for (int i = 1; i < n; ++i) {
      if (w[i - 1] < w[i]) out.insert(rs_tableau(apply_right_s(w, i)));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::map<Tableau, std::set<Tableau>> offsprings_bruteforce_all(int n) {
  if (n < 0) throw std::invalid_argument("offsprings_bruteforce_all: negative rank");
  std::map<Tableau, std::set<Tableau>> out;
  Word w = identity_word(n);
  do {
    const Tableau t = rs_tableau(w);
    std::set<Tableau>& offsprings = out[t];
    offsprings.insert(t);
    for (int i = 1; i < n; ++i) {
      if (w[i - 1] < w[i]) offsprings.insert(rs_tableau(apply_right_s(w, i)));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int OrderOracle::index_of(const Tableau& t) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  if (it == nodes.end() || *it != t) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool OrderOracle::leq(const Tableau& a, const Tableau& b) const {
  const int i = index_of(a);
  const int j = index_of(b);
  if (i < 0 || j < 0) throw std::invalid_argument("OrderOracle::leq: unknown tableau");
  return reach[i][j] != 0;
}

OrderOracle induced_order_bruteforce(int n) {
  if (n < 0) throw std::invalid_argument("induced_order_bruteforce: negative rank");
  OrderOracle oracle;
  oracle.n = n;

  std::map<Tableau, std::set<Tableau>> one_step = offsprings_bruteforce_all(n);
  for (const auto& [t, unused] : one_step) oracle.nodes.push_back(t);
  std::sort(oracle.nodes.begin(), oracle.nodes.end());

  const int count = static_cast<int>(oracle.nodes.size());
  std::vector<std::vector<int>> step(count);
  for (int i = 0; i < count; ++i) {
    for (const Tableau& s : one_step.at(oracle.nodes[i])) {
      const int j = oracle.index_of(s);
      if (j != i) step[i].push_back(j);
    }
  }
  oracle.reach.assign(count, std::vector<char>(count, 0));
  for (int start = 0; start < count; ++start) {
    std::vector<char>& seen = oracle.reach[start];
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
  return oracle;
}

}  // namespace duflo
