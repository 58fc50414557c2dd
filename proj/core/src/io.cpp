#include "duflo/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace duflo {

namespace {

using nlohmann::json;

[[noreturn]] void bad_token(const std::string& what, const std::string& token) {
  throw std::invalid_argument(what + ": bad token '" + token + "'");
}

int parse_int_token(const std::string& what, const std::string& token) {
  if (token.empty()) bad_token(what, token);
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(what, token);
  }
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    bad_token(what, token);
  }
}

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

json tableau_json(const Tableau& t) {
  json rows = json::array();
  for (const Row& r : t) rows.push_back(r);
  return rows;
}

}  // namespace

std::string to_text(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string to_text(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "/";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j > 0) out += " ";
      out += std::to_string(t[i][j]);
    }
  }
  return out;
}

std::string diagram_text(const Diagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out;
}

Word parse_word(const std::string& s) {
  const std::string body = strip(s);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    bad_token("parse_word", body);
  }
  const std::string inner = strip(body.substr(1, body.size() - 2));
  Word w;
  if (!inner.empty()) {
    for (const std::string& token : split(inner, ',')) {
      w.push_back(parse_int_token("parse_word", strip(token)));
    }
  }
  require_word(w, "parse_word");
  return w;
}

Tableau parse_tableau(const std::string& s) {
  const std::string body = strip(s);
  Tableau t;
  if (!body.empty()) {
    for (const std::string& row_text : split(body, '/')) {
      Row row;
      std::istringstream in(strip(row_text));
      std::string token;
      while (in >> token) row.push_back(parse_int_token("parse_tableau", token));
      if (row.empty()) bad_token("parse_tableau", row_text);
      t.push_back(std::move(row));
    }
  }
  require_tableau(t, "parse_tableau");
  return t;
}

Diagram parse_diagram(const std::string& s) {
  const std::string body = strip(s);
  Diagram d;
  if (!body.empty()) {
    for (const std::string& token : split(body, ',')) {
      d.push_back(parse_int_token("parse_diagram", strip(token)));
    }
  }
  require_partition(d, "parse_diagram");
  return d;
}

std::string json_rs_pair(const Tableau& t, const Tableau& q) {
  json doc;
  doc["schema"] = 1;
  doc["T"] = tableau_json(t);
  doc["Q"] = tableau_json(q);
  return doc.dump();
}

std::string json_tableau(const Tableau& t) {
  json doc;
  doc["schema"] = 1;
  doc["tableau"] = tableau_json(t);
  return doc.dump();
}

std::string json_words(const std::vector<Word>& words) {
  json doc;
  doc["schema"] = 1;
  doc["words"] = json::array();
  for (const Word& w : words) doc["words"].push_back(w);
  return doc.dump();
}

std::string json_tableaux(const std::vector<Tableau>& ts) {
  json doc;
  doc["schema"] = 1;
  doc["tableaux"] = json::array();
  for (const Tableau& t : ts) doc["tableaux"].push_back(tableau_json(t));
  return doc.dump();
}

std::string json_diagrams(const std::vector<Diagram>& ds) {
  json doc;
  doc["schema"] = 1;
  doc["diagrams"] = json::array();
  for (const Diagram& d : ds) doc["diagrams"].push_back(d);
  return doc.dump();
}

std::string json_bool(bool b) {
  json doc;
  doc["schema"] = 1;
  doc["value"] = b;
  return doc.dump();
}

std::string json_count(std::uint64_t value) {
  json doc;
  doc["schema"] = 1;
  doc["value"] = value;
  return doc.dump();
}

std::string json_poset(const TableauPoset& poset, bool include_reach) {
  json doc;
  doc["schema"] = 1;
  doc["n"] = poset.n;
  doc["nodes"] = json::array();
  for (const Tableau& t : poset.nodes) doc["nodes"].push_back(to_text(t));
  doc["covers"] = json::array();
  for (const auto& [i, j] : poset.cover_edges) {
    doc["covers"].push_back(json::array({i, j}));
  }
  if (include_reach) {
    doc["reach"] = json::array();
    const int count = static_cast<int>(poset.nodes.size());
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        if (i != j && poset.reach[i][j]) doc["reach"].push_back(json::array({i, j}));
      }
    }
  }
  return doc.dump();
}

std::string dot_poset(const TableauPoset& poset) {
  std::string out = "digraph duflo_order {\n  rankdir=BT;\n";
  for (const Tableau& t : poset.nodes) {
    out += "  \"" + to_text(t) + "\";\n";
  }
  for (const auto& [i, j] : poset.cover_edges) {
    out += "  \"" + to_text(poset.nodes[i]) + "\" -> \"" + to_text(poset.nodes[j]) +
           "\";\n";
  }
  out += "}\n";
  return out;
}

void sort_by_text(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return to_text(a) < to_text(b);
  });
}

void sort_by_text(std::vector<Tableau>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Tableau& a, const Tableau& b) {
    return to_text(a) < to_text(b);
  });
}

void sort_diagrams_by_text(std::vector<Diagram>& ds) {
  std::sort(ds.begin(), ds.end(), [](const Diagram& a, const Diagram& b) {
    return diagram_text(a) < diagram_text(b);
  });
}

}  // namespace duflo
