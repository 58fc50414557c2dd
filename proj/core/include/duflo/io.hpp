#ifndef DUFLO_IO_HPP
#define DUFLO_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "duflo/engine.hpp"
#include "duflo/tableaux.hpp"
#include "duflo/words.hpp"

namespace duflo {

// Text forms.  Words print as "[2,5,1,4,3]", tableaux as rows joined by '/'
// with entries separated by single spaces ("1 2 5/3 4/6"), diagrams as
// comma-separated parts ("3,2,1").  Parsers throw std::invalid_argument
// naming the offending token.

std::string to_text(const Word& w);
std::string to_text(const Tableau& t);
// Words and diagrams share a representation, so the diagram form has its own
// name ("3,2,1" rather than "[3,2,1]").
std::string diagram_text(const Diagram& d);

Word parse_word(const std::string& s);
Tableau parse_tableau(const std::string& s);
Diagram parse_diagram(const std::string& s);

// JSON forms (schema version 1), rendered as compact single-line documents.
std::string json_rs_pair(const Tableau& t, const Tableau& q);
std::string json_tableau(const Tableau& t);
std::string json_words(const std::vector<Word>& words);
std::string json_tableaux(const std::vector<Tableau>& ts);
std::string json_diagrams(const std::vector<Diagram>& ds);
std::string json_bool(bool b);
std::string json_count(std::uint64_t value);
std::string json_poset(const TableauPoset& poset, bool include_reach);

// Graphviz form of the cover diagram.
std::string dot_poset(const TableauPoset& poset);

// Sort helpers used to make every set-valued output canonical: text-form
// ascending.
void sort_by_text(std::vector<Word>& words);
void sort_by_text(std::vector<Tableau>& ts);
void sort_diagrams_by_text(std::vector<Diagram>& ds);

}  // namespace duflo

#endif  // DUFLO_IO_HPP
