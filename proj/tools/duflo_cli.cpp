// Command-line surface over the tableau library: compute insertion pairs,
// fibers, offspring sets, the containment order, and run the verification
// suites.  All set-valued output is sorted by text form so runs are
// byte-identical.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "duflo/engine.hpp"
#include "duflo/io.hpp"
#include "duflo/rs.hpp"
#include "duflo/tableaux.hpp"
#include "duflo/verify.hpp"
#include "duflo/words.hpp"

namespace {

constexpr int kPosetCeiling = 8;

// Writes the finished body to stdout or to --out; returns the exit status.
int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 1;
  }
  file << body;
  file.flush();
  if (!file.good()) {
    std::cerr << "error: failed writing output file: " << out_path << "\n";
    return 1;
  }
  return 0;
}

std::string json_word_document(const duflo::Word& w) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["word"] = w;
  return doc.dump();
}

std::string json_verify_document(int n, const std::string& suite,
                                 const std::vector<duflo::CheckResult>& results) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["rank"] = n;
  doc["suite"] = suite;
  doc["checks"] = nlohmann::json::array();
  for (const duflo::CheckResult& r : results) {
    nlohmann::json item;
    item["name"] = r.name;
    item["ran"] = r.ran;
    item["passed"] = r.ran ? nlohmann::json(r.passed) : nlohmann::json(nullptr);
    item["detail"] = r.detail;
    doc["checks"].push_back(item);
  }
  doc["passed"] = duflo::all_passed(results);
  return doc.dump();
}

std::string lines(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    out += item;
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young tableaux, insertion fibers, and their containment order"};
  app.require_subcommand(1);

  // rs -------------------------------------------------------------------
  std::string rs_word_text;
  std::string rs_format = "text";
  std::string rs_out;
  CLI::App* rs_cmd = app.add_subcommand("rs", "Insertion and recording tableaux of a word");
  rs_cmd->add_option("word", rs_word_text, "word, e.g. \"[2,5,1,4,3]\"")->required();
  rs_cmd->add_option("--format", rs_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  rs_cmd->add_option("--out", rs_out, "write output to this file");

  // cell -----------------------------------------------------------------
  std::string cell_tab_text;
  std::string cell_format = "text";
  std::string cell_out;
  CLI::App* cell_cmd = app.add_subcommand("cell", "All words whose insertion tableau is the given one");
  cell_cmd->add_option("tableau", cell_tab_text, "tableau, e.g. \"1 2 5/3 4\"")->required();
  cell_cmd->add_option("--format", cell_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cell_cmd->add_option("--out", cell_out, "write output to this file");

  // cellsize ---------------------------------------------------------------
  std::string cellsize_tab_text;
  std::string cellsize_format = "text";
  std::string cellsize_out;
  CLI::App* cellsize_cmd =
      app.add_subcommand("cellsize", "Number of words whose insertion tableau is the given one");
  cellsize_cmd->add_option("tableau", cellsize_tab_text, "tableau")->required();
  cellsize_cmd->add_option("--format", cellsize_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cellsize_cmd->add_option("--out", cellsize_out, "write output to this file");

  // offsprings --------------------------------------------------------------
  std::string off_tab_text;
  std::string off_format = "text";
  std::string off_out;
  CLI::App* off_cmd = app.add_subcommand(
      "offsprings", "Tableaux reachable from the given one by a single ascent step");
  off_cmd->add_option("tableau", off_tab_text, "standard tableau")->required();
  off_cmd->add_option("--format", off_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  off_cmd->add_option("--out", off_out, "write output to this file");

  // descendants --------------------------------------------------------------
  std::string desc_tab_text;
  std::string desc_format = "text";
  std::string desc_out;
  CLI::App* desc_cmd = app.add_subcommand(
      "descendants", "Covers of the given tableau in the containment order");
  desc_cmd->add_option("tableau", desc_tab_text, "standard tableau with at most 8 entries")
      ->required();
  desc_cmd->add_option("--format", desc_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  desc_cmd->add_option("--out", desc_out, "write output to this file");

  // order ---------------------------------------------------------------------
  std::string order_lhs_text;
  std::string order_rhs_text;
  std::string order_format = "text";
  std::string order_out;
  CLI::App* order_cmd =
      app.add_subcommand("order", "Whether the first tableau lies below the second");
  order_cmd->add_option("lower", order_lhs_text, "standard tableau")->required();
  order_cmd->add_option("upper", order_rhs_text, "standard tableau")->required();
  order_cmd->add_option("--format", order_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  order_cmd->add_option("--out", order_out, "write output to this file");

  // poset -----------------------------------------------------------------------
  int poset_n = 0;
  std::string poset_format = "text";
  std::string poset_out;
  CLI::App* poset_cmd =
      app.add_subcommand("poset", "The full containment order on tableaux of a given rank");
  poset_cmd->add_option("--n", poset_n, "rank, between 1 and 8")
      ->required()
      ->check(CLI::Range(1, kPosetCeiling));
  poset_cmd->add_option("--format", poset_format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  poset_cmd->add_option("--out", poset_out, "write output to this file");

  // diagram-descendants -----------------------------------------------------------
  std::string dd_text;
  std::string dd_format = "text";
  std::string dd_out;
  CLI::App* dd_cmd = app.add_subcommand(
      "diagram-descendants", "Dominance covers of a Young diagram");
  dd_cmd->add_option("diagram", dd_text, "diagram, e.g. \"4,2,1\"")->required();
  dd_cmd->add_option("--format", dd_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  dd_cmd->add_option("--out", dd_out, "write output to this file");

  // project ---------------------------------------------------------------------
  std::string project_operand;
  std::vector<int> project_range;
  std::string project_format = "text";
  std::string project_out;
  CLI::App* project_cmd = app.add_subcommand(
      "project", "Keep only the entries of an interval, sliding a tableau back together");
  project_cmd->add_option("operand", project_operand, "word (\"[...]\") or tableau")->required();
  project_cmd->add_option("--range", project_range, "interval bounds, e.g. --range 2 5")
      ->required()
      ->expected(2);
  project_cmd->add_option("--format", project_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  project_cmd->add_option("--out", project_out, "write output to this file");

  // verify ----------------------------------------------------------------------
  int verify_n = 0;
  std::string verify_suite = "fast";
  std::string verify_format = "text";
  std::string verify_out;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the differential and invariant suites for one rank");
  verify_cmd->add_option("--n", verify_n, "rank, between 1 and 7")
      ->required()
      ->check(CLI::Range(1, 7));
  verify_cmd->add_option("--suite", verify_suite, "fast|full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify_out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rs_cmd->parsed()) {
      const duflo::Word w = duflo::parse_word(rs_word_text);
      const auto [t, q] = duflo::rs_pair(w);
      std::string body;
      if (rs_format == "json") {
        body = duflo::json_rs_pair(t, q) + "\n";
      } else {
        body = "T: " + duflo::to_text(t) + "\nQ: " + duflo::to_text(q) + "\n";
      }
      return emit(body, rs_out);
    }

    if (cell_cmd->parsed()) {
      const duflo::Tableau t = duflo::parse_tableau(cell_tab_text);
      std::vector<duflo::Word> words = duflo::cell(t);
      duflo::sort_by_text(words);
      std::string body;
      if (cell_format == "json") {
        body = duflo::json_words(words) + "\n";
      } else {
        std::vector<std::string> rows;
        rows.reserve(words.size());
        for (const duflo::Word& w : words) rows.push_back(duflo::to_text(w));
        body = lines(rows);
      }
      return emit(body, cell_out);
    }

    if (cellsize_cmd->parsed()) {
      const duflo::Tableau t = duflo::parse_tableau(cellsize_tab_text);
      const std::uint64_t count = duflo::cell_size(t);
      std::string body;
      if (cellsize_format == "json") {
        body = duflo::json_count(count) + "\n";
      } else {
        body = std::to_string(count) + "\n";
      }
      return emit(body, cellsize_out);
    }

    if (off_cmd->parsed()) {
      const duflo::Tableau t = duflo::parse_tableau(off_tab_text);
      std::vector<duflo::Tableau> family = duflo::offsprings_recursive(t);
      duflo::sort_by_text(family);
      std::string body;
      if (off_format == "json") {
        body = duflo::json_tableaux(family) + "\n";
      } else {
        std::vector<std::string> rows;
        rows.reserve(family.size());
        for (const duflo::Tableau& s : family) rows.push_back(duflo::to_text(s));
        body = lines(rows);
      }
      return emit(body, off_out);
    }

    if (desc_cmd->parsed()) {
      const duflo::Tableau t = duflo::parse_tableau(desc_tab_text);
      if (static_cast<int>(duflo::tableau_size(t)) > kPosetCeiling) {
        std::cerr << "error: descendants supports at most " << kPosetCeiling
                  << " entries; got " << duflo::tableau_size(t) << "\n";
        return 2;
      }
      std::vector<duflo::Tableau> covers = duflo::duflo_descendants(t);
      duflo::sort_by_text(covers);
      std::string body;
      if (desc_format == "json") {
        body = duflo::json_tableaux(covers) + "\n";
      } else {
        std::vector<std::string> rows;
        rows.reserve(covers.size());
        for (const duflo::Tableau& s : covers) rows.push_back(duflo::to_text(s));
        body = lines(rows);
      }
      return emit(body, desc_out);
    }

    if (order_cmd->parsed()) {
      const duflo::Tableau lower = duflo::parse_tableau(order_lhs_text);
      const duflo::Tableau upper = duflo::parse_tableau(order_rhs_text);
      if (duflo::tableau_size(lower) != duflo::tableau_size(upper)) {
        throw std::invalid_argument("order: tableaux have different sizes: " +
                                    std::to_string(duflo::tableau_size(lower)) + " vs " +
                                    std::to_string(duflo::tableau_size(upper)));
      }
      const bool leq = duflo::duflo_leq_tableaux(lower, upper);
      std::string body;
      if (order_format == "json") {
        body = duflo::json_bool(leq) + "\n";
      } else {
        body = std::string(leq ? "true" : "false") + "\n";
      }
      return emit(body, order_out);
    }

    if (poset_cmd->parsed()) {
      const duflo::TableauPoset poset = duflo::induced_order(poset_n);
      std::string body;
      if (poset_format == "json") {
        body = duflo::json_poset(poset, true) + "\n";
      } else if (poset_format == "dot") {
        body = duflo::dot_poset(poset);
      } else {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
          rows.push_back(std::to_string(i) + ": " + duflo::to_text(poset.nodes[i]));
        }
        for (const auto& [from, to] : poset.cover_edges) {
          rows.push_back(std::to_string(from) + " < " + std::to_string(to));
        }
        body = lines(rows);
      }
      return emit(body, poset_out);
    }

    if (dd_cmd->parsed()) {
      const duflo::Diagram d = duflo::parse_diagram(dd_text);
      std::vector<duflo::Diagram> covers = duflo::diagram_descendants(d);
      duflo::sort_diagrams_by_text(covers);
      std::string body;
      if (dd_format == "json") {
        body = duflo::json_diagrams(covers) + "\n";
      } else {
        std::vector<std::string> rows;
        rows.reserve(covers.size());
        for (const duflo::Diagram& c : covers) rows.push_back(duflo::diagram_text(c));
        body = lines(rows);
      }
      return emit(body, dd_out);
    }

    if (project_cmd->parsed()) {
      const int lo = project_range[0];
      const int hi = project_range[1];
      if (lo > hi) {
        std::cerr << "error: --range expects lo <= hi; got " << lo << " " << hi << "\n";
        return 2;
      }
      std::string body;
      if (!project_operand.empty() && project_operand.front() == '[') {
        const duflo::Word w = duflo::parse_word(project_operand);
        const duflo::Word projected = duflo::project_word(w, lo, hi);
        body = (project_format == "json") ? json_word_document(projected) + "\n"
                                          : duflo::to_text(projected) + "\n";
      } else {
        const duflo::Tableau t = duflo::parse_tableau(project_operand);
        const duflo::Tableau projected = duflo::project(t, lo, hi);
        body = (project_format == "json") ? duflo::json_tableau(projected) + "\n"
                                          : duflo::to_text(projected) + "\n";
      }
      return emit(body, project_out);
    }

    if (verify_cmd->parsed()) {
      const bool full = verify_suite == "full";
      const std::vector<duflo::CheckResult> results = duflo::run_verification(verify_n, full);
      int passed = 0;
      int failed = 0;
      int skipped = 0;
      std::vector<std::string> rows;
      for (const duflo::CheckResult& r : results) {
        if (!r.ran) {
          ++skipped;
          rows.push_back("SKIP " + r.name + " (" + r.detail + ")");
        } else if (r.passed) {
          ++passed;
          rows.push_back("PASS " + r.name + " (" + r.detail + ")");
        } else {
          ++failed;
          rows.push_back("FAIL " + r.name + " (" + r.detail + ")");
        }
      }
      std::ostringstream total;
      total << passed << " passed, " << failed << " failed, " << skipped
            << " skipped at rank " << verify_n << " (" << verify_suite << " suite)";
      rows.push_back(total.str());
      const std::string body = (verify_format == "json")
                                   ? json_verify_document(verify_n, verify_suite, results) + "\n"
                                   : lines(rows);
      const int status = emit(body, verify_out);
      if (status != 0) return status;
      return failed == 0 ? 0 : 3;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no command\n";
  return 2;
}
