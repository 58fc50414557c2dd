#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef DUFLO_CLI_PATH
#error "DUFLO_CLI_PATH must point at the command line binary"
#endif

namespace {

struct CliResult {
  int code = -1;
  std::string output;
};

// Runs the binary with the given arguments, capturing stdout (and stderr when
// merge_stderr is set; otherwise stderr is discarded).
CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(DUFLO_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(Cli, PairCommandPrintsBothTableaux) {
  const CliResult r = run_cli("rs \"[2,5,1,4,3]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "T: 1 3/2 4/5\nQ: 1 2/3 4/5\n");

  const CliResult j = run_cli("rs \"[2,5,1,4,3]\" --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.output, "{\"Q\":[[1,2],[3,4],[5]],\"T\":[[1,3],[2,4],[5]],\"schema\":1}\n");
}

TEST(Cli, CellCommandListsTheFiber) {
  const CliResult r = run_cli("cell \"1 3/2 4\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "[2,1,4,3]\n[2,4,1,3]\n");

  const CliResult j = run_cli("cell \"1 3/2 4\" --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.output, "{\"schema\":1,\"words\":[[2,1,4,3],[2,4,1,3]]}\n");
}

TEST(Cli, CellSizeCommandCounts) {
  const CliResult r = run_cli("cellsize \"1 2 3/4\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "3\n");

  const CliResult j = run_cli("cellsize \"1 2 3/4\" --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.output, "{\"schema\":1,\"value\":3}\n");
}

TEST(Cli, OffspringsCommandSortsByText) {
  const CliResult r = run_cli("offsprings \"1 2/3 4\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "1 2/3 4\n1 2/3/4\n1 4/2/3\n");

  const CliResult j = run_cli("offsprings \"1 2/3 4\" --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.output,
            "{\"schema\":1,\"tableaux\":[[[1,2],[3,4]],[[1,2],[3],[4]],[[1,4],[2],[3]]]}\n");
}

TEST(Cli, DescendantsCommandListsCovers) {
  const CliResult r = run_cli("descendants \"1 2/3 4\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "1 2/3/4\n1 4/2/3\n");
}

TEST(Cli, OrderCommandComparesTableaux) {
  const CliResult yes = run_cli("order \"1 2/3 4\" \"1 4/2/3\"");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.output, "true\n");

  const CliResult no = run_cli("order \"1 4/2/3\" \"1 2/3 4\"");
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.output, "false\n");
}

TEST(Cli, DiagramDescendantsCommand) {
  const CliResult r = run_cli("diagram-descendants \"4,2,1\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "3,3,1\n4,1,1,1\n");
}

TEST(Cli, PosetCommandFormats) {
  const CliResult text = run_cli("poset --n 3");
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.output,
            "0: 1 2 3\n1: 1 2/3\n2: 1 3/2\n3: 1/2/3\n"
            "0 < 1\n0 < 2\n1 < 3\n2 < 3\n");

  const CliResult json = run_cli("poset --n 3 --format json");
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.output,
            "{\"covers\":[[0,1],[0,2],[1,3],[2,3]],\"n\":3,"
            "\"nodes\":[\"1 2 3\",\"1 2/3\",\"1 3/2\",\"1/2/3\"],"
            "\"reach\":[[0,1],[0,2],[0,3],[1,3],[2,3]],\"schema\":1}\n");

  const CliResult dot = run_cli("poset --n 3 --format dot");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.output,
            "digraph duflo_order {\n  rankdir=BT;\n"
            "  \"1 2 3\";\n  \"1 2/3\";\n  \"1 3/2\";\n  \"1/2/3\";\n"
            "  \"1 2 3\" -> \"1 2/3\";\n  \"1 2 3\" -> \"1 3/2\";\n"
            "  \"1 2/3\" -> \"1/2/3\";\n  \"1 3/2\" -> \"1/2/3\";\n}\n");
}

TEST(Cli, ProjectCommandHandlesWordsAndTableaux) {
  const CliResult t = run_cli("project \"1 3 5/2 4\" --range 2 5");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.output, "2 3 5/4\n");

  const CliResult w = run_cli("project \"[2,5,1,4,3]\" --range 2 4");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.output, "[2,4,3]\n");
}

TEST(Cli, VerifyCommandReportsEveryCheck) {
  const CliResult tiny = run_cli("verify --n 1");
  EXPECT_EQ(tiny.code, 0);
  EXPECT_NE(tiny.output.find("27 passed, 0 failed, 0 skipped at rank 1 (fast suite)"),
            std::string::npos);

  const CliResult counts = run_cli("verify --n 4");
  EXPECT_EQ(counts.code, 0);
  EXPECT_NE(counts.output.find("(24 words, 10 standard tableaux)"), std::string::npos);
  EXPECT_NE(counts.output.find("0 failed"), std::string::npos);
}

TEST(Cli, OutFlagWritesTheFile) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "duflo_cli_test_out.txt";
  std::filesystem::remove(path);
  const CliResult r = run_cli("rs \"[2,1]\" --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.output, "");  // everything went into the file
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  EXPECT_EQ(written, "T: 1/2\nQ: 1/2\n");
  std::filesystem::remove(path);
}

TEST(Cli, DomainErrorsExitOne) {
  const CliResult repeated = run_cli("rs \"[1,1]\"", /*merge_stderr=*/true);
  EXPECT_EQ(repeated.code, 1);
  EXPECT_NE(repeated.output.find("distinct"), std::string::npos);

  const CliResult token = run_cli("rs \"[1,x]\"", /*merge_stderr=*/true);
  EXPECT_EQ(token.code, 1);
  EXPECT_NE(token.output.find("bad token 'x'"), std::string::npos);

  const CliResult sizes = run_cli("order \"1 2 3\" \"1 2/3 4\"", /*merge_stderr=*/true);
  EXPECT_EQ(sizes.code, 1);
  EXPECT_NE(sizes.output.find("different sizes"), std::string::npos);

  const CliResult unwritable = run_cli("rs \"[2,1]\" --out /nonexistent_dir/x.txt",
                                       /*merge_stderr=*/true);
  EXPECT_EQ(unwritable.code, 1);
  EXPECT_NE(unwritable.output.find("cannot open output file"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("nonsense").code, 2);
  EXPECT_EQ(run_cli("rs").code, 2);  // missing operand
  EXPECT_EQ(run_cli("poset").code, 2);  // missing --n
  EXPECT_EQ(run_cli("poset --n 9").code, 2);  // above the ceiling
  EXPECT_EQ(run_cli("verify --n 8").code, 2);
  EXPECT_EQ(run_cli("rs \"[1,2]\" --format yaml").code, 2);
  EXPECT_EQ(run_cli("descendants \"1 2 3 4 5 6 7 8 9/10\"").code, 2);

  const CliResult range = run_cli("project \"1 2/3\" --range 4 2", /*merge_stderr=*/true);
  EXPECT_EQ(range.code, 2);
  EXPECT_NE(range.output.find("--range expects lo <= hi"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("rs --help").code, 0);
}

}  // namespace
