// Release gate: runs the eight acceptance criteria and prints one line per
// criterion.  Exit code 0 when every criterion passes, 1 otherwise, 2 on bad
// usage.

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "duflo/verify.hpp"

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) {
      const std::string value = argv[++i];
      if (value == "full") {
        full = true;
      } else if (value != "fast") {
        std::cerr << "usage: duflo_acceptance [--suite fast|full]\n";
        return 2;
      }
    } else {
      std::cerr << "usage: duflo_acceptance [--suite fast|full]\n";
      return 2;
    }
  }

  const std::vector<duflo::CheckResult> results = duflo::run_acceptance(full);
  bool ok = true;
  int index = 0;
  for (const duflo::CheckResult& r : results) {
    ++index;
    const bool good = r.ran && r.passed;
    ok = ok && good;
    std::cout << (good ? "PASS" : "FAIL") << " criterion " << index << ": " << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << " ("
            << (full ? "full" : "fast") << " suite)\n";
  return ok ? 0 : 1;
}
