// Acceptance suite: runs every verification check at its pinned parameters
// and prints one pass/fail line per criterion.  All comparisons are exact
// integer equalities.  Exit code 0 only when everything passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hlab/check.hpp"

int main() {
  using namespace hlab;
  // criterion -> suite ids implementing it
  const std::vector<std::pair<std::string, std::vector<std::string>>> criteria = {
      {"hkr", {"hkr-p1", "hkr-p2"}},
      {"hodge", {"hodge-p1", "hodge-p2", "hodge-p3"}},
      {"gldim", {"gldim"}},
      {"koszul-dual", {"koszul-dual-2", "koszul-dual-3"}},
      {"rolled-up-hilbert", {"rolled-up-hilbert-2", "rolled-up-hilbert-3"}},
      {"dft-iso", {"dft-iso-2", "dft-iso-3"}},
      {"b0-gldim", {"b0-gldim-2", "b0-gldim-3"}},
      {"twisted-hh-graded", {"twisted-hh-graded"}},
      {"sl-duality", {"sl-duality-2", "sl-duality-3"}},
      {"veronese", {"veronese-2", "veronese-3", "veronese-4"}},
      {"bott-sanity", {"bott-sanity"}},
      {"engine-validation", {"engine-validation"}},
  };

  RunConfig cfg;
  int failures = 0, insufficient = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [criterion, ids] : criteria) {
    for (const auto& id : ids) {
      auto rep = run_check(id, cfg);
      const char* tag = rep.verdict == Verdict::kPass ? "PASS"
                        : rep.verdict == Verdict::kFail ? "FAIL"
                                                        : "INSUFFICIENT";
      std::printf("[%s] %-20s left=%s right=%s (%ld ms)\n", tag, rep.check_id.c_str(),
                  rep.left.table.str().c_str(), rep.right.table.str().c_str(), rep.runtime_ms);
      if (!rep.detail.empty()) std::printf("        %s\n", rep.detail.c_str());
      if (rep.verdict == Verdict::kFail) ++failures;
      if (rep.verdict == Verdict::kInsufficientPrecision) ++insufficient;
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("acceptance: %d failed, %d insufficient, total %ld ms\n", failures, insufficient,
              static_cast<long>(ms));
  if (failures) return 1;
  if (insufficient) return 3;
  return 0;
}
