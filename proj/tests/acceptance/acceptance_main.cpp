// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails or overruns its time limit.

#include "weylprice/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  using namespace weylprice;
  std::uint64_t seed = 20240917;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0;
  int index = 0;
  for (const std::string& name : criterion_names()) {
    ++index;
    const CriterionOutcome o = run_criterion({name}, seed);
    const bool ok = o.pass();
    failed += !ok;
    std::string limit = o.time_limit > 0 ? " (limit " + std::to_string(static_cast<int>(o.time_limit)) + " s)" : "";
    std::printf("%s  criterion %d  %-20s %7.2f s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), o.seconds,
                limit.c_str());
    for (const Check& c : o.checks) {
      std::printf("      %-4s %-45s residual=%-12.4g tol=%-10.3g%s%s\n", c.pass ? "ok" : "BAD", c.name.c_str(),
                  c.residual, c.tolerance, c.error.empty() ? "" : "  error: ", c.error.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criterion_names().size());
  return failed == 0 ? 0 : 1;
}
