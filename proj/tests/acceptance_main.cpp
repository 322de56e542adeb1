// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "qhstruct/acceptance.hpp"

int main() {
  bool ok = qhstruct::accept::run_all([](const qhstruct::accept::CriterionResult& r) {
    std::printf("[%2d] %s  (%5.2fs)  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.seconds, r.name.c_str());
    if (!r.pass) std::printf("     %s\n", r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf(ok ? "acceptance: all criteria passed\n"
                 : "acceptance: FAILURES above\n");
  return ok ? 0 : 1;
}
