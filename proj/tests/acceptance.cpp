// Acceptance gate: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exit code 0 only if all pass.

#include <cstdio>

#include "hwb/selftest.hpp"

int main() {
    hwb::SelftestReport rep = hwb::run_selftest(/*seed=*/7);
    for (const auto& c : rep.results)
        std::printf("[%s] criterion %2d: %s — %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
    std::printf("%s\n", rep.pass ? "ALL CRITERIA PASSED" : "FAILURES PRESENT");
    return rep.pass ? 0 : 4;
}
