// Acceptance gate: runs every criterion of the built-in selftest against the
// golden data and prints one pass/fail line per criterion.
#include <cstdio>
#include <cstdlib>

#include "thomschur/selftest.hpp"

#ifndef THOMSCHUR_GOLDEN_DIR
#define THOMSCHUR_GOLDEN_DIR "data/golden"
#endif

int main(int argc, char** argv)
{
    const char* dir = argc > 1 ? argv[1] : THOMSCHUR_GOLDEN_DIR;
    thomschur::SelftestReport report = thomschur::run_selftest(dir);
    for (const auto& c : report.criteria) {
        std::printf("criterion %2d (%s): %s\n", c.number, c.title.c_str(),
                    c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.detail.empty())
            std::printf("    %s\n", c.detail.c_str());
    }
    std::printf("acceptance: %s\n", report.all_pass() ? "ALL PASS" : "FAILED");
    return report.all_pass() ? EXIT_SUCCESS : EXIT_FAILURE;
}
