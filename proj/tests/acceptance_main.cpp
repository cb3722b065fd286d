// Acceptance battery: one PASS/FAIL line per criterion, exit status 0 only
// when all fifteen pass. An optional argument overrides the seed.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "burgers_lab/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace burgers::acceptance;
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : kDefaultSeed;
    int failed = 0;
    run_all(seed, [&](const CriterionResult& r) {
        std::printf("%s  (%.1f s)\n", summary_line(r).c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.passed) ++failed;
    });
    std::printf("%d/%d criteria passed\n", kCriteria - failed, kCriteria);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
