// The acceptance battery: fifteen numbered criteria, each producing an
// experiment report and a PASS/FAIL verdict. Shared by the acceptance test
// binary and the `suite acceptance` command.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "burgers_lab/report.hpp"

namespace burgers::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kCriteria = 15;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;    // one line of key numbers
    double seconds = 0.0;
    report::ExperimentReport report;
};

// Criteria 1..14. Criterion 15 needs two full runs; see run_all.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs 1..14, then repeats them and compares the serialized reports byte
// for byte as criterion 15. on_result is called as each criterion finishes.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [ 6] title: detail"
std::string summary_line(const CriterionResult& r);

// Aggregate report of a run (verdicts and details, without timings).
report::ExperimentReport summary_report(const std::vector<CriterionResult>& results,
                                        std::uint64_t seed);

}  // namespace burgers::acceptance
