// Experiment reports: named parameters, scalars tagged with the statement
// they check, series, and pass flags. Insertion order is kept so that equal
// runs serialize to equal bytes.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace burgers::report {

struct Scalar {
    std::string name;
    double value = 0.0;
    std::string ref;   // what the value checks, in words
};

struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> params;
    std::vector<Scalar> scalars;
    std::vector<std::pair<std::string, std::vector<double>>> series;
    std::vector<std::pair<std::string, bool>> passed;
    std::vector<std::pair<std::string, std::string>> metadata;

    void param(const std::string& key, double value);
    void scalar(const std::string& key, double value, const std::string& ref);
    void add_series(const std::string& key, std::vector<double> values);
    void check(const std::string& key, bool ok);
    void meta(const std::string& key, const std::string& value);

    bool all_passed() const;
    // Pretty-printed JSON with keys name, seed, params, scalars, series,
    // passed, paper_refs, metadata.
    std::string to_json() const;
    // One column per series, shorter series padded with empty cells.
    std::string series_csv() const;
};

// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

// Writes text to path, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace burgers::report
