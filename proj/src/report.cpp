#include "burgers_lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace burgers::report {

namespace {

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

}  // namespace

void ExperimentReport::param(const std::string& key, double value) { params.emplace_back(key, value); }

void ExperimentReport::scalar(const std::string& key, double value, const std::string& ref) {
    scalars.push_back({key, value, ref});
}

void ExperimentReport::add_series(const std::string& key, std::vector<double> values) {
    series.emplace_back(key, std::move(values));
}

void ExperimentReport::check(const std::string& key, bool ok) { passed.emplace_back(key, ok); }

void ExperimentReport::meta(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
}

bool ExperimentReport::all_passed() const {
    for (const auto& [k, ok] : passed) {
        if (!ok) return false;
    }
    return true;
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["seed"] = seed;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = number(v);
    j["scalars"] = nlohmann::ordered_json::object();
    j["paper_refs"] = nlohmann::ordered_json::array();
    for (const auto& s : scalars) {
        j["scalars"][s.name] = number(s.value);
        j["paper_refs"].push_back(s.name + ": " + s.ref);
    }
    j["series"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : series) {
        auto arr = nlohmann::ordered_json::array();
        for (double x : v) arr.push_back(number(x));
        j["series"][k] = std::move(arr);
    }
    j["passed"] = nlohmann::ordered_json::object();
    for (const auto& [k, ok] : passed) j["passed"][k] = ok;
    j["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : metadata) j["metadata"][k] = v;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::series_csv() const {
    std::string out;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += (i ? "," : "") + series[i].first;
        rows = std::max(rows, series[i].second.size());
    }
    out += "\n";
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (i) out += ",";
            if (r < series[i].second.size()) out += format_double(series[i].second[r]);
        }
        out += "\n";
    }
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path);
}

}  // namespace burgers::report
