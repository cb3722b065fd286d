// Report serialization.
#include <cmath>
#include <limits>

#include "doctest.h"
#include "json.hpp"
#include "burgers_lab/report.hpp"

using namespace burgers::report;

namespace {
ExperimentReport sample() {
    ExperimentReport r;
    r.name = "demo";
    r.seed = 9;
    r.param("T", 0.5);
    r.scalar("gap", 1e-3, "something small");
    r.scalar("bad", std::numeric_limits<double>::infinity(), "overflow");
    r.add_series("a", {1.0, 2.0});
    r.add_series("b", {0.1});
    r.check("ok", true);
    r.meta("note", "x");
    return r;
}
}  // namespace

TEST_CASE("json layout") {
    const auto j = nlohmann::ordered_json::parse(sample().to_json());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"name", "seed", "params", "scalars", "paper_refs", "series",
                                           "passed", "metadata"});
    CHECK(j["scalars"]["gap"].get<double>() == 1e-3);
    CHECK(j["scalars"]["bad"].get<std::string>() == "inf");
    CHECK(j["paper_refs"][0].get<std::string>() == "gap: something small");
    CHECK(j["passed"]["ok"].get<bool>());
    CHECK(sample().to_json() == sample().to_json());
}

TEST_CASE("csv pads short series") {
    CHECK(sample().series_csv() == "a,b\n1,0.10000000000000001\n2,\n");
}

TEST_CASE("verdicts and number formatting") {
    auto r = sample();
    CHECK(r.all_passed());
    r.check("bad", false);
    CHECK_FALSE(r.all_passed());
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(std::nan("")) == "nan");
}
