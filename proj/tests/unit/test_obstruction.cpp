// Quadratic obstruction experiments on small admissible controls.
#include <cmath>

#include "doctest.h"
#include "burgers_lab/obstruction.hpp"

using namespace burgers;
using namespace burgers::obstruction;

namespace {
AdmissibleControl make_control(std::uint64_t seed) {
    CounterRng rng(seed, 1);
    return admissible_control(rng, 0.5, 1.0, 7, 500);
}
}  // namespace

TEST_CASE("admissible controls vanish on the controlled modes") {
    const auto ac = make_control(11);
    CHECK(ac.terminal_controlled < 1e-9);
    CHECK(ac.u.T == doctest::Approx(1.0));
}

TEST_CASE("the quadratic form is negative") {
    for (std::uint64_t s : {1, 2, 3}) {
        const auto q = quadratic_form(make_control(s).u);
        CHECK_FALSE(q.skipped);
        CHECK(q.lhs < 0.0);
        CHECK(q.ratio > 0.0);
    }
}

TEST_CASE("time and frequency forms of the pairing agree") {
    const auto p = parseval_identity_check(make_control(5).u);
    CHECK(p.gap_closed < 1e-3);
    CHECK(p.gap_modal < 1e-3);
    CHECK(p.lhs < 0.0);
}

TEST_CASE("second-order identity holds to rounding") {
    const auto s = second_order_target(make_control(6).u);
    CHECK(s.gap < 1e-9);
    CHECK(s.target > 0.0);
}

TEST_CASE("parity cancels the cross term unless it is broken") {
    const auto u = make_control(8).u;
    CHECK(symmetry_cancellation(u).relative < 1e-12);
    CHECK(symmetry_cancellation(u, 2, 32, 0.1).relative > 1e-6);
}
