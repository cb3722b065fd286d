// Moment controls and their verification in a modal solve.
#include <cmath>

#include "doctest.h"
#include "burgers_lab/control.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/heat.hpp"

using namespace burgers;
using namespace burgers::control;

TEST_CASE("parity split") {
    ModalField y(6);
    for (int k = 1; k <= 6; ++k) y[k] = k;
    const auto s = project_unreachable(y);
    CHECK(s.in_M[2] == 2.0);
    CHECK(s.in_M[3] == 0.0);
    CHECK(s.in_M_perp[3] == 3.0);
    CHECK(s.in_M_perp[4] == 0.0);
    CHECK(odd_modes_up_to(7) == std::vector<int>{1, 3, 5, 7});
    CHECK_THROWS_AS(moment_targets(y, {1, 3}), GuardError);
}

TEST_CASE("moment control steers the odd modes to zero") {
    ModalField y0(16);
    y0[1] = 0.3;
    y0[3] = -0.1;
    y0[5] = 0.02;
    const auto modes = odd_modes_up_to(7);
    MomentProblem p;
    p.T = 0.5;
    p.odd_modes = modes;
    p.targets = moment_targets(y0, modes);
    const auto sol = solve_moment_control(p);
    CHECK(sol.max_residual < 1e-10);
    // Independent check: solve the heat equation with this control.
    const auto y = heat::heat_modal_solve(sol.u, y0, 64);
    for (int k : modes) CHECK(std::abs(y.fields.back()[k]) < 1e-9 * spectral::l2_norm(y0));
    const auto v = null_control_verify(sol.u, y0, 64, modes);
    CHECK(v.max_controlled < 1e-9 * v.y0_norm);
}

TEST_CASE("return to zero keeps the joined control continuous") {
    CounterRng rng(4, 4);
    const TimeSignal free = band_limited_signal(rng, 0.5, 500, 5);
    const auto r = return_to_zero(free, 1.0, odd_modes_up_to(5));
    CHECK(r.u.T == doctest::Approx(1.0));
    CHECK(r.u.samples[500] == doctest::Approx(free.samples.back()));
    const auto y = heat::heat_modal_solve(r.u, ModalField(64), 64);
    for (int k : {1, 3, 5}) CHECK(std::abs(y.fields.back()[k]) < 1e-9);
}
