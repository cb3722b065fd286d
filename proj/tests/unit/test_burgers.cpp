// Nonlinear solver: linear limit, manufactured solution, energy decay.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/burgers.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/heat.hpp"

using namespace burgers;
using namespace burgers::nonlinear;
using std::numbers::pi;

TEST_CASE("product evaluator against the direct product") {
    // y = e_1: y y_x = 2 pi sin(pi x) cos(pi x) = pi sin(2 pi x) = (pi / sqrt 2) e_2.
    ProductEvaluator prod(8, 2);
    const auto p = prod(spectral::unit_mode(8, 1));
    CHECK(p[2] == doctest::Approx(pi / std::sqrt(2.0)).epsilon(1e-13));
    for (int k : {1, 3, 4, 5, 8}) CHECK(std::abs(p[k]) < 1e-13);
}

TEST_CASE("without the nonlinearity the solver reproduces the heat solve") {
    BurgersConfig cfg;
    cfg.K = 16;
    cfg.n_t = 400;
    cfg.T = 0.5;
    cfg.nonlinear = false;
    CounterRng rng(2, 2);
    const TimeSignal u = band_limited_signal(rng, cfg.T, 400, 4);
    const auto y0 = spectral::unit_mode(16, 2, 0.1);
    const auto a = burgers_solve(u, y0, cfg);
    const auto b = heat::heat_modal_solve(u, y0, 16);
    for (int k = 1; k <= 16; ++k) {
        CHECK(a.fields.back()[k] == doctest::Approx(b.fields.back()[k]).epsilon(1e-6).scale(1e-8));
    }
}

TEST_CASE("manufactured solution converges at second order") {
    BurgersConfig cfg;
    cfg.K = 8;
    const auto st = mms_convergence(cfg, {50, 100, 200, 400});
    CHECK(st.observed_order > 1.9);
    const auto ex = mms_exact(1.0, 8);
    CHECK(ex[1] == doctest::Approx(std::exp(-1.0)));
    CHECK(ex[2] == doctest::Approx(0.1 * std::exp(-2.0)));
}

TEST_CASE("uncontrolled energy does not increase") {
    BurgersConfig cfg;
    cfg.K = 32;
    cfg.n_t = 500;
    ModalField y0(32);
    y0[1] = 0.5;
    y0[2] = -0.3;
    const auto y = burgers_solve(constant_signal(1.0, 500, 0.0), y0, cfg);
    for (int j = 1; j <= y.n_t(); ++j) {
        CHECK(spectral::l2_norm(y.fields[j]) <= spectral::l2_norm(y.fields[j - 1]) * (1 + 1e-12));
    }
}

TEST_CASE("config guards and blow-up") {
    BurgersConfig cfg;
    cfg.K = 0;
    CHECK_THROWS_AS(validate(cfg), GuardError);
    BurgersConfig big;
    big.K = 16;
    big.n_t = 100;
    big.blowup_threshold = 1.0;
    CHECK_THROWS_AS(burgers_solve(constant_signal(1.0, 100, 50.0), ModalField(16), big), BlowUpError);
}
