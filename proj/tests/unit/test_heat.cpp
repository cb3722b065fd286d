// Modal heat solves against closed-form mode dynamics.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/heat.hpp"

using namespace burgers;
using namespace burgers::heat;
using std::numbers::pi;

TEST_CASE("coefficients of the constant function") {
    CHECK(omega_coefficient(1) == doctest::Approx(2 * std::sqrt(2.0) / pi));
    CHECK(omega_coefficient(2) == 0.0);
    CHECK(omega_coefficient(5) == doctest::Approx(2 * std::sqrt(2.0) / (5 * pi)));
}

TEST_CASE("free decay and constant control are exact") {
    const double T = 0.2;
    ModalField y0(8);
    y0[1] = 1.0;
    y0[4] = -0.5;
    const auto y = heat_modal_solve(constant_signal(T, 40, 1.0), y0, 8);
    for (int k = 1; k <= 8; ++k) {
        const double lam = std::pow(k * pi, 2);
        const double expect = y0[k] * std::exp(-lam * T) + omega_coefficient(k) * -std::expm1(-lam * T) / lam;
        CHECK(y.fields.back()[k] == doctest::Approx(expect).epsilon(1e-12).scale(1e-14));
    }
}

TEST_CASE("linear control: modes match a fine Duhamel quadrature") {
    const double T = 0.3;
    const TimeSignal u = sampled_signal(T, 60, [](double t) { return std::sin(9 * t); });
    const auto y = heat_modal_solve(u, ModalField(5), 5);
    for (int k : {1, 3}) {
        const double lam = std::pow(k * pi, 2);
        // Trapezoid on a grid 400 times finer than u's own.
        const int m = 24000;
        double acc = 0;
        for (int j = 0; j <= m; ++j) {
            const double s = T * j / m;
            acc += (j == 0 || j == m ? 0.5 : 1.0) * std::exp(-lam * (T - s)) * u.at(s);
        }
        CHECK(y.fields.back()[k] == doctest::Approx(omega_coefficient(k) * acc * T / m).epsilon(1e-6));
    }
}

TEST_CASE("energy identity and the primitive") {
    CounterRng rng(3, 3);
    const TimeSignal u = band_limited_signal(rng, 1.0, 500, 5);
    const auto y = heat_modal_solve(u, ModalField(32), 32);
    CHECK(std::abs(energy_residual(y, u)) < 1e-10);
    const TimeSignal U = primitive_U(u);
    CHECK(U.samples.front() == 0.0);
    // U(T) is the integral of the interpolant.
    double s = 0;
    for (int j = 0; j < u.steps(); ++j) s += 0.5 * u.dt() * (u.samples[j] + u.samples[j + 1]);
    CHECK(U.samples.back() == doctest::Approx(s).epsilon(1e-13));
}

TEST_CASE("exp_moment of a constant") {
    const double lam = 2.0;
    CHECK(exp_moment(constant_signal(1.0, 10, 1.0), lam) == doctest::Approx(std::expm1(lam) / lam).epsilon(1e-12));
}

TEST_CASE("g_1 at zero frequency") {
    CHECK(g_gamma_hat(1.0, 0.0) == doctest::Approx(std::sqrt(2.0) / (6 * std::sqrt(pi))).epsilon(1e-6));
}
