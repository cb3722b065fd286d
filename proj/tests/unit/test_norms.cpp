// Whole-line dual norms of time signals.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/dual_norms.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/quadrature.hpp"

using namespace burgers;
using namespace burgers::norms;
using std::numbers::pi;

TEST_CASE("transform of a linear ramp against quadrature") {
    const TimeSignal u = sampled_signal(1.5, 3, [](double t) { return 1.0 + t; });
    for (double xi : {0.0, 0.7, -4.0, 31.0}) {
        const auto ref = quad::integrate(
                             [&](double t) { return (1.0 + t) * std::exp(std::complex<double>(0, -xi * t)); },
                             0.0, 1.5, 8) /
                         std::sqrt(2 * pi);
        CHECK(std::abs(transform_at(u, xi) - ref) < 1e-12);
    }
}

TEST_CASE("dual norm of a constant against the closed-form spectrum") {
    // |u^(xi)|^2 = (2 / pi) sin^2(xi T / 2) / xi^2 for u = 1 on [0, T].
    const double T = 1.0;
    const TimeSignal u = constant_signal(T, 200, 1.0);
    for (double s : {0.75, 1.0, 1.25}) {
        auto f = [&](double xi) {
            const double sinc = xi == 0.0 ? T / 2 : std::sin(xi * T / 2) / xi;
            return (2 / pi) * sinc * sinc * std::pow(1 + xi * xi, -s);
        };
        const double L = 4000.0;
        double ref = 2 * quad::integrate(f, 0.0, L, 4000);
        ref += 2 * (1 / pi) * std::pow(L, -1 - 2 * s) / (1 + 2 * s);  // averaged tail
        CHECK(dual_sobolev_norm(u, s) == doctest::Approx(std::sqrt(ref)).epsilon(1e-5));
    }
}

TEST_CASE("norm ordering, Plancherel and interpolation") {
    CounterRng rng(5, 5);
    const TimeSignal u = band_limited_signal(rng, 1.0, 800, 6);
    const auto n = dual_sobolev_norms(u, {0.75, 1.0, 1.25});
    CHECK(n[0] > n[1]);
    CHECK(n[1] > n[2]);
    CHECK(plancherel_gap(u) < 1e-10);
    const auto ic = interpolation_check(u);
    CHECK(ic.passed);
    CHECK(ic.lhs == doctest::Approx(n[1]).epsilon(1e-12));
}

TEST_CASE("zero signal and bad durations") {
    CHECK(dual_sobolev_norm(constant_signal(1.0, 10, 0.0), 1.0) == 0.0);
    CHECK_THROWS_AS(auto_pad(0.0), GuardError);
    CHECK(auto_pad(1.0) == 37);
    CHECK(auto_pad(100.0) == 8);
}
