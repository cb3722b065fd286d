// Random numbers, quadrature, exponential-integrator weights, signals.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/expint.hpp"
#include "burgers_lab/quadrature.hpp"
#include "burgers_lab/rng.hpp"
#include "burgers_lab/signals.hpp"

using namespace burgers;
using std::numbers::pi;

TEST_CASE("splitmix64 matches the reference generator") {
    // First two outputs of the reference splitmix64 seeded with 0.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(0x9E3779B97F4A7C15ULL) == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("counter rng is reproducible and stream separated") {
    CounterRng a(7, 1), b(7, 1), c(7, 2);
    for (int i = 0; i < 10; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    CHECK(a.counter() == 10);
}

TEST_CASE("uniform and normal moments") {
    CounterRng r(123, 0);
    const int n = 200000;
    double su = 0, sn = 0, sn2 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        su += u;
    }
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        sn += z;
        sn2 += z * z;
    }
    // Five standard errors.
    CHECK(std::abs(su / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
    CHECK(std::abs(sn / n) < 5 / std::sqrt(n));
    CHECK(std::abs(sn2 / n - 1.0) < 5 * std::sqrt(2.0 / n));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto& rule = quad::gauss_legendre(8);
    double w = 0, x4 = 0, x15 = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        w += rule.weights[i];
        x4 += rule.weights[i] * std::pow(rule.nodes[i], 14);
        x15 += rule.weights[i] * std::pow(rule.nodes[i], 15);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x4 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
    CHECK(std::abs(x15) < 1e-15);
}

TEST_CASE("adaptive quadrature") {
    CHECK(quad::integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-10, 1.0, 1,
                          {1e-12, 1e-10, 60, 32}) ==
          doctest::Approx(2.0 - 2e-5).epsilon(1e-9));
    CHECK_THROWS_AS(quad::integrate([](double x) { return std::sin(1.0 / x); }, 1e-12, 1.0, 1,
                                    {1e-15, 1e-15, 3, 8}),
                    ConvergenceError);
}

TEST_CASE("step weights reproduce the exact linear-forcing solution") {
    // a' = -lambda a + f, f linear from f0 to f1, solved in closed form:
    // particular part B + C s with C = slope/lambda, B = (f0 - C)/lambda.
    for (double lambda : {1e-9, 0.3, 4.0, 250.0}) {
        const double h = 0.05, a0 = 0.7, f0 = 1.3, f1 = -0.4;
        const double slope = (f1 - f0) / h;
        const double C = slope / lambda, B = (f0 - C) / lambda;
        const double exact = (a0 - B) * std::exp(-lambda * h) + B + C * h;
        const auto w = expint::step_weights(lambda, h);
        const double got = w.decay * a0 + w.w0 * f0 + w.w1 * f1;
        if (lambda > 1e-3) CHECK(got == doctest::Approx(exact).epsilon(1e-12));
        else CHECK(got == doctest::Approx(a0 + h * 0.5 * (f0 + f1)).epsilon(1e-9));
    }
}

TEST_CASE("signal norms are exact for the linear interpolant") {
    const TimeSignal u = sampled_signal(2.0, 4, [](double t) { return t - 1.0; });
    CHECK(l1_norm(u) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l2_norm(u) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(u.at(0.25) == doctest::Approx(-0.75));
    CHECK(u.at(3.0) == 0.0);
    const TimeSignal r = refine(u, 16);
    CHECK(l2_norm(r) == doctest::Approx(l2_norm(u)).epsilon(1e-14));
    CHECK(l1_norm(bump_signal(1.0, 4096, 0.25, 0.125)) == doctest::Approx(1.0).epsilon(1e-6));
    CounterRng rng(1, 1);
    CHECK(l2_norm(band_limited_signal(rng, 1.0, 500, 6)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_zero(constant_signal(1.0, 3, 0.0)));
}
