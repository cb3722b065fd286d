// Closed forms of the frequency multiplier against their integral definitions.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/multiplier.hpp"

using namespace burgers;
using namespace burgers::multiplier;
using std::numbers::pi;

TEST_CASE("lambda1 solves lambda^2 = i z - (k pi)^2 / 2") {
    for (int k : {1, 2, 7}) {
        for (double z : {-40.0, 0.0, 0.3, 900.0}) {
            const auto l = lambda1(k, z);
            const auto res = l * l - std::complex<double>(-0.5 * std::pow(k * pi, 2), z);
            CHECK(std::abs(res) <= 1e-12 * std::hypot(std::pow(k * pi, 2), z));
            CHECK(l.real() >= 0.0);
        }
    }
}

TEST_CASE("P, Q and Theta match their definitions") {
    for (int k : {2, 4, 6}) {
        for (double z : {-25.0, -1.0, 0.0, 2.5, 40.0}) {
            CHECK(theta_closed(k, z) == doctest::Approx(theta_quadrature(k, z)).epsilon(1e-10).scale(1.0));
            if (z < 0) continue;
            CHECK(pk(k, z) == doctest::Approx(pk_definition(k, z)).epsilon(1e-10).scale(1.0));
            CHECK(qk(k, z) == doctest::Approx(qk_definition(k, z)).epsilon(1e-10).scale(1.0));
            CHECK(pk(k, z) >= pk_lower_bound(k, z) * (1 - 1e-12));
        }
    }
}

TEST_CASE("the five parts sum to Theta") {
    for (double z : {0.0, 3.0, 60.0}) {
        const auto I = i_decomposition(4, z);
        const auto Q = i_quadrature(4, z);
        double s = 0;
        for (int i = 0; i < 5; ++i) {
            s += I[i];
            CHECK(I[i] == doctest::Approx(Q[i]).epsilon(1e-9).scale(1.0));
        }
        CHECK(s == doctest::Approx(theta_closed(4, z)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Omega is even in z, negative for k = 2 and decays like -sqrt2 z^{-5/2}") {
    CHECK(omega(2, 7.0) == doctest::Approx(omega(2, -7.0)).epsilon(1e-14));
    const auto s = sign_scan(2, default_scan_range(2), 2001);
    CHECK(s.negative_everywhere);
    const double z = 1e6;
    CHECK(std::pow(z, 2.5) * omega(2, z) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-3));
    CHECK(asymptotic_deficit(2, 1e4) == doctest::Approx(std::pow(1e4, 2.5) * omega(2, 1e4) + std::sqrt(2.0)));
}

TEST_CASE("sign threshold and guards") {
    CHECK(sign_threshold(2) == doctest::Approx(3 * std::pow(2 * pi, 2) / (2 * std::sqrt(7.0))));
    CHECK_THROWS_WITH_AS(omega(3, 1.0), "closed form requires even k", GuardError);
    const auto smp = sample(2, 5.0);
    CHECK(smp.Omega == doctest::Approx(omega(2, 5.0)));
    CHECK(smp.Theta == doctest::Approx(theta_closed(2, 5.0)));
}

TEST_CASE("deficit fit recovers a 1/z decay") {
    const auto fit = fit_deficit(2, 1e3, 1e6, 13);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.05));
    CHECK(fit.z.size() == 13);
}

TEST_CASE("deficit of Omega_2 falls tenfold per decade") {
    const double r = asymptotic_deficit(2, 1e4) / asymptotic_deficit(2, 1e5);
    CHECK(r > 5.0);
    CHECK(r < 20.0);
    CHECK(std::abs(asymptotic_deficit(2, 1e6)) <= 1e-4);
}
