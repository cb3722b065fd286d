// Sine transforms, norms and the cosine-moment product rule.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/quadrature.hpp"
#include "burgers_lab/spectral_core.hpp"

using namespace burgers;
using namespace burgers::spectral;
using std::numbers::pi;

namespace {
ModalField sample_field(int K) {
    ModalField f(K);
    for (int k = 1; k <= K; ++k) f[k] = std::cos(1.7 * k) / k;
    return f;
}
}  // namespace

TEST_CASE("synthesis matches the direct sine sum") {
    const ModalField f = sample_field(9);
    SineGrid grid(31);
    const auto v = grid.synthesize(f.coeffs);
    const auto d = grid.synthesize_derivative(f.coeffs);
    for (int j = 1; j <= 31; j += 5) {
        const double x = grid.x(j);
        double s = 0, ds = 0;
        for (int k = 1; k <= 9; ++k) {
            s += f[k] * std::sqrt(2.0) * std::sin(k * pi * x);
            ds += f[k] * std::sqrt(2.0) * k * pi * std::cos(k * pi * x);
        }
        CHECK(v[j - 1] == doctest::Approx(s).epsilon(1e-13));
        CHECK(d[j - 1] == doctest::Approx(ds).epsilon(1e-12));
    }
}

TEST_CASE("analysis inverts synthesis below the grid size") {
    const ModalField f = sample_field(12);
    const ModalField g = sine_analysis(sine_synthesis(f, 63), 12);
    for (int k = 1; k <= 12; ++k) CHECK(g[k] == doctest::Approx(f[k]).epsilon(1e-13));
}

TEST_CASE("norms follow Parseval") {
    const ModalField f = sample_field(6);
    double l2 = 0, h1 = 0;
    for (int k = 1; k <= 6; ++k) {
        l2 += f[k] * f[k];
        h1 += std::pow(k * pi * f[k], 2);
    }
    CHECK(l2_norm(f) == doctest::Approx(std::sqrt(l2)));
    CHECK(h1_seminorm(f) == doctest::Approx(std::sqrt(h1)));
    CHECK(l2_norm(unit_mode(5, 3, -2.5)) == doctest::Approx(2.5));
}

TEST_CASE("cosine moment: product rule against quadrature") {
    const ModalField f = sample_field(7);
    auto y = [&](double x) {
        double s = 0;
        for (int k = 1; k <= 7; ++k) s += f[k] * std::sqrt(2.0) * std::sin(k * pi * x);
        return s;
    };
    SineGrid grid(64);
    for (int k : {1, 2, 5, 10}) {
        const double ref = quad::integrate([&](double x) { return y(x) * y(x) * std::cos(k * pi * x); },
                                           0.0, 1.0, 8);
        CHECK(cos_moment_modal(f, k) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
        CHECK(cos_moment_grid(grid, f, k) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("weight functions and their guard") {
    // phi_{k,x} is the x-derivative of phi_k.
    const double h = 1e-6;
    const double fd = (phi_k_eval(2, 0.1, 0.3 + h) - phi_k_eval(2, 0.1, 0.3 - h)) / (2 * h);
    CHECK(phi_k_x_eval(2, 0.1, 0.3) == doctest::Approx(fd).epsilon(1e-7));
    CHECK_THROWS_AS(check_weight_exponent(30, 1.0), GuardError);
    CHECK_NOTHROW(check_weight_exponent(2, 1.0));
}

TEST_CASE("trajectory norms of a pure decaying mode") {
    // y = e^{-t} e_1 sampled finely: |y|_{L2L2}^2 = (1 - e^{-2T}) / 2.
    Trajectory tr = zero_trajectory(1.0, 2000, 3);
    for (int j = 0; j <= 2000; ++j) tr.fields[j][1] = std::exp(-tr.time(j));
    CHECK(l2l2_norm(tr) == doctest::Approx(std::sqrt((1 - std::exp(-2.0)) / 2)).epsilon(1e-6));
    // Full H1 norm: L2 part plus the gradient part.
    CHECK(l2h1_norm(tr) == doctest::Approx(std::sqrt((1 + pi * pi) * (1 - std::exp(-2.0)) / 2)).epsilon(1e-6));
    CHECK(yt_norm(tr) == doctest::Approx(1.0 + l2h1_norm(tr)));
}
