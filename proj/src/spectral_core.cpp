#include "burgers_lab/spectral_core.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "burgers_lab/errors.hpp"
#include "burgers_lab/expint.hpp"

namespace burgers::spectral {

using std::numbers::pi;
using std::numbers::sqrt2;

ModalField unit_mode(int K, int k, double amplitude) {
    ModalField f(K);
    f[k] = amplitude;
    return f;
}

Trajectory zero_trajectory(double T, int n_t, int K) {
    return Trajectory{T, std::vector<ModalField>(n_t + 1, ModalField(K))};
}

struct SineGrid::Plans {
    double* sin_in = nullptr;
    double* sin_out = nullptr;
    double* cos_in = nullptr;
    double* cos_out = nullptr;
    fftw_plan sine = nullptr;
    fftw_plan cosine = nullptr;
};

SineGrid::SineGrid(int n) : n_(n), plans_(std::make_unique<Plans>()) {
    if (n < 1) throw GuardError("grid size must be positive");
    Plans& p = *plans_;
    p.sin_in = fftw_alloc_real(n);
    p.sin_out = fftw_alloc_real(n);
    p.cos_in = fftw_alloc_real(n + 2);
    p.cos_out = fftw_alloc_real(n + 2);
    p.sine = fftw_plan_r2r_1d(n, p.sin_in, p.sin_out, FFTW_RODFT00, FFTW_ESTIMATE);
    p.cosine = fftw_plan_r2r_1d(n + 2, p.cos_in, p.cos_out, FFTW_REDFT00, FFTW_ESTIMATE);
}

SineGrid::~SineGrid() {
    Plans& p = *plans_;
    fftw_destroy_plan(p.sine);
    fftw_destroy_plan(p.cosine);
    fftw_free(p.sin_in);
    fftw_free(p.sin_out);
    fftw_free(p.cos_in);
    fftw_free(p.cos_out);
}

std::vector<double> SineGrid::synthesize(const std::vector<double>& coeffs) {
    const int K = static_cast<int>(coeffs.size());
    if (K > n_) throw GuardError("synthesis needs at least K grid points");
    Plans& p = *plans_;
    std::fill(p.sin_in, p.sin_in + n_, 0.0);
    std::copy(coeffs.begin(), coeffs.end(), p.sin_in);
    fftw_execute(p.sine);
    std::vector<double> values(n_);
    for (int j = 0; j < n_; ++j) values[j] = p.sin_out[j] * (sqrt2 / 2.0);
    return values;
}

std::vector<double> SineGrid::synthesize_derivative(const std::vector<double>& coeffs) {
    const int K = static_cast<int>(coeffs.size());
    if (K > n_) throw GuardError("synthesis needs at least K grid points");
    Plans& p = *plans_;
    std::fill(p.cos_in, p.cos_in + n_ + 2, 0.0);
    for (int k = 1; k <= K; ++k) p.cos_in[k] = coeffs[k - 1] * sqrt2 * k * pi / 2.0;
    fftw_execute(p.cosine);
    return std::vector<double>(p.cos_out + 1, p.cos_out + n_ + 1);
}

std::vector<double> SineGrid::analyze(const std::vector<double>& values, int K) {
    if (static_cast<int>(values.size()) != n_) throw GuardError("grid size mismatch");
    if (K > n_) throw GuardError("analysis order exceeds grid size");
    Plans& p = *plans_;
    std::copy(values.begin(), values.end(), p.sin_in);
    fftw_execute(p.sine);
    std::vector<double> coeffs(K);
    const double scale = sqrt2 / (2.0 * (n_ + 1));
    for (int k = 0; k < K; ++k) coeffs[k] = p.sin_out[k] * scale;
    return coeffs;
}

GridFunction sine_synthesis(const ModalField& field, int n) {
    if (n < 2 * field.K()) {
        throw GuardError("aliasing: synthesis grid n=" + std::to_string(n) + " < 2K=" +
                         std::to_string(2 * field.K()));
    }
    SineGrid grid(n);
    return GridFunction{grid.synthesize(field.coeffs)};
}

ModalField sine_analysis(const GridFunction& g, int K) {
    if (2 * K > g.n()) {
        throw GuardError("aliasing: analysis order K=" + std::to_string(K) + " > n/2");
    }
    for (double v : g.values) {
        if (!std::isfinite(v)) throw GuardError("grid function has non-finite values");
    }
    SineGrid grid(g.n());
    return ModalField(grid.analyze(g.values, K));
}

double l2_norm(const ModalField& field) {
    double acc = 0.0;
    for (double c : field.coeffs) acc += c * c;
    return std::sqrt(acc);
}

double h1_seminorm(const ModalField& field) {
    double acc = 0.0;
    for (int k = 1; k <= field.K(); ++k) {
        const double w = k * pi * field[k];
        acc += w * w;
    }
    return std::sqrt(acc);
}

namespace {

template <class F>
double trapezoid_in_time(const Trajectory& traj, F&& integrand) {
    const int n_t = traj.n_t();
    if (n_t < 1) return 0.0;
    double acc = 0.0;
    for (int j = 0; j <= n_t; ++j) {
        const double w = (j == 0 || j == n_t) ? 0.5 : 1.0;
        acc += w * integrand(traj.fields[j]);
    }
    return acc * traj.dt();
}

}  // namespace

double l2l2_norm(const Trajectory& traj) {
    return std::sqrt(trapezoid_in_time(traj, [](const ModalField& f) {
        const double v = l2_norm(f);
        return v * v;
    }));
}

double l2h1_norm(const Trajectory& traj) {
    return std::sqrt(trapezoid_in_time(traj, [](const ModalField& f) {
        const double a = l2_norm(f);
        const double b = h1_seminorm(f);
        return a * a + b * b;
    }));
}

double yt_norm(const Trajectory& traj) {
    double peak = 0.0;
    for (const auto& f : traj.fields) peak = std::max(peak, l2_norm(f));
    return peak + l2h1_norm(traj);
}

void check_weight_exponent(int k, double t) {
    if (pi * pi * k * k * t > kWeightExponentLimit) {
        throw GuardError("weight overflow; rescale T (exponent " +
                         std::to_string(pi * pi * k * k * t) + " > 700)");
    }
}

double phi_k_eval(int k, double t, double x) {
    if (k < 1) throw GuardError("mode index must be >= 1");
    check_weight_exponent(k, t);
    return std::exp(pi * pi * k * k * t) * std::sin(k * pi * x);
}

double phi_k_x_eval(int k, double t, double x) {
    if (k < 1) throw GuardError("mode index must be >= 1");
    check_weight_exponent(k, t);
    return k * pi * std::exp(pi * pi * k * k * t) * std::cos(k * pi * x);
}

double cos_moment_modal(const ModalField& field, int k) {
    const int K = field.K();
    double acc = 0.0;
    // |a - b| = k contributes twice (a > b and b > a).
    for (int a = k + 1; a <= K; ++a) acc += field[a] * field[a - k];
    // a + b = k
    double minus = 0.0;
    for (int a = 1; a < k && a <= K; ++a) {
        const int b = k - a;
        if (b <= K) minus += field[a] * field[b];
    }
    return acc - 0.5 * minus;
}

double cos_moment_grid(SineGrid& grid, const ModalField& field, int k) {
    const std::vector<double> y = grid.synthesize(field.coeffs);
    const int n = grid.n();
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += y[j - 1] * y[j - 1] * std::cos(k * pi * grid.x(j));
    return acc / (n + 1);
}

double quadratic_phi_pairing(const Trajectory& traj, int k, TimeRule time_rule,
                             SpaceRule space_rule) {
    if (k < 1) throw GuardError("mode index must be >= 1");
    const int n_t = traj.n_t();
    if (n_t < 1) return 0.0;
    check_weight_exponent(k, traj.T);

    std::vector<double> g(n_t + 1);
    if (space_rule == SpaceRule::Grid) {
        SineGrid grid(8 * std::max(traj.K(), 1));
        for (int j = 0; j <= n_t; ++j) g[j] = cos_moment_grid(grid, traj.fields[j], k);
    } else {
        for (int j = 0; j <= n_t; ++j) g[j] = cos_moment_modal(traj.fields[j], k);
    }

    const double lambda = pi * pi * k * k;
    const double h = traj.dt();
    double acc = 0.0;
    if (time_rule == TimeRule::Trapezoid) {
        for (int j = 0; j <= n_t; ++j) {
            const double w = (j == 0 || j == n_t) ? 0.5 : 1.0;
            acc += w * std::exp(lambda * traj.time(j)) * g[j];
        }
        acc *= h;
    } else {
        const auto sw = expint::step_weights(lambda, h);
        for (int j = 0; j < n_t; ++j) {
            acc += std::exp(lambda * traj.time(j + 1)) * (sw.w0 * g[j] + sw.w1 * g[j + 1]);
        }
    }
    return k * pi * acc;
}

}  // namespace burgers::spectral
