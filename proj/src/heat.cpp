#include "burgers_lab/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "burgers_lab/dual_norms.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/expint.hpp"
#include "burgers_lab/quadrature.hpp"

namespace burgers::heat {

using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

double mode_rate(int k) { return pi * pi * k * k; }

ModalField padded(const ModalField& y0, int K) {
    if (y0.K() > K) throw GuardError("initial datum has more modes than the solve");
    ModalField out(K);
    for (int k = 1; k <= y0.K(); ++k) out[k] = y0[k];
    return out;
}

// Forcing of mode k at step j for a source given as fields or as u(t) omega_k.
template <class Source>
double energy_residual_impl(const Trajectory& traj, Source&& source) {
    const int n_t = traj.n_t();
    const int K = traj.K();
    if (n_t < 1 || K < 1) return 0.0;
    const double h = traj.dt();
    double end_energy = 0.0, start_energy = 0.0, dissipation = 0.0, work = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double lambda = mode_rate(k);
        const ModeStep step(lambda, h);
        start_energy += traj.fields[0][k] * traj.fields[0][k];
        end_energy += traj.fields[n_t][k] * traj.fields[n_t][k];
        for (int j = 0; j < n_t; ++j) {
            const double g0 = source(j, k);
            const double g1 = source(j + 1, k);
            const auto [sq, cross] = step.integrals(traj.fields[j][k], g0, g1);
            dissipation += lambda * sq;
            work += cross;
        }
    }
    return 0.5 * (end_energy - start_energy) + dissipation - work;
}

}  // namespace

ModeStep::ModeStep(double lambda, double h)
    : lambda_(lambda), h_(h), x_(lambda * h), full_(expint::step_weights(lambda, h)) {
    if (x_ < 1.0) {
        const auto& rule = quad::gauss_legendre(8);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double theta = 0.5 * (rule.nodes[i] + 1.0);
            theta_.push_back(theta);
            gw_.push_back(0.5 * rule.weights[i]);
            sub_.push_back(expint::step_weights(lambda, theta * h));
        }
    } else {
        p1_ = expint::phi1(x_);
        p1d_ = expint::phi1(2.0 * x_);
        psi1_ = (1.0 - std::exp(-x_) * (1.0 + x_)) / (x_ * x_);
    }
}

double ModeStep::advance(double a0, double g0, double g1) const {
    return full_.decay * a0 + full_.w0 * g0 + full_.w1 * g1;
}

std::pair<double, double> ModeStep::integrals(double a0, double g0, double g1) const {
    return integrals(a0, g0, g1, g0, g1);
}

std::pair<double, double> ModeStep::integrals(double a0, double g0, double g1, double p0,
                                              double p1) const {
    const double h = h_;
    if (x_ < 1.0) {
        double sq = 0.0, cross = 0.0;
        for (std::size_t i = 0; i < theta_.size(); ++i) {
            const double g = g0 + theta_[i] * (g1 - g0);
            const double a = sub_[i].decay * a0 + sub_[i].w0 * g0 + sub_[i].w1 * g;
            sq += gw_[i] * a * a;
            cross += gw_[i] * a * (p0 + theta_[i] * (p1 - p0));
        }
        return {sq * h, cross * h};
    }
    // a(s) = A e^{-lambda s} + B + C s
    const double G = (g1 - g0) / h;
    const double C = G / lambda_;
    const double B = (g0 - C) / lambda_;
    const double A = a0 - B;
    const double sq = A * A * h * p1d_ + 2.0 * A * (B * h * p1_ + C * h * h * psi1_) +
                      B * B * h + B * C * h * h + C * C * h * h * h / 3.0;
    const double P = (p1 - p0) / h;
    const double cross = A * (p0 * h * p1_ + P * h * h * psi1_) + B * p0 * h +
                         (B * P + C * p0) * h * h / 2.0 + C * P * h * h * h / 3.0;
    return {sq, cross};
}

double omega_coefficient(int k) {
    if (k < 1) throw GuardError("mode index must be >= 1");
    return (k % 2 == 1) ? 2.0 * sqrt2 / (k * pi) : 0.0;
}

Trajectory heat_modal_solve(const TimeSignal& u, const ModalField& y0, int K, int n_t) {
    if (K < 1) throw GuardError("K must be >= 1");
    if (u.steps() < 1) throw GuardError("control needs at least one step");
    if (n_t == 0) n_t = u.steps();
    if (n_t % u.steps() != 0) throw GuardError("n_t must be a multiple of the control steps");
    const TimeSignal v = n_t == u.steps() ? u : refine(u, n_t);

    Trajectory traj = spectral::zero_trajectory(u.T, n_t, K);
    traj.fields[0] = padded(y0, K);
    const double h = traj.dt();
    for (int k = 1; k <= K; ++k) {
        const double w = omega_coefficient(k);
        const auto sw = expint::step_weights(mode_rate(k), h);
        double a = traj.fields[0][k];
        for (int j = 0; j < n_t; ++j) {
            a = sw.decay * a + w * (sw.w0 * v.samples[j] + sw.w1 * v.samples[j + 1]);
            traj.fields[j + 1][k] = a;
        }
    }
    return traj;
}

Trajectory heat_forced_solve(const std::vector<ModalField>& f, const ModalField& y0, double T) {
    if (f.size() < 2) throw GuardError("source needs at least two time samples");
    const int n_t = static_cast<int>(f.size()) - 1;
    const int K = f[0].K();
    Trajectory traj = spectral::zero_trajectory(T, n_t, K);
    traj.fields[0] = padded(y0, K);
    const double h = traj.dt();
    for (int k = 1; k <= K; ++k) {
        const auto sw = expint::step_weights(mode_rate(k), h);
        double a = traj.fields[0][k];
        for (int j = 0; j < n_t; ++j) {
            a = sw.decay * a + sw.w0 * f[j][k] + sw.w1 * f[j + 1][k];
            traj.fields[j + 1][k] = a;
        }
    }
    return traj;
}

std::vector<double> product_source(spectral::SineGrid& grid, const ModalField& y, int K_out) {
    const std::vector<double> v = grid.synthesize(y.coeffs);
    const std::vector<double> d = grid.synthesize_derivative(y.coeffs);
    std::vector<double> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] * d[i];
    return grid.analyze(p, K_out);
}

Trajectory second_order_solve(const Trajectory& y1, int K_out, int n_grid) {
    const int K = y1.K();
    if (K_out == 0) K_out = 2 * K;
    if (n_grid == 0) n_grid = 8 * K;
    if (n_grid < 4 * K) {
        throw GuardError("aliasing: product grid n=" + std::to_string(n_grid) + " < 4K=" +
                         std::to_string(4 * K));
    }
    if (2 * K_out > n_grid) throw GuardError("aliasing: output order exceeds n/2");
    spectral::SineGrid grid(n_grid);
    std::vector<ModalField> source;
    source.reserve(y1.fields.size());
    for (const auto& field : y1.fields) {
        std::vector<double> s = product_source(grid, field, K_out);
        for (double& v : s) v = -v;
        source.emplace_back(std::move(s));
    }
    return heat_forced_solve(source, ModalField(K_out), y1.T);
}

TimeSignal primitive_U(const TimeSignal& u) {
    TimeSignal U{u.T, std::vector<double>(u.samples.size(), 0.0)};
    const double h = u.dt();
    for (int j = 0; j < u.steps(); ++j) {
        U.samples[j + 1] = U.samples[j] + 0.5 * h * (u.samples[j] + u.samples[j + 1]);
    }
    return U;
}

double exp_moment(const TimeSignal& u, double lambda) {
    if (lambda * u.T > spectral::kWeightExponentLimit) {
        throw GuardError("weight overflow; rescale T (exponent " + std::to_string(lambda * u.T) +
                         " > 700)");
    }
    const auto sw = expint::step_weights(lambda, u.dt());
    double acc = 0.0;
    for (int j = 0; j < u.steps(); ++j) {
        acc += std::exp(lambda * u.time(j + 1)) * (sw.w0 * u.samples[j] + sw.w1 * u.samples[j + 1]);
    }
    return acc;
}

KernelBatch spectral_kernel(double gamma, const TimeSignal& V, int K) {
    if (!(gamma > -0.5 && gamma < 1.5)) throw GuardError("gamma must lie in (-1/2, 3/2)");
    if (K < 1) throw GuardError("K must be >= 1");
    KernelBatch out;
    out.gamma = gamma;
    out.K = K;
    out.T = V.T;
    const int n = V.steps();
    const double h = V.dt();
    out.a.assign(K, std::vector<double>(n + 1, 0.0));
    out.mode_integrals.assign(K, 0.0);
    for (int k = 1; k <= K; ++k) {
        const double lambda = mode_rate(k);
        const double c = std::pow(static_cast<double>(k), gamma);
        const ModeStep step(lambda, h);
        auto& a = out.a[k - 1];
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double g0 = c * V.samples[j];
            const double g1 = c * V.samples[j + 1];
            acc += step.integrals(a[j], g0, g1).first;
            a[j + 1] = step.advance(a[j], g0, g1);
        }
        acc += a[n] * a[n] / (2.0 * lambda);
        out.mode_integrals[k - 1] = acc;
        out.integral_sum += acc;
    }
    return out;
}

double g_gamma_hat(double gamma, double xi, int K_trunc) {
    if (!(gamma > -0.5 && gamma < 1.5)) throw GuardError("gamma must lie in (-1/2, 3/2)");
    const double pi4 = pi * pi * pi * pi;
    const double xi2 = xi * xi;
    auto term = [&](double k) { return std::pow(k, 2.0 * gamma) / (pi4 * k * k * k * k + xi2); };
    const double prefactor = sqrt2 * std::pow(pi, 1.5);
    const int N = K_trunc > 0 ? K_trunc
                              : std::max(1000, static_cast<int>(std::ceil(10.0 * std::sqrt(std::abs(xi)) / pi)));
    double sum = 0.0;
    for (int k = N; k >= 1; --k) sum += term(k);
    if (K_trunc > 0) return prefactor * sum;

    // Tail sum over k > N: midpoint Euler-Maclaurin with the first derivative
    // correction; the integral is a convergent series in eps = xi^2 / (pi^4 X^4).
    const double X = N + 0.5;
    const double eps = xi2 / (pi4 * X * X * X * X);
    double series = 0.0, power = 1.0;
    for (int m = 0; m < 30; ++m) {
        series += power / (3.0 - 2.0 * gamma + 4.0 * m);
        power *= -eps;
        if (std::abs(power) < 1e-18) break;
    }
    const double integral = std::pow(X, 2.0 * gamma - 3.0) / pi4 * series;
    const double D = pi4 * std::pow(X, 4) + xi2;
    const double deriv = 2.0 * gamma * std::pow(X, 2.0 * gamma - 1.0) / D -
                         std::pow(X, 2.0 * gamma) * 4.0 * pi4 * X * X * X / (D * D);
    return prefactor * (sum + integral + deriv / 24.0);
}

double energy_residual(const Trajectory& traj, const TimeSignal& u) {
    if (u.steps() != traj.n_t()) throw GuardError("control and trajectory grids differ");
    return energy_residual_impl(traj, [&](int j, int k) {
        return omega_coefficient(k) * u.samples[j];
    });
}

double energy_residual(const Trajectory& traj, const std::vector<ModalField>& f) {
    if (static_cast<int>(f.size()) != traj.n_t() + 1) throw GuardError("source and trajectory grids differ");
    return energy_residual_impl(traj, [&](int j, int k) { return k <= f[j].K() ? f[j][k] : 0.0; });
}

double ipp_linear_gap(const TimeSignal& u, const ModalField& y0, const Trajectory& traj, int k) {
    const double lambda = mode_rate(k);
    spectral::check_weight_exponent(k, traj.T);
    const double y0k = k <= y0.K() ? y0[k] : 0.0;
    const double lhs = std::exp(lambda * traj.T) * traj.fields.back()[k];
    const double forced = omega_coefficient(k) * exp_moment(u, lambda);
    const double scale = std::max({std::abs(lhs), std::abs(y0k), std::abs(forced)});
    return scale > 0.0 ? (lhs - y0k - forced) / scale : 0.0;
}

HeatAudit estimate_audit_heat(const std::vector<TimeSignal>& samples, int K) {
    HeatAudit audit;
    double max_h1 = 0.0, min_h1 = std::numeric_limits<double>::infinity();
    double max_l2 = 0.0, min_l2 = std::numeric_limits<double>::infinity();
    for (const auto& u : samples) {
        HeatAuditEntry e;
        if (is_zero(u)) {
            e.skipped = true;
            ++audit.skipped;
            audit.entries.push_back(e);
            continue;
        }
        const Trajectory y = heat_modal_solve(u, ModalField(K), K);
        const TimeSignal U = primitive_U(u);
        const auto norms = norms::dual_sobolev_norms(u, {0.75, 1.25});

        // |y - U|^2 = sum_k (a_k - omega_k U)^2 over all k; the modes beyond K
        // contribute omega_k^2 U^2, which the U^2 term carries.
        const int n = y.n_t();
        double acc = 0.0;
        for (int j = 0; j <= n; ++j) {
            double aa = 0.0, aw = 0.0;
            for (int k = 1; k <= K; ++k) {
                aa += y.fields[j][k] * y.fields[j][k];
                aw += omega_coefficient(k) * y.fields[j][k];
            }
            const double Uj = U.samples[j];
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            acc += w * (aa - 2.0 * Uj * aw + Uj * Uj);
        }
        const double diff = std::sqrt(std::max(acc * y.dt(), 0.0));

        e.ratio_h1 = spectral::l2h1_norm(y) / norms[0];
        e.ratio_l2 = diff / norms[1];
        max_h1 = std::max(max_h1, e.ratio_h1);
        min_h1 = std::min(min_h1, e.ratio_h1);
        max_l2 = std::max(max_l2, e.ratio_l2);
        min_l2 = std::min(min_l2, e.ratio_l2);
        audit.entries.push_back(e);
    }
    if (audit.skipped < static_cast<int>(samples.size())) {
        audit.max_h1 = max_h1;
        audit.min_h1 = min_h1;
        audit.max_l2 = max_l2;
        audit.min_l2 = min_l2;
        audit.spread_h1 = max_h1 / min_h1;
        audit.spread_l2 = max_l2 / min_l2;
    }
    return audit;
}

SourceAudit audit_fx_l1(CounterRng& rng, int samples, double T, int n_t, int K) {
    SourceAudit out;
    const int M = 6;           // cosine modes of h(x)
    const int n_x = 4096;      // grid for int |h|
    for (int s = 0; s < samples; ++s) {
        std::vector<double> b(M + 1);
        for (int m = 0; m <= M; ++m) b[m] = rng.normal() / (1.0 + m);
        const double width = T / 2.0 * (0.25 + 0.75 * rng.uniform());
        const double start = (T / 2.0 - width) * rng.uniform();
        const TimeSignal g = bump_signal(T, n_t, start, width);

        double h_l1 = 0.0;
        for (int i = 0; i <= n_x; ++i) {
            const double x = static_cast<double>(i) / n_x;
            double v = 0.0;
            for (int m = 0; m <= M; ++m) v += b[m] * std::cos(m * pi * x);
            h_l1 += ((i == 0 || i == n_x) ? 0.5 : 1.0) * std::abs(v);
        }
        h_l1 /= n_x;

        // (f_x)_k = -sqrt(2) k pi int f cos(k pi x) = -sqrt(2) k pi g(t) b_k / 2
        std::vector<ModalField> f(n_t + 1, ModalField(K));
        for (int j = 0; j <= n_t; ++j) {
            for (int k = 1; k <= std::min(K, M); ++k) {
                f[j][k] = -sqrt2 * k * pi * g.samples[j] * b[k] / 2.0;
            }
        }
        const Trajectory y = heat_forced_solve(f, ModalField(K), T);
        const double ratio = spectral::l2_norm(y.fields.back()) / (l1_norm(g) * h_l1);
        out.ratios.push_back(ratio);
        out.max_ratio = std::max(out.max_ratio, ratio);
    }
    return out;
}

SourceAudit audit_dual_source(CounterRng& rng, int samples, double T, int n_t, int K) {
    SourceAudit out;
    for (int s = 0; s < samples; ++s) {
        std::vector<double> amp(K);
        for (int k = 1; k <= K; ++k) amp[k - 1] = rng.normal() / k;
        const TimeSignal g = band_limited_signal(rng, T, n_t, 4);
        std::vector<ModalField> f(n_t + 1, ModalField(K));
        double dual = 0.0;
        for (int j = 0; j <= n_t; ++j) {
            double acc = 0.0;
            for (int k = 1; k <= K; ++k) {
                f[j][k] = g.samples[j] * amp[k - 1];
                acc += f[j][k] * f[j][k] / (mode_rate(k));
            }
            dual += ((j == 0 || j == n_t) ? 0.5 : 1.0) * std::sqrt(acc);
        }
        dual *= T / n_t;
        const Trajectory y = heat_forced_solve(f, ModalField(K), T);
        const double ratio = spectral::l2l2_norm(y) / dual;
        out.ratios.push_back(ratio);
        out.max_ratio = std::max(out.max_ratio, ratio);
    }
    return out;
}

}  // namespace burgers::heat
