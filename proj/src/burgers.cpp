#include "burgers_lab/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <string>

#include "burgers_lab/errors.hpp"
#include "burgers_lab/expint.hpp"
#include "burgers_lab/heat.hpp"

namespace burgers::nonlinear {

using std::numbers::pi;

namespace {

double mode_rate(int k) { return pi * pi * k * k; }

std::vector<double> sample_on_grid(const TimeSignal& u, double T, int n_t) {
    if (std::abs(u.T - T) > 1e-12 * std::max(1.0, T)) throw GuardError("control horizon differs from T");
    std::vector<double> v(n_t + 1);
    for (int j = 0; j <= n_t; ++j) v[j] = u.at(T * j / n_t);
    return v;
}

ModalField add_scaled(const ModalField& a, const ModalField& b, double s) {
    ModalField out = a;
    for (int k = 1; k <= a.K(); ++k) out[k] += s * b[k];
    return out;
}

}  // namespace

void validate(const BurgersConfig& cfg) {
    if (cfg.K < 4) throw GuardError("K must be >= 4");
    if (cfg.n_t < 10) throw GuardError("n_t must be >= 10");
    if (!(cfg.T > 0.0)) throw GuardError("T must be positive");
    if (cfg.dealias < 2) throw GuardError("dealias factor must be >= 2");
}

ProductEvaluator::ProductEvaluator(int K, int dealias) : K_(K), grid_(dealias * K) {}

ModalField ProductEvaluator::operator()(const ModalField& y) {
    return ModalField(heat::product_source(grid_, y, K_));
}

Trajectory burgers_solve(const TimeSignal& u, const ModalField& y0, const BurgersConfig& cfg,
                         const ModalSource& source) {
    validate(cfg);
    const int K = cfg.K;
    const int n_t = cfg.n_t;
    if (y0.K() > K) throw GuardError("initial datum has more modes than K");
    const std::vector<double> uj = sample_on_grid(u, cfg.T, n_t);

    Trajectory traj = spectral::zero_trajectory(cfg.T, n_t, K);
    for (int k = 1; k <= y0.K(); ++k) traj.fields[0][k] = y0[k];
    const double h = traj.dt();

    std::vector<expint::StepWeights> w(K);
    std::vector<double> omega(K), hphi1(K), hphi2(K);
    for (int k = 1; k <= K; ++k) {
        const double x = mode_rate(k) * h;
        w[k - 1] = expint::step_weights(mode_rate(k), h);
        omega[k - 1] = heat::omega_coefficient(k);
        hphi1[k - 1] = h * expint::phi1(x);
        hphi2[k - 1] = h * expint::phi2(x);
    }

    ProductEvaluator product(K, cfg.dealias);
    auto rhs = [&](const ModalField& a) {
        ModalField n(K);
        if (!cfg.nonlinear) return n;
        const ModalField p = product(a);
        for (int k = 1; k <= K; ++k) n[k] = -p[k];
        return n;
    };

    ModalField s_prev = source ? source(0.0) : ModalField(K);
    for (int j = 0; j < n_t; ++j) {
        const ModalField& a = traj.fields[j];
        const ModalField s_next = source ? source(traj.time(j + 1)) : ModalField(K);
        const ModalField n0 = rhs(a);
        ModalField next(K);
        for (int k = 1; k <= K; ++k) {
            const auto& sw = w[k - 1];
            const double g0 = omega[k - 1] * uj[j] + (k <= s_prev.K() ? s_prev[k] : 0.0);
            const double g1 = omega[k - 1] * uj[j + 1] + (k <= s_next.K() ? s_next[k] : 0.0);
            next[k] = sw.decay * a[k] + sw.w0 * g0 + sw.w1 * g1 + hphi1[k - 1] * n0[k];
        }
        if (cfg.scheme == Scheme::IMEX2 && cfg.nonlinear) {
            const ModalField n1 = rhs(next);
            for (int k = 1; k <= K; ++k) next[k] += hphi2[k - 1] * (n1[k] - n0[k]);
        }
        const double norm = spectral::l2_norm(next);
        if (!std::isfinite(norm) || norm > cfg.blowup_threshold) {
            throw BlowUpError("blow-up suspected at t=" + std::to_string(traj.time(j + 1)) +
                                  " (L2 norm " + std::to_string(norm) + ")",
                              traj.time(j + 1));
        }
        traj.fields[j + 1] = std::move(next);
        s_prev = s_next;
    }
    return traj;
}

ModalField mms_exact(double t, int K) {
    ModalField y(K);
    y[1] = std::exp(-t);
    y[2] = 0.1 * std::exp(-2.0 * t);
    return y;
}

ModalField mms_source(double t, int K) {
    // Cached per K; the evaluator owns FFTW plans.
    thread_local std::map<int, std::unique_ptr<ProductEvaluator>> cache;
    auto& eval = cache[K];
    if (!eval) eval = std::make_unique<ProductEvaluator>(K, 4);
    const ModalField y = mms_exact(t, K);
    ModalField f = (*eval)(y);
    // y_t - y_xx for the two modes
    f[1] += (-1.0 + mode_rate(1)) * y[1];
    f[2] += (-2.0 + mode_rate(2)) * y[2];
    return f;
}

MmsStudy mms_convergence(const BurgersConfig& base, const std::vector<int>& n_t_levels) {
    MmsStudy study;
    const TimeSignal zero = constant_signal(base.T, 1, 0.0);
    for (int n : n_t_levels) {
        BurgersConfig cfg = base;
        cfg.n_t = n;
        const Trajectory traj = burgers_solve(zero, mms_exact(0.0, cfg.K), cfg,
                                              [&](double t) { return mms_source(t, cfg.K); });
        const ModalField exact = mms_exact(cfg.T, cfg.K);
        study.n_t.push_back(n);
        study.errors.push_back(spectral::l2_norm(add_scaled(traj.fields.back(), exact, -1.0)));
    }
    for (std::size_t i = 1; i < study.errors.size(); ++i) {
        const double ratio = study.errors[i - 1] / study.errors[i];
        const double refine = static_cast<double>(study.n_t[i]) / study.n_t[i - 1];
        study.orders.push_back(std::log(ratio) / std::log(refine));
    }
    if (!study.orders.empty()) study.observed_order = study.orders.back();
    return study;
}

double weak_residual(const Trajectory& traj, const TimeSignal& u, int k_test, int n_test_times,
                     bool nonlinear, int dealias) {
    const int n_t = traj.n_t();
    const int K = traj.K();
    if (n_t < 1 || K < 1) return 0.0;
    k_test = std::min(k_test, K);
    n_test_times = std::max(1, std::min(n_test_times, n_t));
    const std::vector<double> uj = sample_on_grid(u, traj.T, n_t);

    std::vector<ModalField> prod;
    if (nonlinear) {
        ProductEvaluator product(K, dealias);
        prod.reserve(n_t + 1);
        for (const auto& f : traj.fields) prod.push_back(product(f));
    }

    std::vector<int> taus;
    for (int i = 1; i <= n_test_times; ++i) taus.push_back(static_cast<int>(std::lround(static_cast<double>(i) * n_t / n_test_times)));

    const double h = traj.dt();
    double worst = 0.0;
    for (int k = 1; k <= k_test; ++k) {
        const auto sw = expint::step_weights(mode_rate(k), h);
        const double omega = heat::omega_coefficient(k);
        auto g = [&](int j) { return omega * uj[j] - (nonlinear ? prod[j][k] : 0.0); };
        // R_j = e^{-lambda t_j} a_k(0) + int_0^{t_j} e^{-lambda (t_j - t)} g(t) dt
        double R = traj.fields[0][k];
        std::size_t next_tau = 0;
        for (int j = 0; j < n_t && next_tau < taus.size(); ++j) {
            R = sw.decay * R + sw.w0 * g(j) + sw.w1 * g(j + 1);
            if (j + 1 == taus[next_tau]) {
                worst = std::max(worst, std::abs(traj.fields[j + 1][k] - R));
                ++next_tau;
            }
        }
    }
    return worst;
}

double nonlinear_energy_residual(const Trajectory& traj, const TimeSignal& u, int dealias) {
    const int n_t = traj.n_t();
    const int K = traj.K();
    if (n_t < 1 || K < 1) return 0.0;
    const std::vector<double> uj = sample_on_grid(u, traj.T, n_t);
    ProductEvaluator product(K, dealias);
    std::vector<ModalField> prod;
    prod.reserve(n_t + 1);
    for (const auto& f : traj.fields) prod.push_back(product(f));

    const double h = traj.dt();
    double diss = 0.0, work = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double lambda = mode_rate(k);
        const double omega = heat::omega_coefficient(k);
        const heat::ModeStep step(lambda, h);
        for (int j = 0; j < n_t; ++j) {
            const double f0 = omega * uj[j];
            const double f1 = omega * uj[j + 1];
            const double g0 = f0 - prod[j][k];
            const double g1 = f1 - prod[j + 1][k];
            // Only the control does work since int y^2 y_x = 0.
            const auto [sq, cross] = step.integrals(traj.fields[j][k], g0, g1, f0, f1);
            diss += lambda * sq;
            work += cross;
        }
    }
    const double e0 = spectral::l2_norm(traj.fields.front());
    const double e1 = spectral::l2_norm(traj.fields.back());
    return 0.5 * (e1 * e1 - e0 * e0) + diss - work;
}

WellposednessAudit wellposedness_audit(CounterRng& rng, int samples, const BurgersConfig& cfg,
                                       double amp_u, double amp_y) {
    WellposednessAudit audit;
    bool halving_done = false;
    for (int s = 0; s < samples; ++s) {
        TimeSignal u = constant_signal(cfg.T, cfg.n_t, 0.0);
        ModalField y0(cfg.K);
        if (s > 0) {
            u = scaled(band_limited_signal(rng, cfg.T, cfg.n_t, 6), amp_u);
            double norm = 0.0;
            for (int k = 1; k <= cfg.K; ++k) {
                y0[k] = rng.normal() / (k * k);
                norm += y0[k] * y0[k];
            }
            for (int k = 1; k <= cfg.K; ++k) y0[k] *= amp_y / std::sqrt(norm);
        }
        WellposednessEntry e;
        e.data_norm = l1_norm(u) + spectral::l2_norm(y0);
        if (e.data_norm == 0.0) {
            e.skipped = true;
            ++audit.skipped;
            audit.entries.push_back(e);
            continue;
        }
        const Trajectory y = burgers_solve(u, y0, cfg);
        e.yt_norm = spectral::yt_norm(y);
        e.ratio = e.yt_norm / e.data_norm;
        audit.max_ratio = std::max(audit.max_ratio, e.ratio);
        if (!halving_done) {
            ModalField half(cfg.K);
            for (int k = 1; k <= cfg.K; ++k) half[k] = 0.5 * y0[k];
            const Trajectory yh = burgers_solve(scaled(u, 0.5), half, cfg);
            audit.halving_ratio = spectral::yt_norm(yh) / e.yt_norm;
            halving_done = true;
        }
        audit.entries.push_back(e);
    }
    return audit;
}

}  // namespace burgers::nonlinear
