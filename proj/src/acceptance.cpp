#include "burgers_lab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "burgers_lab/burgers.hpp"
#include "burgers_lab/control.hpp"
#include "burgers_lab/dual_norms.hpp"
#include "burgers_lab/heat.hpp"
#include "burgers_lab/multiplier.hpp"
#include "burgers_lab/obstruction.hpp"
#include "burgers_lab/rng.hpp"
#include "burgers_lab/signals.hpp"

namespace burgers::acceptance {

using std::numbers::pi;
using std::numbers::sqrt2;
using report::ExperimentReport;

namespace {

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

struct Builder {
    CriterionResult r;
    Builder(int id, const std::string& title, std::uint64_t seed) {
        r.id = id;
        r.title = title;
        r.report.name = "criterion_" + std::to_string(id);
        r.report.seed = seed;
        r.report.meta("title", title);
    }
    void detail(const std::string& key, double v) {
        if (!r.detail.empty()) r.detail += " ";
        r.detail += key + "=" + fmt("%.3g", v);
    }
    CriterionResult finish() {
        r.passed = r.report.all_passed() && !r.report.passed.empty();
        return r;
    }
};

// Admissible controls: free band-limited part on [0, 0.5], then return to
// zero on [0.5, 1] for odd modes up to 11.
constexpr double kFree = 0.5;
constexpr double kTotal = 1.0;
constexpr int kFreeSteps = 1000;

// ---------------------------------------------------------------- 1
CriterionResult theta_oracle(std::uint64_t seed) {
    Builder b(1, "closed-form Theta matches quadrature", seed);
    double worst = 0.0;
    std::vector<double> worst_per_k;
    for (int k = 2; k <= 12; k += 2) {
        double wk = 0.0;
        for (int i = 0; i < 241; ++i) {
            const double z = -60.0 + 0.5 * i;
            const double q = multiplier::theta_quadrature(k, z);
            const double c = multiplier::theta_closed(k, z);
            wk = std::max(wk, std::abs(c - q) / (1.0 + std::abs(q)));
        }
        worst_per_k.push_back(wk);
        worst = std::max(worst, wk);
    }
    b.r.report.param("z_min", -60.0);
    b.r.report.param("z_max", 60.0);
    b.r.report.param("points", 241);
    b.r.report.add_series("worst_scaled_error_k2_to_k12", worst_per_k);
    b.r.report.scalar("worst_scaled_error", worst, "closed form of Theta against its defining integral");
    b.r.report.check("error_le_1e-8", worst <= 1e-8);
    b.detail("worst", worst);
    return b.finish();
}

// ---------------------------------------------------------------- 2
CriterionResult lambda_identities(std::uint64_t seed) {
    Builder b(2, "Lambda identities on random (k, z)", seed);
    CounterRng rng(seed, 2);
    double e_prod = 0.0, e_re = 0.0, e_im = 0.0, e_conj = 0.0, e_sq = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const int k = 1 + static_cast<int>(rng.uniform() * 20.0);
        const double mag = std::pow(10.0, -2.0 + 6.0 * rng.uniform());
        const double z = (rng.uniform() < 0.5 ? -1.0 : 1.0) * mag;
        const auto l = multiplier::lambda1(k, z);
        const double c = (k * pi) * (k * pi);
        const double rhs = 2.0 * std::sqrt(z * z + 0.25 * c * c);
        const double re = l.real(), im = l.imag();
        e_prod = std::max(e_prod, std::abs(re * im - 0.5 * z) / std::max(1.0, std::abs(z)));
        e_re = std::max(e_re, std::abs(4.0 * re * re + c - rhs) / rhs);
        e_im = std::max(e_im, std::abs(4.0 * im * im - c - rhs) / rhs);
        const auto lm = multiplier::lambda1(k, -z);
        e_conj = std::max(e_conj, std::abs(lm - std::conj(l)) / std::abs(l));
        const auto target = std::complex<double>(-0.5 * c, z);
        e_sq = std::max(e_sq, std::abs(l * l - target) / std::abs(target));
    }
    auto& rep = b.r.report;
    rep.param("samples", 10000);
    rep.scalar("re_times_im_minus_half_z", e_prod, "Re Lambda * Im Lambda = z / 2");
    rep.scalar("real_part_identity", e_re, "4 Re^2 + (k pi)^2 = 2 sqrt(z^2 + (k pi)^4 / 4)");
    rep.scalar("imag_part_identity", e_im, "4 Im^2 - (k pi)^2 = 2 sqrt(z^2 + (k pi)^4 / 4)");
    rep.scalar("conjugate_symmetry", e_conj, "Lambda(-z) = conj Lambda(z)");
    rep.scalar("square_identity", e_sq, "Lambda^2 = i z - (k pi)^2 / 2");
    for (const auto& s : rep.scalars) rep.check(s.name + "_le_1e-12", s.value <= 1e-12);
    b.detail("max", std::max({e_prod, e_re, e_im, e_conj, e_sq}));
    return b.finish();
}

// ---------------------------------------------------------------- 3
CriterionResult decomposition(std::uint64_t seed) {
    Builder b(3, "Theta decomposition and per-term quadrature", seed);
    double e_sum = 0.0, e_sym = 0.0, e_term = 0.0;
    for (int k = 2; k <= 12; k += 2) {
        for (double z : {0.0, 0.5, 3.0, 10.0, 25.0, 60.0, 150.0}) {
            const auto I = multiplier::i_decomposition(k, z);
            const auto Q = multiplier::i_quadrature(k, z);
            const double theta = multiplier::theta_closed(k, z);
            const double sum = 2.0 * I[0] + I[2] + 2.0 * I[3];
            e_sum = std::max(e_sum, std::abs(sum - theta) / std::max(std::abs(theta), 1e-300));
            e_sym = std::max({e_sym, std::abs(I[0] - I[1]), std::abs(I[3] - I[4])});
            for (int j = 0; j < 5; ++j) {
                e_term = std::max(e_term, std::abs(I[j] - Q[j]) / std::max(1.0, std::abs(Q[j])));
            }
        }
    }
    auto& rep = b.r.report;
    rep.scalar("sum_relative_error", e_sum, "2 I1 + I3 + 2 I4 = Theta");
    rep.scalar("pair_symmetry", e_sym, "I1 = I2 and I4 = I5");
    rep.scalar("term_vs_quadrature", e_term, "each I_j against its defining integral");
    rep.check("sum_le_1e-10", e_sum <= 1e-10);
    rep.check("pairs_equal", e_sym == 0.0);
    rep.check("terms_le_1e-9", e_term <= 1e-9);
    b.detail("sum", e_sum);
    b.detail("term", e_term);
    return b.finish();
}

// ---------------------------------------------------------------- 4
CriterionResult sign_scans(std::uint64_t seed) {
    Builder b(4, "sign of Omega_k on scan grids", seed);
    auto& rep = b.r.report;
    const auto s2 = multiplier::sign_scan(2, 200.0, 8001);
    const auto s10 = multiplier::sign_scan(10, 2000.0, 8001);
    rep.scalar("max_omega_k2", s2.max_omega, "Omega_2 < 0 everywhere");
    rep.scalar("max_omega_k10", s10.max_omega, "Omega_10 < 0 everywhere");
    rep.check("k2_negative_everywhere", s2.negative_everywhere);
    rep.check("k10_negative_everywhere", s10.negative_everywhere);
    std::vector<double> thresholds, max_beyond;
    for (int k = 2; k <= 20; k += 2) {
        const auto s = multiplier::sign_scan(k, multiplier::default_scan_range(k), 8001);
        double mb = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s.z.size(); ++i) {
            if (std::abs(s.z[i]) > s.threshold) mb = std::max(mb, s.omega[i]);
        }
        thresholds.push_back(s.threshold);
        max_beyond.push_back(mb);
        rep.check("k" + std::to_string(k) + "_negative_beyond_threshold", s.negative_beyond_threshold);
    }
    rep.scalar("threshold_k2", multiplier::sign_threshold(2), "3 (2 pi)^2 / (2 sqrt 7)");
    rep.add_series("threshold_k2_to_k20", thresholds);
    rep.add_series("max_omega_beyond_threshold_k2_to_k20", max_beyond);
    b.detail("max_k2", s2.max_omega);
    b.detail("max_k10", s10.max_omega);
    return b.finish();
}

// ---------------------------------------------------------------- 5
CriterionResult asymptotics(std::uint64_t seed) {
    Builder b(5, "Omega_2 asymptotics", seed);
    auto& rep = b.r.report;
    const double d = multiplier::asymptotic_deficit(2, 1e4);
    const auto fit = multiplier::fit_deficit(2, 1e3, 1e6, 31);
    rep.scalar("deficit_at_1e4", d, "z^{5/2} Omega_2(z) + sqrt 2 at z = 1e4");
    rep.scalar("loglog_slope", fit.slope, "deficit decays like 1/z");
    rep.scalar("fitted_constant", fit.constant, "C in |deficit| ~ C / z");
    rep.add_series("z", fit.z);
    rep.add_series("deficit", fit.deficit);
    rep.check("deficit_le_1e-2", std::abs(d) <= 1e-2);
    rep.check("slope_in_range", fit.slope >= -1.2 && fit.slope <= -0.8);
    b.detail("deficit", d);
    b.detail("slope", fit.slope);
    return b.finish();
}

// ---------------------------------------------------------------- 6
CriterionResult parseval(std::uint64_t seed) {
    Builder b(6, "frequency identity for the quadratic pairing", seed);
    CounterRng rng(seed, 6);
    const TimeSignal free = band_limited_signal(rng, kFree, kFreeSteps, 6);
    auto& rep = b.r.report;
    rep.param("T_free", kFree);
    rep.param("T_total", kTotal);
    rep.param("k", 2);
    std::vector<double> kc, gaps, gaps_modal, lhs, rhs, term;
    for (int K_ctrl : {3, 7, 11}) {
        const auto ac = obstruction::admissible_control(free, kTotal, K_ctrl);
        const auto p = obstruction::parseval_identity_check(ac.u, 2);
        kc.push_back(K_ctrl);
        gaps.push_back(p.gap_closed);
        gaps_modal.push_back(p.gap_modal);
        lhs.push_back(p.lhs);
        rhs.push_back(p.rhs_closed);
        term.push_back(ac.terminal_controlled);
    }
    rep.add_series("K_ctrl", kc);
    rep.add_series("lhs", lhs);
    rep.add_series("rhs_closed", rhs);
    rep.add_series("gap_closed", gaps);
    rep.add_series("gap_modal", gaps_modal);
    rep.add_series("terminal_controlled", term);
    rep.scalar("gap_at_11", gaps.back(), "time pairing against k pi int |u^|^2 Omega_k");
    bool below = true, monotone = true;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        below = below && gaps[i] <= 1e-3;
        if (i > 0) monotone = monotone && gaps[i] <= gaps[i - 1];
    }
    bool controlled = true;
    for (double t : term) controlled = controlled && t <= 1e-9;
    rep.check("gap_le_1e-3", below);
    rep.check("gap_non_increasing", monotone);
    rep.check("controlled_modes_le_1e-9", controlled);
    b.detail("gap3", gaps[0]);
    b.detail("gap7", gaps[1]);
    b.detail("gap11", gaps[2]);
    return b.finish();
}

std::vector<TimeSignal> admissible_family(std::uint64_t seed, std::uint64_t stream, int n) {
    CounterRng rng(seed, stream);
    std::vector<TimeSignal> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(obstruction::admissible_control(rng, kFree, kTotal, 11, kFreeSteps).u);
    }
    return out;
}

// ---------------------------------------------------------------- 7
CriterionResult quadratic(std::uint64_t seed) {
    Builder b(7, "quadratic obstruction sign", seed);
    const auto family = admissible_family(seed, 7, 50);
    std::vector<double> lhs, ratio;
    bool negative = true, positive_ratio = true;
    for (const auto& u : family) {
        const auto q = obstruction::quadratic_form(u, 2);
        lhs.push_back(q.lhs);
        ratio.push_back(q.ratio);
        negative = negative && !q.skipped && q.lhs < 0.0;
        positive_ratio = positive_ratio && q.ratio > 0.0;
    }
    auto& rep = b.r.report;
    rep.param("samples", 50);
    rep.param("K_ctrl", 11);
    rep.add_series("lhs", lhs);
    rep.add_series("ratio", ratio);
    const auto [mn, mx] = std::minmax_element(ratio.begin(), ratio.end());
    rep.scalar("min_ratio", *mn, "-J_2(y1) / |u1|_{-5/4}^2 > 0");
    rep.scalar("ratio_spread", *mx / *mn, "spread of the empirical constant (reported only)");
    rep.meta("norm", norms::kSurrogateNote);
    rep.check("all_lhs_negative", negative);
    rep.check("all_ratios_positive", positive_ratio);
    b.detail("min_ratio", *mn);
    b.detail("spread", *mx / *mn);
    return b.finish();
}

// ---------------------------------------------------------------- 8
CriterionResult second_order(std::uint64_t seed) {
    Builder b(8, "second-order identity and target sign", seed);
    const auto family = admissible_family(seed, 8, 20);
    std::vector<double> gaps, targets;
    double worst = 0.0;
    bool positive = true;
    for (const auto& u : family) {
        const auto s = obstruction::second_order_target(u, 2);
        gaps.push_back(s.gap);
        targets.push_back(s.target);
        worst = std::max(worst, s.gap);
        positive = positive && s.target > 0.0;
    }
    auto& rep = b.r.report;
    rep.param("samples", 20);
    rep.add_series("gap", gaps);
    rep.add_series("target", targets);
    rep.scalar("max_gap", worst, "int y2(T) phi_2(T) = J_2(y1) / 2");
    rep.check("gap_le_1e-6", worst <= 1e-6);
    rep.check("target_positive", positive);
    b.detail("max_gap", worst);
    b.detail("min_target", *std::min_element(targets.begin(), targets.end()));
    return b.finish();
}

// ---------------------------------------------------------------- 9
CriterionResult heat_estimates(std::uint64_t seed) {
    Builder b(9, "linear heat estimates", seed);
    CounterRng rng(seed, 9);
    const double T = 1.0;
    const int n = 2048;
    std::vector<TimeSignal> samples;
    for (int i = 0; i < 93; ++i) samples.push_back(band_limited_signal(rng, T, n, 8));
    std::vector<double> widths;
    for (int e = 3; e <= 9; ++e) {
        const double h = std::ldexp(1.0, -e);
        widths.push_back(h);
        samples.push_back(bump_signal(T, n, 0.25, h));
    }
    const auto audit = heat::estimate_audit_heat(samples, 64);
    std::vector<double> r1, r2;
    for (const auto& e : audit.entries) {
        r1.push_back(e.ratio_h1);
        r2.push_back(e.ratio_l2);
    }
    auto& rep = b.r.report;
    rep.param("samples", static_cast<double>(samples.size()));
    rep.add_series("bump_widths", widths);
    rep.add_series("ratio_h1", r1);
    rep.add_series("ratio_l2", r2);
    rep.scalar("spread_h1", audit.spread_h1, "|y|_{L2 H1} / |u|_{-3/4} over the sample");
    rep.scalar("spread_l2", audit.spread_l2, "|y - U|_{L2} / |u|_{-5/4} over the sample");
    rep.scalar("max_h1", audit.max_h1, "largest ratio");
    rep.scalar("max_l2", audit.max_l2, "largest ratio");
    rep.meta("norm", norms::kSurrogateNote);
    const bool finite = std::isfinite(audit.max_h1) && std::isfinite(audit.max_l2);
    rep.check("finite", finite);
    rep.check("spread_h1_le_1e2", audit.spread_h1 <= 1e2);
    rep.check("spread_l2_le_1e2", audit.spread_l2 <= 1e2);
    b.detail("spread_h1", audit.spread_h1);
    b.detail("spread_l2", audit.spread_l2);
    return b.finish();
}

// ---------------------------------------------------------------- 10
CriterionResult spectral_lemma(std::uint64_t seed) {
    Builder b(10, "spectral kernel inequality", seed);
    CounterRng rng(seed, 10);
    auto& rep = b.r.report;
    std::vector<TimeSignal> V;
    for (int i = 0; i < 50; ++i) V.push_back(band_limited_signal(rng, 1.0, 1000, 8));
    for (double gamma : {0.0, 0.5, 1.0}) {
        const double s = 0.75 - 0.5 * gamma;
        std::vector<double> ratios;
        for (const auto& v : V) {
            const auto kb = heat::spectral_kernel(gamma, v, 200);
            const double n = norms::dual_sobolev_norm(v, s);
            ratios.push_back(kb.integral_sum / (n * n));
        }
        const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
        const std::string tag = "gamma_" + fmt("%g", gamma);
        rep.add_series(tag + "_ratio", ratios);
        rep.scalar(tag + "_max", *mx, "sum_k int a_k^2 / |V|^2 of order gamma/2 - 3/4");
        rep.scalar(tag + "_spread", *mx / *mn, "spread over the sample");
        rep.check(tag + "_bounded", std::isfinite(*mx) && *mx / *mn <= 1e2);
        b.detail(tag + "_max", *mx);
    }
    const double g1 = heat::g_gamma_hat(1.0, 0.0);
    const double exact = sqrt2 / (6.0 * std::sqrt(pi));
    rep.scalar("g1_at_0", g1, "sqrt 2 / (6 sqrt pi) from zeta(2)");
    rep.check("g1_within_1e-6", std::abs(g1 - exact) <= 1e-6);
    rep.meta("norm", norms::kSurrogateNote);
    b.detail("g1_err", std::abs(g1 - exact));
    return b.finish();
}

// ---------------------------------------------------------------- 11
CriterionResult moment_control(std::uint64_t seed) {
    Builder b(11, "truncated moment control", seed);
    CounterRng rng(seed, 11);
    auto& rep = b.r.report;
    const auto modes = control::odd_modes_up_to(11);
    const int K_model = 128;
    double worst_res = 0.0, worst_ctrl = 0.0;
    bool bounded = true;
    std::vector<double> env, cond;
    for (int s = 0; s < 5; ++s) {
        spectral::ModalField y0(16);
        for (int k = 1; k <= 16; k += 2) y0[k] = rng.normal() / (k * k);
        control::MomentProblem p;
        p.T = 0.5;
        p.odd_modes = modes;
        p.targets = control::moment_targets(y0, modes);
        const auto sol = control::solve_moment_control(p);
        const auto v = control::null_control_verify(sol.u, y0, K_model, modes);
        worst_res = std::max(worst_res, sol.max_residual);
        worst_ctrl = std::max(worst_ctrl, v.max_controlled / v.y0_norm);
        // k^3 |a_k(T)| tends to 2 sqrt2 |u(T)| / pi^3 for odd k, so the upper
        // half of the tail may not exceed that limit or the lower half.
        const double limit = 2.0 * sqrt2 * std::abs(sol.u.samples.back()) / (pi * pi * pi);
        double lower = 0.0, upper = 0.0;
        for (std::size_t i = 0; i < v.tail_modes.size(); ++i) {
            const double k = v.tail_modes[i];
            double& slot = v.tail_modes[i] <= K_model / 2 ? lower : upper;
            slot = std::max(slot, v.tail_values[i] * k * k * k);
        }
        bounded = bounded && std::isfinite(v.tail_envelope) &&
                  upper <= 1.1 * std::max(lower, limit);
        env.push_back(v.tail_envelope);
        cond.push_back(sol.gram_condition);
    }
    rep.param("T", 0.5);
    rep.param("k_max", 11);
    rep.add_series("tail_envelope", env);
    rep.add_series("condition", cond);
    rep.scalar("max_residual", worst_res, "moment conditions int u e^{(k pi)^2 t} = c_k");
    rep.scalar("max_controlled_over_y0", worst_ctrl, "controlled modes vanish at T");
    rep.check("residual_le_1e-10", worst_res <= 1e-10);
    rep.check("controlled_le_1e-9", worst_ctrl <= 1e-9);
    rep.check("tail_envelope_bounded", bounded);
    b.detail("res", worst_res);
    b.detail("ctrl", worst_ctrl);
    return b.finish();
}

// ---------------------------------------------------------------- 12
CriterionResult burgers_solver(std::uint64_t seed) {
    Builder b(12, "Burgers solver order, dissipation, weak residual", seed);
    CounterRng rng(seed, 12);
    auto& rep = b.r.report;

    nonlinear::BurgersConfig mms;
    mms.K = 8;
    mms.T = 1.0;
    const auto st = nonlinear::mms_convergence(mms, {50, 100, 200, 400});
    rep.add_series("mms_n_t", std::vector<double>(st.n_t.begin(), st.n_t.end()));
    rep.add_series("mms_error", st.errors);
    rep.scalar("mms_order", st.observed_order, "second-order exponential scheme");
    rep.check("order_ge_1.9", st.observed_order >= 1.9);

    nonlinear::BurgersConfig d;
    d.K = 32;
    d.n_t = 2000;
    d.T = 0.5;
    spectral::ModalField y0(32);
    for (int k = 1; k <= 32; ++k) y0[k] = 3.0 * rng.normal() / (k * k);
    const auto free = nonlinear::burgers_solve(constant_signal(0.5, 1, 0.0), y0, d);
    double increase = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < d.n_t; ++j) {
        increase = std::max(increase, spectral::l2_norm(free.fields[j + 1]) -
                                          spectral::l2_norm(free.fields[j]));
    }
    const double scale = spectral::l2_norm(y0);
    rep.scalar("max_norm_increase", increase, "|y(t)| nonincreasing without control");
    rep.check("norm_nonincreasing", increase <= 1e-12 * scale);

    const TimeSignal u = scaled(band_limited_signal(rng, 0.5, 200, 5), 2.0);
    std::vector<double> res, ratios;
    for (int n : {200, 400, 800, 1600}) {
        d.n_t = n;
        const auto t = nonlinear::burgers_solve(u, y0, d);
        res.push_back(nonlinear::weak_residual(t, u, 8, 10));
        if (res.size() > 1) ratios.push_back(res[res.size() - 2] / res.back());
    }
    rep.add_series("weak_residual", res);
    rep.add_series("weak_ratio", ratios);
    bool about_four = true;
    for (double r : ratios) about_four = about_four && r >= 3.0 && r <= 5.0;
    rep.check("weak_ratio_in_3_5", about_four);
    b.detail("order", st.observed_order);
    b.detail("increase", increase);
    b.detail("weak_ratio", ratios.back());
    return b.finish();
}

// ---------------------------------------------------------------- 13
CriterionResult symmetry(std::uint64_t seed) {
    Builder b(13, "reflection cancellation of the cross term", seed);
    CounterRng rng(seed, 13);
    auto& rep = b.r.report;
    double worst = 0.0;
    std::vector<double> rel;
    TimeSignal first;
    for (int i = 0; i < 10; ++i) {
        const TimeSignal u = band_limited_signal(rng, 0.5, 500, 6);
        if (i == 0) first = u;
        const auto s = obstruction::symmetry_cancellation(u);
        rel.push_back(s.relative);
        worst = std::max(worst, s.relative);
    }
    const auto broken = obstruction::symmetry_cancellation(first, 2, 32, 0.1);
    rep.add_series("relative", rel);
    rep.scalar("max_relative", worst, "int y1 y2 cos(2 pi x) = 0 by reflection symmetry");
    rep.scalar("broken_relative", broken.relative, "even forcing injected into y1");
    rep.check("cancellation_le_1e-12", worst <= 1e-12);
    rep.check("falsification_detected", broken.relative > 1e-6);
    b.detail("max", worst);
    b.detail("broken", broken.relative);
    return b.finish();
}

// ---------------------------------------------------------------- 14
CriterionResult theorem(std::uint64_t seed) {
    Builder b(14, "obstruction margin for the nonlinear system", seed);
    CounterRng rng(seed, 14);
    obstruction::TheoremOptions opt;
    opt.cfg.K = 32;
    opt.cfg.n_t = 500;
    const auto res = obstruction::theorem_experiment(rng, {1e-3, 1e-2}, opt);
    auto& rep = b.r.report;
    rep.param("T", opt.T);
    rep.param("budget", opt.budget);
    rep.param("family_size", opt.family_size);
    for (const auto& e : res.per_eps) {
        const std::string tag = "eps_" + fmt("%g", e.eps);
        std::vector<double> fin, gaps;
        for (const auto& c : e.candidates) {
            fin.push_back(c.final_norm);
            gaps.push_back(c.identity_gap);
        }
        rep.add_series(tag + "_final_norm", fin);
        rep.add_series(tag + "_identity_gap", gaps);
        rep.scalar(tag + "_min_final_norm", e.min_final_norm, "y(T) != 0 for every candidate");
        rep.scalar(tag + "_kappa", e.kappa, "min |y(T)| / eps");
        rep.scalar(tag + "_gap_ratio", e.gap_ratio, "identity gap shrinks like dt^2");
        rep.check(tag + "_margin_positive", e.min_final_norm > 0.0);
        b.detail(tag + "_kappa", e.kappa);
    }
    if (res.per_eps.size() == 2) {
        rep.scalar("kappa_ratio", res.per_eps[1].kappa / res.per_eps[0].kappa,
                   "kappa(1e-2) / kappa(1e-3), reported only");
    }
    return b.finish();
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = theta_oracle(seed); break;
        case 2: r = lambda_identities(seed); break;
        case 3: r = decomposition(seed); break;
        case 4: r = sign_scans(seed); break;
        case 5: r = asymptotics(seed); break;
        case 6: r = parseval(seed); break;
        case 7: r = quadratic(seed); break;
        case 8: r = second_order(seed); break;
        case 9: r = heat_estimates(seed); break;
        case 10: r = spectral_lemma(seed); break;
        case 11: r = moment_control(seed); break;
        case 12: r = burgers_solver(seed); break;
        case 13: r = symmetry(seed); break;
        case 14: r = theorem(seed); break;
        default: throw std::out_of_range("criterion id must be 1..14");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id < kCriteria; ++id) {
        out.push_back(run_criterion(id, seed));
        if (on_result) on_result(out.back());
    }
    const auto start = std::chrono::steady_clock::now();
    Builder b(15, "determinism of a repeated run", seed);
    int mismatches = 0;
    for (int id = 1; id < kCriteria; ++id) {
        const auto again = run_criterion(id, seed);
        const bool same = again.report.to_json() == out[id - 1].report.to_json();
        b.r.report.check("criterion_" + std::to_string(id) + "_identical", same);
        if (!same) ++mismatches;
    }
    b.r.report.scalar("mismatches", mismatches, "byte-identical reports for the same seed");
    b.detail("mismatches", mismatches);
    out.push_back(b.finish());
    out.back().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(out.back());
    return out;
}

std::string summary_line(const CriterionResult& r) {
    char head[32];
    std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
    return head + r.title + ": " + r.detail;
}

ExperimentReport summary_report(const std::vector<CriterionResult>& results, std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "suite_acceptance";
    rep.seed = seed;
    for (const auto& r : results) {
        const std::string key = "criterion_" + std::to_string(r.id);
        rep.check(key, r.passed);
        rep.meta(key, r.title + ": " + r.detail);
    }
    return rep;
}

}  // namespace burgers::acceptance
