// burgers_lab: command-line front end.
//
// Each subcommand writes one report and prints a PASS/FAIL line. Reports
// are JSON unless --format csv is given or --out ends in .csv; CSV holds the
// report's series, one column each. Relative output paths are placed under
// $BURGERS_LAB_OUT when it is set.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error,
// 3 numeric guard (bad input, overflow, conditioning, blow-up).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burgers_lab/acceptance.hpp"
#include "burgers_lab/burgers.hpp"
#include "burgers_lab/control.hpp"
#include "burgers_lab/dual_norms.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/heat.hpp"
#include "burgers_lab/multiplier.hpp"
#include "burgers_lab/obstruction.hpp"
#include "burgers_lab/report.hpp"
#include "burgers_lab/rng.hpp"
#include "burgers_lab/signals.hpp"

namespace {

using namespace burgers;
using report::ExperimentReport;
using std::numbers::pi;

struct Command {
    CLI::App* app = nullptr;
    std::string label;          // "multiplier scan"
    std::string default_out;    // file name used without --out
    std::uint64_t seed = acceptance::kDefaultSeed;
    std::string out;
    std::string format;
    std::function<ExperimentReport(const Command&)> run;
};

Command& add(std::vector<Command>& cmds, CLI::App* app, std::string label, std::string default_out) {
    Command c;
    c.app = app;
    c.label = std::move(label);
    c.default_out = std::move(default_out);
    cmds.push_back(std::move(c));
    return cmds.back();
}

std::string resolve_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("BURGERS_LAB_OUT"); dir && *dir) {
            std::filesystem::create_directories(dir);
            p = std::filesystem::path(dir) / p;
        }
    }
    return p.string();
}

bool wants_csv(const Command& c, const std::string& path) {
    if (!c.format.empty()) return c.format == "csv";
    return std::filesystem::path(path).extension() == ".csv";
}

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

TimeSignal make_signal(const std::string& kind, CounterRng& rng, double T, int steps,
                       double amplitude) {
    if (kind == "constant") return constant_signal(T, steps, amplitude);
    if (kind == "band") return scaled(band_limited_signal(rng, T, steps, 6), amplitude);
    if (kind == "bump") return scaled(bump_signal(T, steps, 0.25 * T, 0.25 * T), amplitude);
    if (kind == "zero") return constant_signal(T, steps, 0.0);
    throw GuardError("unknown signal kind " + kind + " (constant, band, bump, zero)");
}

// ------------------------------------------------------------ multiplier

void add_multiplier(CLI::App& root, std::vector<Command>& cmds) {
    auto* m = root.add_subcommand("multiplier", "frequency multiplier Omega_k and its parts");
    m->require_subcommand(1);

    {
        auto* a = m->add_subcommand("scan", "tabulate the multiplier on a symmetric z grid");
        auto k = std::make_shared<int>(2);
        auto zmax = std::make_shared<double>(200.0);
        auto n = std::make_shared<int>(8001);
        a->add_option("--k", *k, "even mode index");
        a->add_option("--zmax", *zmax, "grid half-width");
        a->add_option("--n", *n, "number of points")->check(CLI::Range(2, 10000000));
        add(cmds, a, "multiplier scan", "omega_scan.csv").run = [=](const Command&) {
            ExperimentReport r;
            r.name = "multiplier_scan";
            r.param("k", *k);
            r.param("zmax", *zmax);
            r.param("n", *n);
            std::vector<std::vector<double>> cols(12);
            double max_omega = -INFINITY, max_beyond = -INFINITY;
            const double thr = multiplier::sign_threshold(std::max(*k, 1));
            for (int i = 0; i < *n; ++i) {
                const double z = -*zmax + 2.0 * *zmax * i / (*n - 1);
                const auto s = multiplier::sample(*k, z);
                const double row[12] = {z, s.lambda.lambda1.real(), s.lambda.lambda1.imag(), s.P, s.Q,
                                        s.Theta, s.Omega, s.I[0], s.I[1], s.I[2], s.I[3], s.I[4]};
                for (int c = 0; c < 12; ++c) cols[c].push_back(row[c]);
                max_omega = std::max(max_omega, s.Omega);
                if (std::abs(z) > thr) max_beyond = std::max(max_beyond, s.Omega);
            }
            const char* names[12] = {"z", "lambda_re", "lambda_im", "P", "Q", "Theta",
                                     "Omega", "I1", "I2", "I3", "I4", "I5"};
            for (int c = 0; c < 12; ++c) r.add_series(names[c], std::move(cols[c]));
            r.scalar("threshold", thr, "3 (k pi)^2 / (2 sqrt 7)");
            r.scalar("max_omega", max_omega, "sign of Omega_k on the grid");
            r.scalar("max_omega_beyond_threshold", max_beyond, "Omega_k < 0 beyond the threshold");
            r.check("negative_beyond_threshold", !(max_beyond >= 0.0));
            if (*k == 2 || *k == 10) r.check("negative_everywhere", max_omega < 0.0);
            return r;
        };
    }
    {
        auto* a = m->add_subcommand("verify-theta", "closed-form Theta against quadrature");
        auto kmax = std::make_shared<int>(12);
        auto zmax = std::make_shared<double>(60.0);
        auto n = std::make_shared<int>(241);
        a->add_option("--kmax", *kmax, "largest even k");
        a->add_option("--zmax", *zmax, "grid half-width");
        a->add_option("--n", *n, "points per k")->check(CLI::Range(2, 1000000));
        add(cmds, a, "multiplier verify-theta", "verify_theta.json").run = [=](const Command&) {
            ExperimentReport r;
            r.name = "multiplier_verify_theta";
            r.param("kmax", *kmax);
            r.param("zmax", *zmax);
            r.param("n", *n);
            std::vector<double> ks, errs;
            double worst = 0.0;
            for (int k = 2; k <= *kmax; k += 2) {
                double wk = 0.0;
                for (int i = 0; i < *n; ++i) {
                    const double z = -*zmax + 2.0 * *zmax * i / (*n - 1);
                    const double q = multiplier::theta_quadrature(k, z);
                    wk = std::max(wk, std::abs(multiplier::theta_closed(k, z) - q) / (1.0 + std::abs(q)));
                }
                ks.push_back(k);
                errs.push_back(wk);
                worst = std::max(worst, wk);
            }
            r.add_series("k", ks);
            r.add_series("scaled_error", errs);
            r.scalar("worst_scaled_error", worst, "closed form of Theta against its defining integral");
            r.check("error_le_1e-8", worst <= 1e-8);
            return r;
        };
    }
    {
        auto* a = m->add_subcommand("asymptotics", "decay of z^{5/2} Omega_k(z) + sqrt 2");
        auto k = std::make_shared<int>(2);
        auto zlo = std::make_shared<double>(1e3);
        auto zhi = std::make_shared<double>(1e6);
        auto points = std::make_shared<int>(31);
        a->add_option("--k", *k, "even mode index");
        a->add_option("--zlo", *zlo, "lower end of the fit");
        a->add_option("--zhi", *zhi, "upper end of the fit");
        a->add_option("--points", *points, "log-spaced fit points")->check(CLI::Range(2, 100000));
        add(cmds, a, "multiplier asymptotics", "asymptotics.json").run = [=](const Command&) {
            ExperimentReport r;
            r.name = "multiplier_asymptotics";
            r.param("k", *k);
            r.param("zlo", *zlo);
            r.param("zhi", *zhi);
            const auto fit = multiplier::fit_deficit(*k, *zlo, *zhi, *points);
            r.add_series("z", fit.z);
            r.add_series("deficit", fit.deficit);
            r.scalar("loglog_slope", fit.slope, "deficit decays like 1/z");
            r.scalar("fitted_constant", fit.constant, "C in |deficit| ~ C / z");
            r.check("slope_in_range", fit.slope >= -1.2 && fit.slope <= -0.8);
            return r;
        };
    }
}

// ------------------------------------------------------------ heat

void add_heat(CLI::App& root, std::vector<Command>& cmds) {
    auto* h = root.add_subcommand("heat", "linear heat equation with a spatially constant control");
    h->require_subcommand(1);
    {
        auto* a = h->add_subcommand("solve", "modal solve and energy identity");
        auto T = std::make_shared<double>(1.0);
        auto K = std::make_shared<int>(32);
        auto n = std::make_shared<int>(1000);
        auto kind = std::make_shared<std::string>("band");
        auto amp = std::make_shared<double>(1.0);
        a->add_option("--T", *T, "horizon");
        a->add_option("--K", *K, "modes")->check(CLI::Range(1, 100000));
        a->add_option("--n-t", *n, "time steps")->check(CLI::Range(1, 100000000));
        a->add_option("--control", *kind, "constant, band, bump or zero");
        a->add_option("--amplitude", *amp, "control scale");
        add(cmds, a, "heat solve", "heat_solve.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 1);
            const TimeSignal u = make_signal(*kind, rng, *T, *n, *amp);
            const auto y = heat::heat_modal_solve(u, spectral::ModalField(*K), *K);
            ExperimentReport r;
            r.name = "heat_solve";
            r.seed = c.seed;
            r.param("T", *T);
            r.param("K", *K);
            r.param("n_t", *n);
            r.meta("control", *kind);
            std::vector<double> t, norm;
            for (int j = 0; j <= y.n_t(); ++j) {
                t.push_back(y.time(j));
                norm.push_back(spectral::l2_norm(y.fields[j]));
            }
            r.add_series("t", t);
            r.add_series("l2_norm", norm);
            r.add_series("final_modes", y.fields.back().coeffs);
            const double res = heat::energy_residual(y, u);
            const double scale = std::max(l2_norm(u) * spectral::l2l2_norm(y), 1e-300);
            r.scalar("energy_residual", res, "energy identity with exact intrastep reconstruction");
            r.scalar("l2h1_norm", spectral::l2h1_norm(y), "|y|_{L2 H1}");
            r.check("energy_residual_small", std::abs(res) <= 1e-10 * scale || is_zero(u));
            return r;
        };
    }
    {
        auto* a = h->add_subcommand("audit", "ratios of the linear estimates over seeded controls");
        auto samples = std::make_shared<int>(100);
        auto T = std::make_shared<double>(1.0);
        auto n = std::make_shared<int>(2048);
        auto K = std::make_shared<int>(64);
        a->add_option("--samples", *samples, "controls, the last seven are bumps")->check(CLI::Range(8, 100000));
        a->add_option("--T", *T, "horizon");
        a->add_option("--n-t", *n, "time steps");
        a->add_option("--K", *K, "modes");
        add(cmds, a, "heat audit", "heat_audit.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 9);
            std::vector<TimeSignal> us;
            for (int i = 0; i < *samples - 7; ++i) us.push_back(band_limited_signal(rng, *T, *n, 8));
            for (int e = 3; e <= 9; ++e) us.push_back(bump_signal(*T, *n, 0.25 * *T, std::ldexp(*T, -e)));
            const auto audit = heat::estimate_audit_heat(us, *K);
            ExperimentReport r;
            r.name = "heat_audit";
            r.seed = c.seed;
            r.param("samples", *samples);
            r.param("T", *T);
            r.param("n_t", *n);
            r.param("K", *K);
            std::vector<double> r1, r2;
            for (const auto& e : audit.entries) {
                r1.push_back(e.ratio_h1);
                r2.push_back(e.ratio_l2);
            }
            r.add_series("ratio_h1", r1);
            r.add_series("ratio_l2", r2);
            r.scalar("spread_h1", audit.spread_h1, "|y|_{L2 H1} / |u|_{-3/4}");
            r.scalar("spread_l2", audit.spread_l2, "|y - U|_{L2} / |u|_{-5/4}");
            CounterRng rng2(c.seed, 91);
            const auto fx = heat::audit_fx_l1(rng2, 20, *T, *n, *K);
            const auto ds = heat::audit_dual_source(rng2, 20, *T, *n, *K);
            r.scalar("fx_l1_max_ratio", fx.max_ratio, "|y(T)| against the L1 size of f for y_t - y_xx = f_x");
            r.scalar("dual_source_max_ratio", ds.max_ratio, "|y|_{L2} against an L1 H^-1 size of f");
            r.meta("norm", norms::kSurrogateNote);
            r.check("spread_h1_le_1e2", audit.spread_h1 <= 1e2);
            r.check("spread_l2_le_1e2", audit.spread_l2 <= 1e2);
            r.check("source_ratios_finite", std::isfinite(fx.max_ratio) && std::isfinite(ds.max_ratio));
            return r;
        };
    }
}

void add_spectral_lemma(CLI::App& root, std::vector<Command>& cmds) {
    auto* s = root.add_subcommand("spectral-lemma", "summed kernel inequality");
    s->require_subcommand(1);
    auto* a = s->add_subcommand("audit", "ratio of the summed kernel energy to a dual norm of V");
    auto samples = std::make_shared<int>(50);
    auto K = std::make_shared<int>(200);
    auto gammas = std::make_shared<std::vector<double>>(std::vector<double>{0.0, 0.5, 1.0});
    a->add_option("--samples", *samples, "seeded V")->check(CLI::Range(1, 100000));
    a->add_option("--K", *K, "modes");
    a->add_option("--gamma", *gammas, "exponents in (-1/2, 3/2)")->delimiter(',');
    add(cmds, a, "spectral-lemma audit", "spectral_lemma.json").run = [=](const Command& c) {
        CounterRng rng(c.seed, 10);
        std::vector<TimeSignal> V;
        for (int i = 0; i < *samples; ++i) V.push_back(band_limited_signal(rng, 1.0, 1000, 8));
        ExperimentReport r;
        r.name = "spectral_lemma_audit";
        r.seed = c.seed;
        r.param("samples", *samples);
        r.param("K", *K);
        for (double g : *gammas) {
            const double s_order = 0.75 - 0.5 * g;
            std::vector<double> ratios;
            for (const auto& v : V) {
                const double n = norms::dual_sobolev_norm(v, s_order);
                ratios.push_back(heat::spectral_kernel(g, v, *K).integral_sum / (n * n));
            }
            const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
            char tag[32];
            std::snprintf(tag, sizeof tag, "gamma_%g", g);
            r.add_series(std::string(tag) + "_ratio", ratios);
            r.scalar(std::string(tag) + "_max", *mx, "sum_k int a_k^2 / |V|^2 of order gamma/2 - 3/4");
            r.check(std::string(tag) + "_bounded", std::isfinite(*mx) && *mx / *mn <= 1e2);
        }
        const double g1 = heat::g_gamma_hat(1.0, 0.0);
        r.scalar("g1_at_0", g1, "sqrt 2 / (6 sqrt pi) from zeta(2)");
        r.check("g1_within_1e-6", std::abs(g1 - std::sqrt(2.0) / (6.0 * std::sqrt(pi))) <= 1e-6);
        r.meta("norm", norms::kSurrogateNote);
        return r;
    };
}

// ------------------------------------------------------------ burgers

void add_burgers(CLI::App& root, std::vector<Command>& cmds) {
    auto* b = root.add_subcommand("burgers", "controlled viscous Burgers equation");
    b->require_subcommand(1);
    {
        auto* a = b->add_subcommand("solve", "nonlinear solve with residual checks");
        auto cfg = std::make_shared<nonlinear::BurgersConfig>();
        auto scheme = std::make_shared<std::string>("imex2");
        auto kind = std::make_shared<std::string>("band");
        auto amp = std::make_shared<double>(0.1);
        auto eps = std::make_shared<double>(0.0);
        auto k0 = std::make_shared<int>(2);
        a->add_option("--T", cfg->T, "horizon");
        a->add_option("--K", cfg->K, "modes");
        a->add_option("--n-t", cfg->n_t, "time steps");
        a->add_option("--scheme", *scheme, "imex1 or imex2")->check(CLI::IsMember({"imex1", "imex2"}));
        a->add_option("--control", *kind, "constant, band, bump or zero");
        a->add_option("--amplitude", *amp, "control scale");
        a->add_option("--eps", *eps, "y0 = -eps sin(k0 pi x)");
        a->add_option("--k0", *k0, "initial mode");
        add(cmds, a, "burgers solve", "burgers_solve.json").run = [=](const Command& c) {
            nonlinear::BurgersConfig conf = *cfg;
            conf.scheme = *scheme == "imex1" ? nonlinear::Scheme::IMEX1 : nonlinear::Scheme::IMEX2;
            nonlinear::validate(conf);
            if (*k0 < 1 || *k0 > conf.K) throw GuardError("k0 must lie in 1..K");
            CounterRng rng(c.seed, 1);
            const TimeSignal u = make_signal(*kind, rng, conf.T, conf.n_t, *amp);
            const auto y0 = spectral::unit_mode(conf.K, *k0, -*eps / std::sqrt(2.0));
            const auto y = nonlinear::burgers_solve(u, y0, conf);
            ExperimentReport r;
            r.name = "burgers_solve";
            r.seed = c.seed;
            r.param("T", conf.T);
            r.param("K", conf.K);
            r.param("n_t", conf.n_t);
            r.param("eps", *eps);
            r.param("k0", *k0);
            r.meta("scheme", *scheme);
            r.meta("control", *kind);
            std::vector<double> t, norm;
            for (int j = 0; j <= y.n_t(); ++j) {
                t.push_back(y.time(j));
                norm.push_back(spectral::l2_norm(y.fields[j]));
            }
            r.add_series("t", t);
            r.add_series("l2_norm", norm);
            r.add_series("final_modes", y.fields.back().coeffs);
            const double weak = nonlinear::weak_residual(y, u, std::min(8, conf.K), 10);
            const double energy = nonlinear::nonlinear_energy_residual(y, u);
            r.scalar("final_l2", norm.back(), "|y(T)|");
            r.scalar("yt_norm", spectral::yt_norm(y), "|y|_{C L2} + |y|_{L2 H1}");
            r.scalar("weak_residual", weak, "weak form against caloric test functions");
            r.scalar("energy_residual", energy, "energy identity of the nonlinear solve");
            r.check("finite", std::isfinite(norm.back()) && std::isfinite(weak) && std::isfinite(energy));
            return r;
        };
    }
    {
        auto* a = b->add_subcommand("mms", "temporal order from a manufactured solution");
        auto K = std::make_shared<int>(8);
        auto levels = std::make_shared<std::vector<int>>(std::vector<int>{50, 100, 200, 400});
        auto scheme = std::make_shared<std::string>("imex2");
        a->add_option("--K", *K, "modes");
        a->add_option("--levels", *levels, "step counts")->delimiter(',');
        a->add_option("--scheme", *scheme, "imex1 or imex2")->check(CLI::IsMember({"imex1", "imex2"}));
        add(cmds, a, "burgers mms", "burgers_mms.json").run = [=](const Command&) {
            nonlinear::BurgersConfig conf;
            conf.K = *K;
            conf.scheme = *scheme == "imex1" ? nonlinear::Scheme::IMEX1 : nonlinear::Scheme::IMEX2;
            const auto st = nonlinear::mms_convergence(conf, *levels);
            ExperimentReport r;
            r.name = "burgers_mms";
            r.param("K", *K);
            r.meta("scheme", *scheme);
            r.add_series("n_t", as_doubles(st.n_t));
            r.add_series("error", st.errors);
            r.add_series("order", st.orders);
            r.scalar("observed_order", st.observed_order, "temporal order of the scheme");
            r.check(*scheme == "imex2" ? "order_ge_1.9" : "order_ge_0.9",
                    st.observed_order >= (*scheme == "imex2" ? 1.9 : 0.9));
            return r;
        };
    }
}

// ------------------------------------------------------------ norms

void add_norms(CLI::App& root, std::vector<Command>& cmds) {
    auto* n = root.add_subcommand("norms", "negative-order Sobolev norms of time signals");
    n->require_subcommand(1);
    auto* a = n->add_subcommand("dual", "whole-line dual norms of one signal");
    auto T = std::make_shared<double>(1.0);
    auto steps = std::make_shared<int>(1000);
    auto kind = std::make_shared<std::string>("band");
    auto orders = std::make_shared<std::vector<double>>(std::vector<double>{0.75, 1.0, 1.25});
    auto pad = std::make_shared<int>(0);
    a->add_option("--T", *T, "duration");
    a->add_option("--n-t", *steps, "time steps");
    a->add_option("--signal", *kind, "constant, band, bump or zero");
    a->add_option("--orders", *orders, "orders s in (0, 2)")->delimiter(',');
    a->add_option("--pad", *pad, "pad factor, 0 for automatic");
    add(cmds, a, "norms dual", "norms_dual.json").run = [=](const Command& c) {
        CounterRng rng(c.seed, 1);
        const TimeSignal u = make_signal(*kind, rng, *T, *steps, 1.0);
        ExperimentReport r;
        r.name = "norms_dual";
        r.seed = c.seed;
        r.param("T", *T);
        r.param("n_t", *steps);
        r.meta("signal", *kind);
        r.meta("norm", norms::kSurrogateNote);
        std::vector<double> vals, tails;
        for (double s : *orders) {
            const auto d = norms::dual_sobolev_norm_detail(u, s, *pad);
            vals.push_back(d.value);
            tails.push_back(d.tail_part);
        }
        r.add_series("order", *orders);
        r.add_series("norm", vals);
        r.add_series("tail_part", tails);
        bool monotone = true;
        for (std::size_t i = 1; i < orders->size(); ++i) {
            if ((*orders)[i] > (*orders)[i - 1]) monotone = monotone && vals[i] <= vals[i - 1];
        }
        const double gap = norms::plancherel_gap(u);
        r.scalar("plancherel_gap", gap, "int |u|^2 = int |u^|^2");
        r.check("monotone_in_order", monotone);
        r.check("plancherel_le_1e-10", gap <= 1e-10);
        if (!is_zero(u)) {
            const auto ic = norms::interpolation_check(u);
            r.scalar("interpolation_lhs", ic.lhs, "|u|_{-1}");
            r.scalar("interpolation_rhs", ic.rhs, "|u|_{-5/4}^{1/2} |u|_{-3/4}^{1/2}");
            r.check("interpolation", ic.passed);
        }
        return r;
    };
}

// ------------------------------------------------------------ control

void add_control(CLI::App& root, std::vector<Command>& cmds) {
    auto* ct = root.add_subcommand("control", "null controls of the linearized system");
    ct->require_subcommand(1);
    {
        auto* a = ct->add_subcommand("moment", "moment-matching control for a random odd state");
        auto T = std::make_shared<double>(0.5);
        auto kmax = std::make_shared<int>(11);
        auto K_model = std::make_shared<int>(128);
        auto n = std::make_shared<int>(2000);
        a->add_option("--T", *T, "horizon");
        a->add_option("--kmax", *kmax, "largest controlled odd mode");
        a->add_option("--K-model", *K_model, "modes in the verification solve");
        a->add_option("--n-t", *n, "samples of the control");
        add(cmds, a, "control moment", "control_moment.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 11);
            spectral::ModalField y0(16);
            for (int k = 1; k <= 16; k += 2) y0[k] = rng.normal() / (k * k);
            const auto modes = control::odd_modes_up_to(*kmax);
            control::MomentProblem p;
            p.T = *T;
            p.odd_modes = modes;
            p.targets = control::moment_targets(y0, modes);
            p.n_t = *n;
            const auto sol = control::solve_moment_control(p);
            const auto v = control::null_control_verify(sol.u, y0, *K_model, modes);
            ExperimentReport r;
            r.name = "control_moment";
            r.seed = c.seed;
            r.param("T", *T);
            r.param("kmax", *kmax);
            r.param("K_model", *K_model);
            r.add_series("u", sol.u.samples);
            r.add_series("residuals", sol.residuals);
            r.add_series("controlled_values", v.controlled_values);
            r.scalar("max_residual", sol.max_residual, "moment conditions");
            r.scalar("condition", sol.gram_condition, "row-normalized constraint matrix");
            r.scalar("max_controlled_over_y0", v.max_controlled / v.y0_norm, "controlled modes vanish at T");
            r.scalar("tail_envelope", v.tail_envelope, "max k^3 |a_k(T)| over the tail");
            r.scalar("gain", v.gain, "|u|_{L2} / |y0|");
            r.check("residual_le_1e-10", sol.max_residual <= 1e-10);
            r.check("controlled_le_1e-9", v.max_controlled <= 1e-9 * v.y0_norm);
            return r;
        };
    }
    {
        auto* a = ct->add_subcommand("return-to-zero", "free random control followed by a corrector");
        auto T = std::make_shared<double>(0.5);
        auto T_total = std::make_shared<double>(1.0);
        auto kmax = std::make_shared<int>(11);
        auto n = std::make_shared<int>(1000);
        a->add_option("--T", *T, "free horizon");
        a->add_option("--T-total", *T_total, "full horizon");
        a->add_option("--kmax", *kmax, "largest controlled odd mode");
        a->add_option("--n-t", *n, "steps of the free part");
        add(cmds, a, "control return-to-zero", "return_to_zero.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 1);
            const auto ac = obstruction::admissible_control(rng, *T, *T_total, *kmax, *n);
            ExperimentReport r;
            r.name = "control_return_to_zero";
            r.seed = c.seed;
            r.param("T", *T);
            r.param("T_total", *T_total);
            r.param("kmax", *kmax);
            r.add_series("u", ac.u.samples);
            r.scalar("terminal_controlled", ac.terminal_controlled, "controlled modes of y1 at T_total");
            r.scalar("tail_envelope", ac.tail_envelope, "max k^3 |a_k(T_total)| over the tail");
            r.check("controlled_le_1e-9", ac.terminal_controlled <= 1e-9);
            return r;
        };
    }
}

// ------------------------------------------------------------ obstruction

void add_obstruction(CLI::App& root, std::vector<Command>& cmds) {
    auto* ob = root.add_subcommand("obstruction", "quadratic obstruction experiments");
    ob->require_subcommand(1);
    {
        auto* a = ob->add_subcommand("parseval", "time pairing against its frequency form");
        auto kctrl = std::make_shared<std::vector<int>>(std::vector<int>{3, 7, 11});
        auto k = std::make_shared<int>(2);
        a->add_option("--kctrl", *kctrl, "controlled odd modes, one run each")->delimiter(',');
        a->add_option("--k", *k, "even pairing mode");
        add(cmds, a, "obstruction parseval", "parseval.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 6);
            const TimeSignal free = band_limited_signal(rng, 0.5, 1000, 6);
            ExperimentReport r;
            r.name = "obstruction_parseval";
            r.seed = c.seed;
            r.param("k", *k);
            r.param("T_free", 0.5);
            r.param("T_total", 1.0);
            std::vector<double> lhs, rc, rm, gc, gm;
            for (int kc : *kctrl) {
                const auto ac = obstruction::admissible_control(free, 1.0, kc);
                const auto p = obstruction::parseval_identity_check(ac.u, *k);
                lhs.push_back(p.lhs);
                rc.push_back(p.rhs_closed);
                rm.push_back(p.rhs_modal);
                gc.push_back(p.gap_closed);
                gm.push_back(p.gap_modal);
            }
            r.add_series("K_ctrl", as_doubles(*kctrl));
            r.add_series("lhs", lhs);
            r.add_series("rhs_closed", rc);
            r.add_series("rhs_modal", rm);
            r.add_series("gap_closed", gc);
            r.add_series("gap_modal", gm);
            bool ok = true, mono = true;
            for (std::size_t i = 0; i < gc.size(); ++i) {
                ok = ok && gc[i] <= 1e-3;
                if (i) mono = mono && gc[i] <= gc[i - 1];
            }
            r.scalar("last_gap", gc.empty() ? 0.0 : gc.back(), "time pairing against k pi int |u^|^2 Omega_k");
            r.check("gap_le_1e-3", ok);
            r.check("gap_non_increasing", mono);
            return r;
        };
    }
    auto family = [](std::uint64_t seed, std::uint64_t stream, int n, int kctrl) {
        CounterRng rng(seed, stream);
        std::vector<TimeSignal> out;
        for (int i = 0; i < n; ++i) out.push_back(obstruction::admissible_control(rng, 0.5, 1.0, kctrl).u);
        return out;
    };
    {
        auto* a = ob->add_subcommand("quadratic", "sign of the quadratic pairing over admissible controls");
        auto samples = std::make_shared<int>(50);
        auto k0 = std::make_shared<int>(2);
        auto kctrl = std::make_shared<int>(11);
        a->add_option("--samples", *samples, "admissible controls")->check(CLI::Range(1, 100000));
        a->add_option("--k0", *k0, "2 or 10");
        a->add_option("--kctrl", *kctrl, "controlled odd modes");
        add(cmds, a, "obstruction quadratic", "quadratic.json").run = [=](const Command& c) {
            const auto us = family(c.seed, 7, *samples, *kctrl);
            ExperimentReport r;
            r.name = "obstruction_quadratic";
            r.seed = c.seed;
            r.param("samples", *samples);
            r.param("k0", *k0);
            r.param("K_ctrl", *kctrl);
            std::vector<double> lhs, ratio;
            bool neg = true;
            for (const auto& u : us) {
                const auto q = obstruction::quadratic_form(u, *k0);
                lhs.push_back(q.lhs);
                ratio.push_back(q.ratio);
                neg = neg && q.lhs < 0.0 && q.ratio > 0.0;
            }
            r.add_series("lhs", lhs);
            r.add_series("ratio", ratio);
            const auto [mn, mx] = std::minmax_element(ratio.begin(), ratio.end());
            r.scalar("min_ratio", *mn, "-J(y1) / |u1|_{-5/4}^2");
            r.scalar("ratio_spread", *mx / *mn, "spread of the empirical constant (reported only)");
            r.meta("norm", norms::kSurrogateNote);
            r.check("all_negative", neg);
            return r;
        };
    }
    {
        auto* a = ob->add_subcommand("second-order", "second-order identity and target sign");
        auto samples = std::make_shared<int>(20);
        auto k0 = std::make_shared<int>(2);
        a->add_option("--samples", *samples, "admissible controls")->check(CLI::Range(1, 100000));
        a->add_option("--k0", *k0, "even mode");
        add(cmds, a, "obstruction second-order", "second_order.json").run = [=](const Command& c) {
            const auto us = family(c.seed, 8, *samples, 11);
            ExperimentReport r;
            r.name = "obstruction_second_order";
            r.seed = c.seed;
            r.param("samples", *samples);
            r.param("k0", *k0);
            std::vector<double> gap, target, tr;
            bool pos = true;
            double worst = 0.0;
            for (const auto& u : us) {
                const auto s = obstruction::second_order_target(u, *k0);
                gap.push_back(s.gap);
                target.push_back(s.target);
                tr.push_back(s.target_ratio);
                pos = pos && s.target > 0.0;
                worst = std::max(worst, s.gap);
            }
            r.add_series("gap", gap);
            r.add_series("target", target);
            r.add_series("target_ratio", tr);
            r.scalar("max_gap", worst, "int y2(T) phi_k0(T) = J(y1) / 2");
            r.meta("norm", norms::kSurrogateNote);
            r.check("gap_le_1e-6", worst <= 1e-6);
            r.check("target_positive", pos);
            return r;
        };
    }
    {
        auto* a = ob->add_subcommand("theorem", "smallest final state over a control family");
        auto eps = std::make_shared<std::vector<double>>(std::vector<double>{1e-3, 1e-2});
        auto opt = std::make_shared<obstruction::TheoremOptions>();
        opt->cfg.n_t = 500;
        a->add_option("--eps", *eps, "initial amplitudes")->delimiter(',');
        a->add_option("--k0", opt->k0, "even initial mode");
        a->add_option("--T", opt->T, "horizon");
        a->add_option("--budget", opt->budget, "bound on |u|_{-3/4}");
        a->add_option("--family", opt->family_size, "candidates per eps");
        a->add_option("--refined", opt->refined, "gradient-refined candidates among them");
        a->add_option("--K", opt->cfg.K, "modes");
        a->add_option("--n-t", opt->cfg.n_t, "time steps");
        add(cmds, a, "obstruction theorem", "theorem.json").run = [=](const Command& c) {
            CounterRng rng(c.seed, 14);
            const auto res = obstruction::theorem_experiment(rng, *eps, *opt);
            ExperimentReport r;
            r.name = "obstruction_theorem";
            r.seed = c.seed;
            r.param("k0", opt->k0);
            r.param("T", opt->T);
            r.param("budget", opt->budget);
            r.param("family", opt->family_size);
            r.param("K", opt->cfg.K);
            r.param("n_t", opt->cfg.n_t);
            for (const auto& e : res.per_eps) {
                char tag[32];
                std::snprintf(tag, sizeof tag, "eps_%g", e.eps);
                std::vector<double> fin, gap;
                for (const auto& cand : e.candidates) {
                    fin.push_back(cand.final_norm);
                    gap.push_back(cand.identity_gap);
                }
                r.add_series(std::string(tag) + "_final_norm", fin);
                r.add_series(std::string(tag) + "_identity_gap", gap);
                r.scalar(std::string(tag) + "_kappa", e.kappa, "min |y(T)| / eps");
                r.scalar(std::string(tag) + "_gap_ratio", e.gap_ratio, "identity gap shrinks like dt^2");
            }
            r.check("margin_positive", res.margin_positive);
            return r;
        };
    }
}

// ------------------------------------------------------------ suite

void add_suite(CLI::App& root, std::vector<Command>& cmds) {
    auto* s = root.add_subcommand("suite", "batteries of checks");
    s->require_subcommand(1);
    auto* a = s->add_subcommand("acceptance", "all fifteen acceptance criteria");
    add(cmds, a, "suite acceptance", "acceptance.json").run = [](const Command& c) {
        const auto results = acceptance::run_all(c.seed, [](const acceptance::CriterionResult& r) {
            std::printf("%s\n", acceptance::summary_line(r).c_str());
            std::fflush(stdout);
        });
        return acceptance::summary_report(results, c.seed);
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical lab for the quadratic obstruction of the controlled Burgers equation",
                 "burgers_lab"};
    app.require_subcommand(1);
    std::vector<Command> cmds;
    cmds.reserve(32);
    add_multiplier(app, cmds);
    add_heat(app, cmds);
    add_spectral_lemma(app, cmds);
    add_burgers(app, cmds);
    add_norms(app, cmds);
    add_control(app, cmds);
    add_obstruction(app, cmds);
    add_suite(app, cmds);
    for (auto& c : cmds) {
        c.app->add_option("--seed", c.seed, "64-bit seed");
        c.app->add_option("--out", c.out, "report path (default " + c.default_out + ")");
        c.app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto& c : cmds) {
        if (!c.app->parsed()) continue;
        try {
            ExperimentReport r = c.run(c);
            r.seed = c.seed;
            const std::string path = resolve_path(c.out.empty() ? c.default_out : c.out);
            report::write_file(path, wants_csv(c, path) ? r.series_csv() : r.to_json());
            std::string failed;
            for (const auto& [name, ok] : r.passed) {
                if (!ok) failed += (failed.empty() ? "" : ",") + name;
            }
            const bool pass = r.all_passed();
            std::printf("%s %s: %zu checks%s -> %s\n", pass ? "PASS" : "FAIL", c.label.c_str(),
                        r.passed.size(), failed.empty() ? "" : (", failed " + failed).c_str(),
                        path.c_str());
            return pass ? 0 : 1;
        } catch (const GuardError& e) {
            std::fprintf(stderr, "guard: %s\n", e.what());
            return 3;
        } catch (const BlowUpError& e) {
            std::fprintf(stderr, "guard: %s\n", e.what());
            return 3;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
    }
    std::fputs(app.help().c_str(), stderr);
    return 2;
}
