#include "burgers_lab/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "burgers_lab/dual_norms.hpp"
#include "burgers_lab/errors.hpp"
#include "burgers_lab/heat.hpp"
#include "burgers_lab/multiplier.hpp"

namespace burgers::obstruction {

using std::numbers::pi;
using std::numbers::sqrt2;
using cplx = std::complex<double>;

namespace {

double mode_rate(int k) { return pi * pi * k * k; }

void require_even(int k) {
    if (k < 2 || k % 2 != 0) throw GuardError("closed form requires even k");
}

Trajectory linear_response(const TimeSignal& u, int K) {
    return heat::heat_modal_solve(u, ModalField(K), K);
}

double pairing(const Trajectory& y, int k) {
    return spectral::quadratic_phi_pairing(y, k, spectral::TimeRule::ExpLinear,
                                           spectral::SpaceRule::Modal);
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

Trajectory difference(const Trajectory& y, const Trajectory& y1, const Trajectory& y2) {
    Trajectory d = y;
    for (std::size_t j = 0; j < d.fields.size(); ++j) {
        for (int k = 1; k <= d.K(); ++k) {
            if (k <= y1.K()) d.fields[j][k] -= y1.fields[j][k];
            if (k <= y2.K()) d.fields[j][k] -= y2.fields[j][k];
        }
    }
    return d;
}

// Samples of sum_m c_m P_m(2t/T - 1) on a uniform grid.
TimeSignal legendre_signal(const std::vector<double>& c, double T, int steps) {
    return sampled_signal(T, steps, [&](double t) {
        const double x = 2.0 * t / T - 1.0;
        double p0 = 1.0, p1 = x, v = 0.0;
        for (std::size_t m = 0; m < c.size(); ++m) {
            double p;
            if (m == 0) {
                p = p0;
            } else if (m == 1) {
                p = p1;
            } else {
                p = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p;
            }
            v += c[m] * p;
        }
        return v;
    });
}

TimeSignal with_norm_34(const TimeSignal& u, double target) {
    const double n = norms::dual_sobolev_norm(u, 0.75);
    return n > 0.0 ? scaled(u, target / n) : u;
}

}  // namespace

AdmissibleControl admissible_control(const TimeSignal& u_free, double T_total, int K_ctrl,
                                     int K_model) {
    const auto rz = control::return_to_zero(u_free, T_total, control::odd_modes_up_to(K_ctrl),
                                            K_model);
    AdmissibleControl out;
    out.u = rz.u;
    out.T_free = rz.T_free;
    out.K_ctrl = K_ctrl;
    out.terminal_controlled = rz.verify.max_controlled;
    out.tail_envelope = rz.verify.tail_envelope;
    return out;
}

AdmissibleControl admissible_control(CounterRng& rng, double T_free, double T_total, int K_ctrl,
                                     int n_free, int K_model) {
    return admissible_control(band_limited_signal(rng, T_free, n_free, 6), T_total, K_ctrl,
                              K_model);
}

ParsevalResult parseval_identity_check(const TimeSignal& u1, int k, int K_model,
                                       int time_refine) {
    require_even(k);
    if (time_refine < 1) throw GuardError("time_refine must be >= 1");
    ParsevalResult r;
    r.k = k;
    if (is_zero(u1)) {
        r.skipped = true;
        return r;
    }
    const Trajectory y1 = linear_response(refine(u1, time_refine * u1.steps()), K_model);
    r.lhs = pairing(y1, k);
    r.terminal_norm = spectral::l2_norm(y1.fields.back());

    const norms::ComplexPath path = norms::modulated_transform(u1, k);
    r.pad_factor = path.pad_factor;
    r.rhs_closed = k * pi * norms::weighted_integral(
                                path, [k](double z) { return multiplier::omega(k, z); },
                                -sqrt2, 2.5);

    // Per-mode transforms of e^{(k pi)^2 t / 2} y1_j(t), combined pointwise
    // through int e_a e_b cos(k pi x) = (1/2)[delta_{|a-b|,k} - delta_{a+b,k}].
    // Only the last k transforms and those below k are kept.
    std::vector<std::vector<cplx>> window(k), low(k);
    std::vector<double> edge_l(K_model + 1), edge_r(K_model + 1);
    std::vector<cplx> acc;
    double dxi = 0.0;
    for (int a = 1; a <= K_model; ++a) {
        TimeSignal s{y1.T, std::vector<double>(y1.fields.size())};
        for (std::size_t j = 0; j < y1.fields.size(); ++j) s.samples[j] = y1.fields[j][a];
        std::vector<cplx> v;
        if (!is_zero(s)) {
            const norms::ComplexPath p = norms::modulated_transform(s, k, r.pad_factor);
            v = p.values;
            dxi = p.dxi;
            edge_l[a] = p.edge_left;
            edge_r[a] = p.edge_right;
            if (acc.empty()) acc.assign(v.size(), 0.0);
        }
        const auto& partner = window[a % k];  // transform of mode a - k
        if (a > k && !v.empty() && !partner.empty()) {
            for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i] * std::conj(partner[i]);
        }
        if (a < k) {
            low[a] = v;
            const auto& other = low[k - a];
            if (a >= k - a && !v.empty() && !other.empty()) {
                // a + b = k with a, b < k; the pair (a, k - a) appears twice unless a = k/2.
                const double w = (a == k - a) ? -0.5 : -1.0;
                for (std::size_t i = 0; i < v.size(); ++i) acc[i] += w * v[i] * std::conj(other[i]);
            }
        }
        window[a % k] = std::move(v);
    }
    double grid = 0.0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        grid += (i == 0 || i + 1 == acc.size() ? 0.5 : 1.0) * acc[i].real();
    }
    grid *= dxi;
    double edge2 = 0.0;
    for (int a = k + 1; a <= K_model; ++a) {
        edge2 += edge_l[a] * edge_l[a - k] + edge_r[a] * edge_r[a - k];
    }
    for (int a = 1; a < k; ++a) {
        edge2 -= 0.5 * (edge_l[a] * edge_l[k - a] + edge_r[a] * edge_r[k - a]);
    }
    const double xi_max = acc.empty() ? 0.0 : 0.5 * (acc.size() - 1) * dxi;
    const double tail = xi_max > 0.0 ? edge2 / (pi * xi_max) : 0.0;
    r.rhs_modal = k * pi * (grid + tail);

    const double scale = std::abs(r.lhs);
    r.gap_closed = scale > 0.0 ? std::abs(r.lhs - r.rhs_closed) / scale : 0.0;
    r.gap_modal = scale > 0.0 ? std::abs(r.lhs - r.rhs_modal) / scale : 0.0;
    return r;
}

QuadraticFormResult quadratic_form(const TimeSignal& u1, int k0, int K_model) {
    if (k0 != 2 && k0 != 10) throw GuardError("k0 must be 2 or 10");
    if (k0 == 10 && u1.T > 0.1) throw GuardError("k0 = 10 needs T <= 0.1 (weight overflow)");
    QuadraticFormResult r;
    if (is_zero(u1)) {
        r.skipped = true;
        return r;
    }
    r.lhs = pairing(linear_response(u1, K_model), k0);
    const double n = norms::dual_sobolev_norm(u1, 1.25);
    r.norm2 = n * n;
    r.ratio = -r.lhs / r.norm2;
    return r;
}

SecondOrderResult second_order_target(const TimeSignal& u1, int k0, int K_model) {
    require_even(k0);
    spectral::check_weight_exponent(k0, u1.T);
    SecondOrderResult r;
    if (is_zero(u1)) {
        r.skipped = true;
        return r;
    }
    const Trajectory y1 = linear_response(u1, K_model);
    const Trajectory y2 = heat::second_order_solve(y1);
    const double a_end = y2.fields.back()[k0];
    // int y2(T) sin(k0 pi x) dx = a_k0(T) / sqrt 2
    r.lhs = std::exp(mode_rate(k0) * u1.T) * a_end / sqrt2;
    r.rhs = 0.5 * pairing(y1, k0);
    r.gap = relative_gap(r.lhs, r.rhs);
    r.target = -a_end / sqrt2;
    const double n = norms::dual_sobolev_norm(u1, 1.25);
    r.target_ratio = r.target / (n * n);
    return r;
}

PowerSeriesResult power_series_audit(const TimeSignal& u, double eps, int k0,
                                     const nonlinear::BurgersConfig& cfg) {
    nonlinear::validate(cfg);
    if (k0 < 1 || k0 > cfg.K) throw GuardError("k0 must lie in 1..K");
    PowerSeriesResult r;
    if (is_zero(u) && eps == 0.0) {
        r.skipped = true;
        return r;
    }
    const ModalField y0 = spectral::unit_mode(cfg.K, k0, -eps / sqrt2);
    const Trajectory y = nonlinear::burgers_solve(u, y0, cfg);
    const Trajectory y1 = linear_response(refine(u, cfg.n_t), cfg.K);
    const Trajectory y2 = heat::second_order_solve(y1, cfg.K);
    const Trajectory dy = difference(y, y1, y2);

    r.y0_norm = spectral::l2_norm(y0);
    if (!is_zero(u)) {
        const auto n = norms::dual_sobolev_norms(u, {0.75, 1.25, 1.0});
        r.norm_34 = n[0];
        r.norm_54 = n[1];
        r.norm_1 = n[2];
    }
    auto ratio = [](double lhs, double rhs) { return rhs > 0.0 ? lhs / rhs : 0.0; };
    const double n34 = r.norm_34, n54 = r.norm_54;
    r.y2_yt = ratio(spectral::yt_norm(y2), n34 * n34);
    r.y2_l2 = ratio(spectral::l2l2_norm(y2), n54 * n34);
    r.dy_yt = ratio(spectral::yt_norm(dy), n34 * n34 * n34 + r.y0_norm);
    r.dy_l2_norm = spectral::l2l2_norm(dy);
    r.dy_l2 = ratio(r.dy_l2_norm, std::pow(n54 * n34, 1.5) + r.y0_norm);
    r.y_h1 = ratio(spectral::l2h1_norm(y), n34 + r.y0_norm);
    r.y_l2 = ratio(spectral::l2l2_norm(y), r.norm_1 + r.y0_norm);
    for (double v : {r.y2_yt, r.y2_l2, r.dy_yt, r.dy_l2, r.y_h1, r.y_l2}) {
        if (!std::isfinite(v)) r.finite = false;
    }
    return r;
}

PowerSeriesStudy power_series_study(CounterRng& rng, int samples, double eps, double norm_34,
                                    int k0, const nonlinear::BurgersConfig& cfg) {
    PowerSeriesStudy st;
    for (int s = 0; s < samples; ++s) {
        const TimeSignal u = with_norm_34(band_limited_signal(rng, cfg.T, cfg.n_t, 6), norm_34);
        const PowerSeriesResult r = power_series_audit(u, eps, k0, cfg);
        st.max_y2_yt = std::max(st.max_y2_yt, r.y2_yt);
        st.max_y2_l2 = std::max(st.max_y2_l2, r.y2_l2);
        st.max_dy_yt = std::max(st.max_dy_yt, r.dy_yt);
        st.max_dy_l2 = std::max(st.max_dy_l2, r.dy_l2);
        st.max_y_h1 = std::max(st.max_y_h1, r.y_h1);
        st.max_y_l2 = std::max(st.max_y_l2, r.y_l2);
        st.all_finite = st.all_finite && r.finite;
        if (s == 0) {
            const PowerSeriesResult half = power_series_audit(scaled(u, 0.5), 0.5 * eps, k0, cfg);
            st.halving_factor = half.dy_l2_norm > 0.0 ? r.dy_l2_norm / half.dy_l2_norm : 0.0;
        }
        st.samples.push_back(r);
    }
    return st;
}

SymmetryResult symmetry_cancellation(const TimeSignal& u, int k0, int K, double inject) {
    require_even(k0);
    if (K < 2) throw GuardError("K must be >= 2");
    const int n_t = u.steps();
    std::vector<ModalField> f(n_t + 1, ModalField(K));
    for (int j = 0; j <= n_t; ++j) {
        for (int k = 1; k <= K; ++k) f[j][k] = heat::omega_coefficient(k) * u.samples[j];
        f[j][2] += inject;
    }
    const Trajectory y1 = heat::heat_forced_solve(f, ModalField(K), u.T);
    const Trajectory y2 = heat::second_order_solve(y1);

    SymmetryResult r;
    spectral::SineGrid grid(8 * K);
    const int n = grid.n();
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = std::cos(k0 * pi * grid.x(i + 1));
    for (int j = 0; j <= n_t; ++j) {
        const std::vector<double> v1 = grid.synthesize(y1.fields[j].coeffs);
        const std::vector<double> v2 = grid.synthesize(y2.fields[j].coeffs);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += v1[i] * v2[i] * c[i];
        acc /= (n + 1);
        r.times.push_back(y1.time(j));
        r.values.push_back(acc);
        r.max_abs = std::max(r.max_abs, std::abs(acc));
        r.scale = std::max(r.scale, spectral::l2_norm(y1.fields[j]) * spectral::l2_norm(y2.fields[j]));
    }
    r.relative = r.scale > 0.0 ? r.max_abs / r.scale : 0.0;
    return r;
}

namespace {

struct Evaluation {
    double final_norm = 0.0;
    double identity_gap = 0.0;
};

Evaluation evaluate(const TimeSignal& u, double eps, int k0, const nonlinear::BurgersConfig& cfg) {
    const ModalField y0 = spectral::unit_mode(cfg.K, k0, -eps / sqrt2);
    const Trajectory y = nonlinear::burgers_solve(u, y0, cfg);
    Evaluation e;
    e.final_norm = spectral::l2_norm(y.fields.back());
    const double terminal = sqrt2 * std::exp(mode_rate(k0) * cfg.T) * y.fields.back()[k0];
    e.identity_gap = std::abs(pairing(y, k0) - terminal - eps);
    return e;
}

// Direction search on Legendre coefficients at fixed |u|_{-3/4}, minimizing
// |y(T)| by central differences and backtracking.
TimeSignal refine_candidate(std::vector<double> c, double norm, double eps, int k0,
                            const nonlinear::BurgersConfig& cfg, int iterations) {
    auto make = [&](const std::vector<double>& coef) {
        return with_norm_34(legendre_signal(coef, cfg.T, cfg.n_t), norm);
    };
    auto objective = [&](const std::vector<double>& coef) {
        return evaluate(make(coef), eps, k0, cfg).final_norm;
    };
    auto unit = [](std::vector<double> v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        s = std::sqrt(s);
        for (double& x : v) x /= s;
        return v;
    };
    c = unit(c);
    double J = objective(c);
    const double delta = 1e-4;
    for (int it = 0; it < iterations; ++it) {
        std::vector<double> g(c.size());
        double gnorm = 0.0;
        for (std::size_t m = 0; m < c.size(); ++m) {
            auto cp = c, cm = c;
            cp[m] += delta;
            cm[m] -= delta;
            g[m] = (objective(cp) - objective(cm)) / (2.0 * delta);
            gnorm += g[m] * g[m];
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm == 0.0) break;
        double step = 0.5;
        bool improved = false;
        for (int ls = 0; ls < 6 && !improved; ++ls, step *= 0.5) {
            std::vector<double> trial(c.size());
            for (std::size_t m = 0; m < c.size(); ++m) trial[m] = c[m] - step * g[m] / gnorm;
            trial = unit(trial);
            const double Jt = objective(trial);
            if (Jt < J) {
                c = trial;
                J = Jt;
                improved = true;
            }
        }
        if (!improved) break;
    }
    return make(c);
}

}  // namespace

TheoremResult theorem_experiment(CounterRng& rng, const std::vector<double>& eps_list,
                                 const TheoremOptions& opt) {
    require_even(opt.k0);
    if (opt.family_size < 1 || opt.refined < 0 || opt.refined > opt.family_size) {
        throw GuardError("family sizes out of range");
    }
    if (!(opt.budget > 0.0)) throw GuardError("budget must be positive");
    nonlinear::BurgersConfig cfg = opt.cfg;
    cfg.T = opt.T;
    nonlinear::validate(cfg);
    if (cfg.n_t % 2 != 0) throw GuardError("n_t must be even");
    spectral::check_weight_exponent(opt.k0, cfg.T);

    // Fixed part of the family, shared by every eps.
    const int fixed = opt.family_size - opt.refined;
    const int n_moment = fixed / 2;
    std::vector<std::pair<CandidateKind, TimeSignal>> family;
    for (int i = 0; i < fixed; ++i) {
        const double norm = opt.budget * (0.2 + 0.8 * rng.uniform());
        if (i < n_moment) {
            const TimeSignal free = band_limited_signal(rng, 0.5 * cfg.T, cfg.n_t / 2, 6);
            const TimeSignal u = admissible_control(free, cfg.T, 7, cfg.K).u;
            family.emplace_back(CandidateKind::MomentMatched, with_norm_34(u, norm));
        } else {
            family.emplace_back(CandidateKind::Random,
                                with_norm_34(band_limited_signal(rng, cfg.T, cfg.n_t, 6), norm));
        }
    }
    std::vector<std::pair<double, std::vector<double>>> starts;
    for (int i = 0; i < opt.refined; ++i) {
        std::vector<double> c(6);
        for (double& v : c) v = rng.normal();
        starts.emplace_back(opt.budget * (0.2 + 0.8 * rng.uniform()), c);
    }

    TheoremResult res;
    for (double eps : eps_list) {
        TheoremEpsilon te;
        te.eps = eps;
        std::vector<std::pair<CandidateKind, TimeSignal>> all = family;
        for (const auto& [norm, c] : starts) {
            all.emplace_back(CandidateKind::GradientRefined,
                             refine_candidate(c, norm, eps, opt.k0, cfg, opt.refine_iterations));
        }
        te.min_final_norm = INFINITY;
        for (const auto& [kind, u] : all) {
            const Evaluation e = evaluate(u, eps, opt.k0, cfg);
            TheoremCandidate cand;
            cand.kind = kind;
            cand.norm_34 = norms::dual_sobolev_norm(u, 0.75);
            cand.final_norm = e.final_norm;
            cand.identity_gap = e.identity_gap;
            te.min_final_norm = std::min(te.min_final_norm, e.final_norm);
            te.max_identity_gap = std::max(te.max_identity_gap, e.identity_gap);
            te.candidates.push_back(cand);
        }
        te.kappa = eps > 0.0 ? te.min_final_norm / eps : 0.0;
        if (!all.empty()) {
            nonlinear::BurgersConfig fine = cfg;
            fine.n_t = 2 * cfg.n_t;
            te.gap_coarse = te.candidates.front().identity_gap;
            te.gap_fine = evaluate(all.front().second, eps, opt.k0, fine).identity_gap;
            te.gap_ratio = te.gap_fine > 0.0 ? te.gap_coarse / te.gap_fine : 0.0;
        }
        if (eps > 0.0 && !(te.min_final_norm > 0.0)) res.margin_positive = false;
        res.per_eps.push_back(std::move(te));
    }
    return res;
}

}  // namespace burgers::obstruction
