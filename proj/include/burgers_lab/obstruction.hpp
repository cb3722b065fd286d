// Numerical experiments on the quadratic obstruction to small-time null
// controllability of the controlled Burgers equation
//   y_t - y_xx + y y_x = u(t),  y(t,0) = y(t,1) = 0.
//
// Notation. phi_k(t,x) = e^{(k pi)^2 t} sin(k pi x). y1 solves the linear
// system from rest, y2 solves y2_t - y2_xx = -y1 y1_x from rest, and
// dy = y - y1 - y2. For even k the pairing
//   J_k(y1) = int_0^T int_0^1 y1^2 phi_{k,x} dx dt
// has a frequency form kpi int |u1^(z + i(k pi)^2/2)|^2 Omega_k(z) dz when
// y1 returns to zero, and Omega_2 < 0 forces J_2 < 0.
#pragma once

#include <cstdint>
#include <vector>

#include "burgers_lab/burgers.hpp"
#include "burgers_lab/control.hpp"
#include "burgers_lab/rng.hpp"
#include "burgers_lab/signals.hpp"
#include "burgers_lab/spectral_core.hpp"

namespace burgers::obstruction {

using spectral::ModalField;
using spectral::Trajectory;

// A control on [0, T_total] that is random band-limited on [0, T_free] and
// then drives the odd modes 1..K_ctrl of the linear state back to zero.
struct AdmissibleControl {
    TimeSignal u;
    double T_free = 0.0;
    int K_ctrl = 0;
    double terminal_controlled = 0.0;  // max |y1_k(T_total)| over controlled k
    double tail_envelope = 0.0;
};

AdmissibleControl admissible_control(CounterRng& rng, double T_free, double T_total, int K_ctrl,
                                     int n_free = 1000, int K_model = 64);
// Same with a given free part.
AdmissibleControl admissible_control(const TimeSignal& u_free, double T_total, int K_ctrl,
                                     int K_model = 64);

struct ParsevalResult {
    bool skipped = false;
    int k = 0;
    double lhs = 0.0;              // J_k(y1) on [0, T_total]
    double rhs_closed = 0.0;       // k pi int |v^|^2 Omega_k
    double rhs_modal = 0.0;        // k pi int int |y1^|^2 cos(k pi x), per-mode transforms
    double gap_closed = 0.0;       // relative to |lhs|
    double gap_modal = 0.0;
    double terminal_norm = 0.0;    // |y1(T_total)|_{L2}
    int pad_factor = 0;
};

// Both frequency routes against the time-domain pairing. k must be even.
// y1 is solved on a grid time_refine times finer than u1's; the pairing
// reads y1 as piecewise linear in time, an O(dt^2) error that would
// otherwise hide the uncontrolled tail.
ParsevalResult parseval_identity_check(const TimeSignal& u1, int k = 2, int K_model = 64,
                                       int time_refine = 4);

struct QuadraticFormResult {
    bool skipped = false;
    double lhs = 0.0;         // J_k0(y1)
    double norm2 = 0.0;       // |u1|_{-5/4}^2 (whole-line surrogate)
    double ratio = 0.0;       // -lhs / norm2
};

// k0 must be 2 or 10, and k0 = 10 needs T <= 0.1.
QuadraticFormResult quadratic_form(const TimeSignal& u1, int k0 = 2, int K_model = 64);

struct SecondOrderResult {
    bool skipped = false;
    double lhs = 0.0;          // int y2(T) phi_k0(T) dx
    double rhs = 0.0;          // J_k0(y1) / 2
    double gap = 0.0;          // relative
    double target = 0.0;       // int y2(T) (-sin(k0 pi x)) dx
    double target_ratio = 0.0; // target / |u1|_{-5/4}^2
};

SecondOrderResult second_order_target(const TimeSignal& u1, int k0 = 2, int K_model = 64);

struct PowerSeriesResult {
    bool skipped = false;
    double norm_34 = 0.0, norm_54 = 0.0, norm_1 = 0.0, y0_norm = 0.0;
    // Each left side divided by the right side of its bound, constants set to 1:
    //   y2_yt  |y2|_{Y}        / |u|_{-3/4}^2
    //   y2_l2  |y2|_{L2}       / (|u|_{-5/4} |u|_{-3/4})
    //   dy_yt  |dy|_{Y}        / (|u|_{-3/4}^3 + |y0|)
    //   dy_l2  |dy|_{L2}       / (|u|_{-5/4}^{3/2} |u|_{-3/4}^{3/2} + |y0|)
    //   y_h1   |y|_{L2 H1}     / (|u|_{-3/4} + |y0|)
    //   y_l2   |y|_{L2}        / (|u|_{-1} + |y0|)
    double y2_yt = 0.0, y2_l2 = 0.0, dy_yt = 0.0, dy_l2 = 0.0, y_h1 = 0.0, y_l2 = 0.0;
    double dy_l2_norm = 0.0;
    bool finite = true;
};

// y0 = -eps sin(k0 pi x). cfg.T must equal u.T.
PowerSeriesResult power_series_audit(const TimeSignal& u, double eps, int k0,
                                     const nonlinear::BurgersConfig& cfg);

struct PowerSeriesStudy {
    std::vector<PowerSeriesResult> samples;
    double max_y2_yt = 0.0, max_y2_l2 = 0.0, max_dy_yt = 0.0, max_dy_l2 = 0.0;
    double max_y_h1 = 0.0, max_y_l2 = 0.0;
    bool all_finite = true;
    // |dy|_{L2}(u, eps) / |dy|_{L2}(u/2, eps/2) for the first sample.
    double halving_factor = 0.0;
};

// Random band-limited u rescaled to |u|_{-3/4} = norm_34.
PowerSeriesStudy power_series_study(CounterRng& rng, int samples, double eps, double norm_34,
                                    int k0, const nonlinear::BurgersConfig& cfg);

struct SymmetryResult {
    std::vector<double> times;
    std::vector<double> values;    // int y1 y2 cos(k0 pi x) dx on the grid
    double max_abs = 0.0;
    double scale = 0.0;            // max_t |y1(t)| |y2(t)|
    double relative = 0.0;         // max_abs / scale
};

// inject != 0 adds the forcing inject * e_2 to the y1 equation. That breaks
// the reflection symmetry of y1, so the cancellation must then fail.
SymmetryResult symmetry_cancellation(const TimeSignal& u, int k0 = 2, int K = 32,
                                     double inject = 0.0);

enum class CandidateKind { Random, MomentMatched, GradientRefined };

struct TheoremCandidate {
    CandidateKind kind = CandidateKind::Random;
    double norm_34 = 0.0;
    double final_norm = 0.0;       // |y(T)|_{L2}
    double identity_gap = 0.0;     // |J_k0(y) - sqrt2 e^{(k0 pi)^2 T} y_k0(T) - eps|
};

struct TheoremEpsilon {
    double eps = 0.0;
    std::vector<TheoremCandidate> candidates;
    double min_final_norm = 0.0;
    double kappa = 0.0;            // min_final_norm / eps
    double max_identity_gap = 0.0;
    // Gap of the first candidate at n_t and at 2 n_t; the ratio is about 4
    // for a second-order pairing.
    double gap_coarse = 0.0, gap_fine = 0.0, gap_ratio = 0.0;
};

struct TheoremOptions {
    int k0 = 2;
    double T = 0.5;
    double budget = 0.1;           // bound on |u|_{-3/4}
    int family_size = 20;          // random + moment-matched + refined
    int refined = 4;               // gradient-refined candidates among them
    int refine_iterations = 4;
    nonlinear::BurgersConfig cfg{};   // K, n_t, scheme; T is overwritten
};

struct TheoremResult {
    std::vector<TheoremEpsilon> per_eps;
    bool margin_positive = true;   // min_final_norm > 0 for every eps > 0
};

TheoremResult theorem_experiment(CounterRng& rng, const std::vector<double>& eps_list,
                                 const TheoremOptions& opt);

}  // namespace burgers::obstruction
