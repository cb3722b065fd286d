// Null controls for the linearized system y_t - y_xx = u(t) by truncated
// moment matching.
//
// A time-only control never reaches even modes (the constant function has no
// even sine content), so only the odd part of the state can be steered.
// Mode k vanishes at T exactly when
//   int_0^T u(t) e^{(k pi)^2 t} dt = c_k = -(k pi / 2)(y0_k / sqrt 2).
// The moments are formed with e^{-(k pi)^2 T} divided out, so no weight is
// ever evaluated above e^0.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgers_lab/signals.hpp"
#include "burgers_lab/spectral_core.hpp"

namespace burgers::control {

using spectral::ModalField;

struct ParitySplit {
    ModalField in_M;       // even modes
    ModalField in_M_perp;  // odd modes
};

ParitySplit project_unreachable(const ModalField& y0);

// Rejects y0 whose even part exceeds 1e-12 in L2.
std::vector<double> moment_targets(const ModalField& y0, const std::vector<int>& odd_modes);

struct MomentProblem {
    double T = 1.0;
    std::vector<int> odd_modes;
    std::vector<double> targets;      // c_k, one per mode
    int degree = -1;                  // -1 means |odd_modes| + 4
    int n_t = 2000;                   // sampling of the returned control
    // Optional constraint u(0) = start_value, used to join a corrector
    // continuously to an earlier control.
    std::optional<double> start_value;
};

struct MomentSolution {
    TimeSignal u;
    std::vector<double> residuals;    // |m_k - c_k| / max(|c_k|, int |u| e^{(k pi)^2 t})
    double max_residual = 0.0;
    double gram_condition = 0.0;      // of the row-normalized constraint matrix
    int degree = 0;
};

// Least L2-norm control in the span of shifted Legendre polynomials of the
// given degree (read through their piecewise-linear interpolants on the
// output grid, so the moments are exact for the returned signal).
// Throws GuardError for more than 8 modes, non-odd or repeated modes, or a
// condition number above 1e14.
MomentSolution solve_moment_control(const MomentProblem& problem);

struct NullControlReport {
    std::vector<int> controlled_modes;
    std::vector<double> controlled_values;   // |a_k(T)|
    double max_controlled = 0.0;
    double y0_norm = 0.0;
    std::vector<int> tail_modes;             // odd k beyond the controlled set
    std::vector<double> tail_values;         // |a_k(T)|
    double tail_envelope = 0.0;              // max |a_k(T)| k^3 over the tail
    double control_l2 = 0.0;
    double gain = 0.0;                       // |u|_{L2} / |y0|
};

NullControlReport null_control_verify(const TimeSignal& u, const ModalField& y0, int K_model,
                                      const std::vector<int>& controlled_modes);

// Odd modes 1, 3, ..., k_max.
std::vector<int> odd_modes_up_to(int k_max);

struct ReturnToZero {
    TimeSignal u;                    // u_free on [0, T], corrector on [T, T_total]
    double T_free = 0.0;
    MomentSolution corrector;
    NullControlReport verify;        // zero initial state, horizon T_total
};

// Drives the listed odd modes of the zero-start linearized state to zero at
// T_total. The corrector starts from u_free(T), so the joined control is
// continuous. T_total <= 0 means 2T; (T_total - T) must be a whole number of
// steps of u_free.
ReturnToZero return_to_zero(const TimeSignal& u_free, double T_total,
                            const std::vector<int>& odd_modes, int K_model = 64);

}  // namespace burgers::control
