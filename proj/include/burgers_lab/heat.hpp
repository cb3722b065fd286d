// Modal solvers for the heat equation on (0,1) with Dirichlet conditions,
// y_t - y_xx = f, and the kernel machinery built on them.
//
// Each mode obeys a_k' + (k pi)^2 a_k = f_k. Sources are read as
// piecewise-linear in time and integrated exactly, so the only time error
// comes from that interpolation.
#pragma once

#include <utility>
#include <vector>

#include "burgers_lab/expint.hpp"
#include "burgers_lab/signals.hpp"
#include "burgers_lab/spectral_core.hpp"

namespace burgers::heat {

using spectral::ModalField;
using spectral::Trajectory;

// Coefficient of the constant function 1 on e_k: sqrt(2)(1 - (-1)^k) / (k pi).
double omega_coefficient(int k);

// One step of a' = -lambda a + g(s) with g linear from g0 to g1 over [0, h]:
// the end value and the integrals of a^2 and a g across the step, from the
// exact solution a(s) = A e^{-lambda s} + B + C s. Steps with lambda h < 1
// use 8-point Gauss-Legendre on the same reconstruction, which avoids the
// cancellation between A and B.
class ModeStep {
public:
    ModeStep(double lambda, double h);
    double advance(double a0, double g0, double g1) const;
    // {int a^2, int a g}
    std::pair<double, double> integrals(double a0, double g0, double g1) const;
    // {int a^2, int a p} for another linear function p from p0 to p1
    std::pair<double, double> integrals(double a0, double g0, double g1, double p0,
                                        double p1) const;

private:
    double lambda_, h_, x_;
    expint::StepWeights full_;
    double p1_ = 0.0, p1d_ = 0.0, psi1_ = 0.0;
    std::vector<double> theta_, gw_;
    std::vector<expint::StepWeights> sub_;
};

// Response to the spatially constant control u(t). n_t must be a multiple
// of u.steps() (0 means "use u's own grid").
Trajectory heat_modal_solve(const TimeSignal& u, const ModalField& y0, int K, int n_t = 0);

// Response to a modal source given at the n_t+1 grid times of [0, T].
Trajectory heat_forced_solve(const std::vector<ModalField>& f, const ModalField& y0, double T);

// Modal coefficients of y y_x for one field, computed on a SineGrid.
std::vector<double> product_source(spectral::SineGrid& grid, const ModalField& y, int K_out);

// y2_t - y2_xx = -y1 y1_x with y2(0) = 0. K_out defaults to 2K, the full
// content of the quadratic source; n_grid defaults to 8K.
Trajectory second_order_solve(const Trajectory& y1, int K_out = 0, int n_grid = 0);

// U(t) = int_0^t u, exact for the piecewise-linear interpolant.
TimeSignal primitive_U(const TimeSignal& u);

// int_0^T u(t) e^{lambda t} dt, exact for the piecewise-linear interpolant.
double exp_moment(const TimeSignal& u, double lambda);

struct KernelBatch {
    double gamma = 0.0;
    int K = 0;
    double T = 0.0;
    std::vector<std::vector<double>> a;       // a[k-1][j]
    std::vector<double> mode_integrals;       // int_0^infinity a_k^2 dt
    double integral_sum = 0.0;                // sum over k
};

// a_k(t) = k^gamma int_0^t e^{-pi^2 k^2 (t-s)} V(s) ds, with the free decay
// after T integrated in closed form.
KernelBatch spectral_kernel(double gamma, const TimeSignal& V, int K);

// sqrt(2) pi^{3/2} sum_k k^{2 gamma} / (pi^4 k^4 + xi^2); K_trunc = 0 sums
// the full series.
double g_gamma_hat(double gamma, double xi, int K_trunc = 0);

// Energy identity residual
//   1/2 (|y(T)|^2 - |y0|^2) + int |y_x|^2 - int int f y,
// with every step reconstructed exactly from the modal update and
// integrated by 8-point Gauss-Legendre.
double energy_residual(const Trajectory& traj, const TimeSignal& u);
double energy_residual(const Trajectory& traj, const std::vector<ModalField>& f);

// (e^{pi^2 k^2 T} a_k(T) - y0_k - omega_k int_0^T u e^{pi^2 k^2 t} dt) divided by
// the largest of the three terms, which grow like e^{pi^2 k^2 T}.
double ipp_linear_gap(const TimeSignal& u, const ModalField& y0, const Trajectory& traj, int k);

struct HeatAuditEntry {
    bool skipped = false;
    double ratio_h1 = 0.0;    // |y|_{L2 H1} / |u|_{-3/4}
    double ratio_l2 = 0.0;    // |y - U|_{L2 L2} / |u|_{-5/4}
};

struct HeatAudit {
    std::vector<HeatAuditEntry> entries;
    int skipped = 0;
    double max_h1 = 0.0, min_h1 = 0.0;
    double max_l2 = 0.0, min_l2 = 0.0;
    double spread_h1 = 0.0, spread_l2 = 0.0;  // max / min over non-skipped
};

HeatAudit estimate_audit_heat(const std::vector<TimeSignal>& samples, int K);

// |y(T)| / |f|_{L1} for y_t - y_xx = f_x with f = g(t) h(x), supp g in [0, T/2].
struct SourceAudit {
    std::vector<double> ratios;
    double max_ratio = 0.0;
};
SourceAudit audit_fx_l1(CounterRng& rng, int samples, double T, int n_t, int K);
// |y|_{L2 L2} / |f|_{L1 H^{-1}} for modal sources f, a computable proxy of
// the dual-of-C(H^1_0) bound.
SourceAudit audit_dual_source(CounterRng& rng, int samples, double T, int n_t, int K);

}  // namespace burgers::heat
