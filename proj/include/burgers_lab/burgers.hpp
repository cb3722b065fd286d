// Viscous Burgers equation on (0,1) with Dirichlet conditions,
//   y_t - y_xx + y y_x = u(t) + s(t, x),
// where u is spatially constant and s is an optional modal source used for
// manufactured solutions.
//
// Diffusion is integrated exactly per mode. The control and the source are
// read as piecewise-linear in time and integrated exactly as well; only the
// quadratic term is explicit (first order, or the two-stage exponential
// Runge-Kutta scheme of second order). The product is formed on a sine grid
// of dealias * K points, which is alias-free for dealias >= 2.
#pragma once

#include <functional>
#include <vector>

#include "burgers_lab/signals.hpp"
#include "burgers_lab/spectral_core.hpp"

namespace burgers::nonlinear {

using spectral::ModalField;
using spectral::Trajectory;

enum class Scheme { IMEX1, IMEX2 };

struct BurgersConfig {
    int K = 32;
    int n_t = 1000;
    double T = 1.0;
    Scheme scheme = Scheme::IMEX2;
    int dealias = 2;
    bool nonlinear = true;          // false drops y y_x
    double blowup_threshold = 1e3;  // L2 norm that aborts the solve
};

// Modal source s(t) with K coefficients.
using ModalSource = std::function<ModalField(double t)>;

void validate(const BurgersConfig& cfg);

// u is sampled at the solver's time grid through its piecewise-linear
// interpolant. Throws BlowUpError when the L2 norm exceeds the threshold.
Trajectory burgers_solve(const TimeSignal& u, const ModalField& y0, const BurgersConfig& cfg,
                         const ModalSource& source = {});

// Modal coefficients of y y_x, alias-free on a grid of dealias * K points.
class ProductEvaluator {
public:
    ProductEvaluator(int K, int dealias);
    ModalField operator()(const ModalField& y);

private:
    int K_;
    spectral::SineGrid grid_;
};

// Manufactured solution y* = e^{-t} e_1 + 0.1 e^{-2t} e_2 and the source
// that makes it exact.
ModalField mms_exact(double t, int K);
ModalField mms_source(double t, int K);

struct MmsStudy {
    std::vector<int> n_t;
    std::vector<double> errors;   // L2 error at T
    std::vector<double> orders;   // log2 of successive error ratios
    double observed_order = 0.0;  // last entry of orders
};

MmsStudy mms_convergence(const BurgersConfig& base, const std::vector<int>& n_t_levels);

// Residual of the weak formulation against the caloric test functions
// phi(t,x) = e^{-(k pi)^2 (tau - t)} e_k(x), k = 1..k_test, at n_test_times
// values of tau spread over the grid. With these tests the y (phi_t + phi_xx)
// term vanishes and the source integral is exact for piecewise-linear data.
// Returns the maximum absolute residual.
double weak_residual(const Trajectory& traj, const TimeSignal& u, int k_test, int n_test_times,
                     bool nonlinear = true, int dealias = 2);

// 1/2(|y(T)|^2 - |y0|^2) + int |y_x|^2 - int u int y. Inside each step the
// modes are rebuilt from the exact update with the quadratic term read as
// linear in time.
double nonlinear_energy_residual(const Trajectory& traj, const TimeSignal& u, int dealias = 2);

struct WellposednessEntry {
    bool skipped = false;
    double yt_norm = 0.0;
    double data_norm = 0.0;  // |u|_{L1} + |y0|_{L2}
    double ratio = 0.0;
};

struct WellposednessAudit {
    std::vector<WellposednessEntry> entries;
    int skipped = 0;
    double max_ratio = 0.0;
    // |y(half data)|_{Y_T} / |y(data)|_{Y_T} for the first non-skipped sample.
    double halving_ratio = 0.0;
};

// Random small data: u band-limited with L2 norm amp_u, y0 with L2 norm amp_y.
// The first sample is the zero pair.
WellposednessAudit wellposedness_audit(CounterRng& rng, int samples, const BurgersConfig& cfg,
                                       double amp_u, double amp_y);

}  // namespace burgers::nonlinear
