// Negative-order Sobolev norms of time signals through their zero extension
// to the real line:
//   |u|_{-s} = ( int_R |u_e^(xi)|^2 (1 + xi^2)^{-s} dxi )^{1/2},
//   u_e^(z) = (2 pi)^{-1/2} int_0^T u(t) e^{-i z t} dt.
// This is the whole-line surrogate for the dual of H^s(0,T); every report
// that prints one of these values says so.
//
// Transforms are exact for the piecewise-linear interpolant: each segment is
// integrated in closed form and the segment sums are one zero-padded FFT.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "burgers_lab/signals.hpp"

namespace burgers::norms {

using cplx = std::complex<double>;

inline constexpr const char* kSurrogateNote =
    "whole-line surrogate: L2(R) norm of the zero-extended transform weighted by "
    "(1+xi^2)^(-s); bounds the interval dual norm up to constants";

struct ComplexPath {
    double dxi = 0.0;
    std::vector<double> xi;        // -M dxi .. M dxi
    std::vector<cplx> values;
    double imag_shift = 0.0;       // transform evaluated at xi + i * imag_shift
    // Values of the (modulated) signal at t = 0 and t = T; they set the
    // 1/xi decay of the transform beyond the grid.
    double edge_left = 0.0;
    double edge_right = 0.0;
    int pad_factor = 0;

    // Transform at xi = m dxi for any integer m, including frequencies
    // beyond the stored grid. The segment sums are periodic in m with period
    // seg_a.size(), so only the closed-form segment kernels change.
    cplx value_at(long m) const;

    double step = 0.0;             // time step of the signal
    std::vector<cplx> seg_a;       // DFT of u_j e^{shift t_j}
    std::vector<cplx> seg_b;       // DFT of (u_{j+1} - u_j) e^{shift t_j}
};

// Exact transform of the piecewise-linear interpolant at one complex point.
cplx transform_at(const TimeSignal& u, cplx z);

// Grid spacing 2 pi / (pad T); the grid spans one period of the sampled
// sum on each side, |xi| <= 2 pi / dt. Requires pad_factor >= 8.
ComplexPath extend_and_transform(const TimeSignal& u, int pad_factor = 8);

// Transform of e^{(k0 pi)^2 t / 2} u(t), i.e. u_e^(xi + i (k0 pi)^2 / 2).
// pad_factor = 0 picks auto_pad(T).
ComplexPath modulated_transform(const TimeSignal& u, int k0, int pad_factor = 0);

// Smallest pad that keeps the trapezoid aliasing below e^{-35}.
int auto_pad(double T);

// int_R |path|^2 w(xi) dxi by trapezoid on the grid plus the tail beyond
// the grid, where |u^|^2 ~ (edge_left^2 + edge_right^2) / (2 pi xi^2) and
// w ~ tail_coeff |xi|^{-tail_power}.
double weighted_integral(const ComplexPath& path, const std::function<double(double)>& w,
                         double tail_coeff, double tail_power);

struct NormDetail {
    double value = 0.0;
    double grid_part = 0.0;    // squared
    double tail_part = 0.0;    // squared, asymptotic correction beyond the grid
    double tail_bound = 0.0;   // squared, worst case from |u^| <= |u|_{L1} / sqrt(2 pi)
    int pad_factor = 0;
};

NormDetail dual_sobolev_norm_detail(const ComplexPath& path, double s, double l1);
NormDetail dual_sobolev_norm_detail(const TimeSignal& u, double s, int pad_factor = 0);
double dual_sobolev_norm(const TimeSignal& u, double s, int pad_factor = 0);

// Norms for several orders from one transform.
std::vector<double> dual_sobolev_norms(const TimeSignal& u, const std::vector<double>& orders,
                                       int pad_factor = 0);

// |int |u|^2 dt - int |u^|^2 dxi| / int |u|^2 dt, with `images` further
// grid periods summed on each side before the asymptotic tail.
double plancherel_gap(const TimeSignal& u, int pad_factor = 8, int images = 8);

struct PrimitiveCheck {
    bool skipped = false;
    double lhs = 0.0;    // |U|_{-(s-1)}
    double rhs = 0.0;    // |u|_{-s}
    double ratio = 0.0;
};

PrimitiveCheck primitive_norm_check(const TimeSignal& u, double s);

struct InterpolationCheck {
    bool skipped = false;
    double lhs = 0.0;    // |u|_{-1}
    double rhs = 0.0;    // |u|_{-5/4}^{1/2} |u|_{-3/4}^{1/2}
    bool passed = false; // lhs <= rhs (1 + 1e-10)
};

InterpolationCheck interpolation_check(const TimeSignal& u);

}  // namespace burgers::norms
