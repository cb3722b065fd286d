// Uniformly sampled real signals on [0, T], read as piecewise-linear
// interpolants of their samples, plus the seeded families used by audits.
#pragma once

#include <functional>
#include <vector>

#include "burgers_lab/rng.hpp"

namespace burgers {

struct TimeSignal {
    double T = 0.0;
    std::vector<double> samples;  // steps()+1 values at t_j = j T / steps()

    int steps() const { return static_cast<int>(samples.size()) - 1; }
    double dt() const { return T / steps(); }
    double time(int j) const { return T * j / steps(); }
    // Piecewise-linear interpolant; zero outside [0, T].
    double at(double t) const;
};

TimeSignal constant_signal(double T, int steps, double value);
TimeSignal sampled_signal(double T, int steps, const std::function<double(double)>& f);

// Exact integrals of the piecewise-linear interpolant.
double l1_norm(const TimeSignal& u);
double l2_norm(const TimeSignal& u);
bool is_zero(const TimeSignal& u);

TimeSignal scaled(const TimeSignal& u, double factor);

// Resamples onto a grid of `steps` steps. Exact when the old knots are a
// subset of the new ones.
TimeSignal refine(const TimeSignal& u, int steps);

// Trigonometric polynomial with Gaussian coefficients, amplitude of mode m
// damped by (1+m)^{-decay}; rescaled to unit L2 norm.
TimeSignal band_limited_signal(CounterRng& rng, double T, int steps, int modes, double decay = 1.0);

// sin^2 bump of width h starting at t0, height 1/h (unit mass).
TimeSignal bump_signal(double T, int steps, double t0, double h);

}  // namespace burgers
