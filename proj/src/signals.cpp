#include "burgers_lab/signals.hpp"

#include <cmath>
#include <numbers>

#include "burgers_lab/errors.hpp"

namespace burgers {

double TimeSignal::at(double t) const {
    if (t < 0.0 || t > T || samples.empty()) return 0.0;
    const int n = steps();
    if (n == 0) return samples[0];
    const double s = t / T * n;
    int j = static_cast<int>(std::floor(s));
    if (j >= n) j = n - 1;
    const double theta = s - j;
    return (1.0 - theta) * samples[j] + theta * samples[j + 1];
}

TimeSignal constant_signal(double T, int steps, double value) {
    return TimeSignal{T, std::vector<double>(steps + 1, value)};
}

TimeSignal sampled_signal(double T, int steps, const std::function<double(double)>& f) {
    TimeSignal u{T, std::vector<double>(steps + 1)};
    for (int j = 0; j <= steps; ++j) u.samples[j] = f(u.time(j));
    return u;
}

double l1_norm(const TimeSignal& u) {
    const double h = u.dt();
    double acc = 0.0;
    for (int j = 0; j < u.steps(); ++j) {
        const double a = u.samples[j];
        const double b = u.samples[j + 1];
        if (a * b >= 0.0) {
            acc += 0.5 * h * (std::abs(a) + std::abs(b));
        } else {
            // Sign change inside the segment: two triangles.
            acc += 0.5 * h * (a * a + b * b) / (std::abs(a) + std::abs(b));
        }
    }
    return acc;
}

double l2_norm(const TimeSignal& u) {
    const double h = u.dt();
    double acc = 0.0;
    for (int j = 0; j < u.steps(); ++j) {
        const double a = u.samples[j];
        const double b = u.samples[j + 1];
        acc += h * (a * a + a * b + b * b) / 3.0;
    }
    return std::sqrt(acc);
}

bool is_zero(const TimeSignal& u) {
    for (double v : u.samples) {
        if (v != 0.0) return false;
    }
    return true;
}

TimeSignal scaled(const TimeSignal& u, double factor) {
    TimeSignal out = u;
    for (double& v : out.samples) v *= factor;
    return out;
}

TimeSignal refine(const TimeSignal& u, int steps) {
    return sampled_signal(u.T, steps, [&](double t) { return u.at(t); });
}

TimeSignal band_limited_signal(CounterRng& rng, double T, int steps, int modes, double decay) {
    std::vector<double> a(modes + 1), b(modes + 1);
    for (int m = 0; m <= modes; ++m) {
        const double amp = std::pow(1.0 + m, -decay);
        a[m] = amp * rng.normal();
        b[m] = amp * rng.normal();
    }
    TimeSignal u = sampled_signal(T, steps, [&](double t) {
        double v = a[0];
        for (int m = 1; m <= modes; ++m) {
            const double arg = 2.0 * std::numbers::pi * m * t / T;
            v += a[m] * std::cos(arg) + b[m] * std::sin(arg);
        }
        return v;
    });
    const double norm = l2_norm(u);
    if (norm > 0.0) u = scaled(u, 1.0 / norm);
    return u;
}

TimeSignal bump_signal(double T, int steps, double t0, double h) {
    if (h <= 0.0 || t0 < 0.0 || t0 + h > T) throw GuardError("bump must lie inside [0, T]");
    return sampled_signal(T, steps, [&](double t) {
        if (t <= t0 || t >= t0 + h) return 0.0;
        const double s = std::sin(std::numbers::pi * (t - t0) / h);
        return 2.0 * s * s / h;
    });
}

}  // namespace burgers
