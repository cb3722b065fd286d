// Exponential-integrator weights for one step of a' = -lambda a + f(t)
// with f linear across the step:
//   a(h) = e^{-x} a(0) + h [ f(0) (phi1(x) - phi2(x)) + f(h) phi2(x) ],  x = lambda h.
#pragma once

#include <cmath>

namespace burgers::expint {

// (1 - e^{-x}) / x
inline double phi1(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - 0.5 * x;
    return -std::expm1(-x) / x;
}

// (x - 1 + e^{-x}) / x^2
inline double phi2(double x) {
    if (std::abs(x) < 0.5) {
        // Taylor series: sum_{n>=0} (-x)^n / (n+2)!
        double term = 0.5;
        double sum = term;
        for (int n = 1; n < 20; ++n) {
            term *= -x / (n + 2);
            sum += term;
        }
        return sum;
    }
    return (x + std::expm1(-x)) / (x * x);
}

struct StepWeights {
    double decay;  // e^{-x}
    double w0;     // multiplies f at the left end
    double w1;     // multiplies f at the right end
};

inline StepWeights step_weights(double lambda, double h) {
    const double x = lambda * h;
    const double p1 = phi1(x);
    const double p2 = phi2(x);
    return {std::exp(-x), h * (p1 - p2), h * p2};
}

}  // namespace burgers::expint
