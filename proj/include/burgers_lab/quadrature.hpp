// Gauss-Legendre rules and an adaptive panel integrator.
//
// A panel is accepted when the 32-point rule on the whole panel agrees with
// the sum over its two halves. Rejected panels are bisected, at most
// `max_level` times.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include "burgers_lab/errors.hpp"

namespace burgers::quad {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; cached per n.
const Rule& gauss_legendre(int n);

template <class F>
auto fixed_panel(F&& f, double a, double b, const Rule& rule) {
    using R = std::decay_t<decltype(f(a))>;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    R acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return acc * half;
}

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_level = 20;
    int order = 32;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class F, class R>
R refine(F& f, double a, double b, R whole, const Rule& rule, double tol, int level,
         int max_level, double& worst) {
    const double mid = 0.5 * (a + b);
    const R left = fixed_panel(f, a, mid, rule);
    const R right = fixed_panel(f, mid, b, rule);
    const R sum = left + right;
    const double err = magnitude(sum - whole);
    if (err <= tol) {
        return sum;
    }
    if (level >= max_level) {
        worst = std::max(worst, err);
        return sum;
    }
    return refine(f, a, mid, left, rule, 0.5 * tol, level + 1, max_level, worst) +
           refine(f, mid, b, right, rule, 0.5 * tol, level + 1, max_level, worst);
}

}  // namespace detail

// Integrates f over [a, b] split first into `panels` equal panels.
// Throws ConvergenceError carrying the achieved estimate if any panel
// fails to converge within max_level bisections.
template <class F>
auto integrate(F&& f, double a, double b, int panels = 1, AdaptiveOptions opt = {}) {
    using R = std::decay_t<decltype(f(a))>;
    const Rule& rule = gauss_legendre(opt.order);
    if (panels < 1) panels = 1;
    const double width = (b - a) / panels;

    std::vector<R> coarse(panels);
    double scale = 0.0;
    for (int p = 0; p < panels; ++p) {
        coarse[p] = fixed_panel(f, a + p * width, a + (p + 1) * width, rule);
        scale += detail::magnitude(coarse[p]);
    }
    const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);

    R total{};
    double worst = 0.0;
    for (int p = 0; p < panels; ++p) {
        total += detail::refine(f, a + p * width, a + (p + 1) * width, coarse[p], rule,
                                tol / panels, 0, opt.max_level, worst);
    }
    if (worst > 0.0) {
        throw ConvergenceError("adaptive quadrature did not converge after " +
                                   std::to_string(opt.max_level) + " levels",
                               detail::magnitude(total));
    }
    return total;
}

}  // namespace burgers::quad
