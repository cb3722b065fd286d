#include "burgers_lab/control.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "burgers_lab/errors.hpp"
#include "burgers_lab/expint.hpp"
#include "burgers_lab/heat.hpp"

namespace burgers::control {

using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

double mode_rate(int k) { return pi * pi * k * k; }

// Orthonormal shifted Legendre polynomials on [0, T] at t.
std::vector<double> legendre_row(int degree, double t, double T) {
    std::vector<double> out(degree + 1);
    const double x = 2.0 * t / T - 1.0;
    double p0 = 1.0, p1 = x;
    for (int m = 0; m <= degree; ++m) {
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
        out[m] = p * std::sqrt((2.0 * m + 1.0) / T);
    }
    return out;
}

// int_0^T v(t) e^{-lambda (T - t)} dt for the piecewise-linear interpolant.
double scaled_moment(const std::vector<double>& v, double lambda, double h) {
    const int n = static_cast<int>(v.size()) - 1;
    const auto sw = expint::step_weights(lambda, h);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc = sw.decay * acc + sw.w0 * v[j] + sw.w1 * v[j + 1];
    return acc;
}

void check_modes(const std::vector<int>& modes) {
    if (modes.size() > 8) throw GuardError("at most 8 moment conditions (conditioning guard)");
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] < 1 || modes[i] % 2 == 0) throw GuardError("moment modes must be odd");
        if (i > 0 && modes[i] <= modes[i - 1]) throw GuardError("moment modes must increase");
    }
}

}  // namespace

ParitySplit project_unreachable(const ModalField& y0) {
    ParitySplit s{ModalField(y0.K()), ModalField(y0.K())};
    for (int k = 1; k <= y0.K(); ++k) (k % 2 == 0 ? s.in_M : s.in_M_perp)[k] = y0[k];
    return s;
}

std::vector<double> moment_targets(const ModalField& y0, const std::vector<int>& odd_modes) {
    check_modes(odd_modes);
    if (spectral::l2_norm(project_unreachable(y0).in_M) > 1e-12) {
        throw GuardError("initial state not in the orthogonal complement of the even modes");
    }
    std::vector<double> c;
    for (int k : odd_modes) {
        const double yk = k <= y0.K() ? y0[k] : 0.0;
        c.push_back(-(k * pi / 2.0) * (yk / sqrt2));
    }
    return c;
}

MomentSolution solve_moment_control(const MomentProblem& problem) {
    check_modes(problem.odd_modes);
    if (problem.targets.size() != problem.odd_modes.size()) {
        throw GuardError("one target per moment mode required");
    }
    if (problem.n_t < 2) throw GuardError("n_t must be >= 2");
    const int nm = static_cast<int>(problem.odd_modes.size());
    const int degree = problem.degree < 0 ? nm + 4 : problem.degree;
    const int nb = degree + 1;
    const double T = problem.T;
    const int n = problem.n_t;
    const double h = T / n;

    // Basis sampled on the output grid.
    Eigen::MatrixXd Q(n + 1, nb);
    for (int j = 0; j <= n; ++j) {
        const auto row = legendre_row(degree, T * j / n, T);
        for (int m = 0; m < nb; ++m) Q(j, m) = row[m];
    }

    // Exact L2 Gram matrix of the interpolants.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nb, nb);
    for (int j = 0; j < n; ++j) {
        const Eigen::VectorXd a = Q.row(j).transpose();
        const Eigen::VectorXd b = Q.row(j + 1).transpose();
        M += h / 6.0 * (2.0 * a * a.transpose() + a * b.transpose() + b * a.transpose() +
                        2.0 * b * b.transpose());
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success) throw GuardError("basis Gram matrix not positive definite");
    const Eigen::MatrixXd L = llt.matrixL();

    const int rows = nm + (problem.start_value ? 1 : 0);
    Eigen::MatrixXd G(rows, nb);
    Eigen::VectorXd rhs(rows);
    for (int i = 0; i < nm; ++i) {
        const double lambda = mode_rate(problem.odd_modes[i]);
        for (int m = 0; m < nb; ++m) {
            std::vector<double> v(n + 1);
            for (int j = 0; j <= n; ++j) v[j] = Q(j, m);
            G(i, m) = scaled_moment(v, lambda, h);
        }
        // e^{-lambda T} c_k; underflows harmlessly to 0 for huge lambda T.
        rhs(i) = problem.targets[i] * std::exp(-lambda * T);
    }
    if (problem.start_value) {
        G.row(nm) = Q.row(0);
        rhs(nm) = *problem.start_value;
    }

    // Coefficients alpha with |u|^2 = alpha^T M alpha = |L^T alpha|^2.
    Eigen::MatrixXd A = L.triangularView<Eigen::Lower>().solve(G.transpose()).transpose();
    for (int i = 0; i < rows; ++i) {
        const double s = A.row(i).norm();
        if (s == 0.0) throw GuardError("degenerate moment row");
        A.row(i) /= s;
        rhs(i) /= s;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto sv = svd.singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!(cond <= 1e14)) {
        throw GuardError("moment matrix condition " + std::to_string(cond) +
                         " > 1e14; use fewer modes or a shorter T");
    }
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
    // Row scales of A, applied again when residuals are formed from samples.
    Eigen::VectorXd row_scale(rows);
    for (int i = 0; i < rows; ++i) row_scale(i) = (L.triangularView<Eigen::Lower>().solve(G.row(i).transpose())).norm();
    auto to_samples = [&](const Eigen::VectorXd& beta) -> Eigen::VectorXd {
        return Q * L.transpose().triangularView<Eigen::Upper>().solve(beta);
    };
    Eigen::VectorXd samples = to_samples(cod.solve(rhs));
    // Refinement on the samples themselves: the moments of the returned
    // signal are what the residual check reads, and forming Q alpha loses
    // digits when the Legendre coefficients cancel.
    for (int it = 0; it < 3; ++it) {
        const std::vector<double> v(samples.data(), samples.data() + n + 1);
        Eigen::VectorXd r(rows);
        for (int i = 0; i < nm; ++i) {
            r(i) = rhs(i) - scaled_moment(v, mode_rate(problem.odd_modes[i]), h) / row_scale(i);
        }
        if (problem.start_value) r(nm) = rhs(nm) - v[0] / row_scale(nm);
        samples += to_samples(cod.solve(r));
    }

    MomentSolution sol;
    sol.degree = degree;
    sol.gram_condition = cond;
    sol.u = TimeSignal{T, std::vector<double>(samples.data(), samples.data() + n + 1)};
    std::vector<double> abs_u(n + 1);
    for (int j = 0; j <= n; ++j) abs_u[j] = std::abs(sol.u.samples[j]);
    for (int i = 0; i < nm; ++i) {
        const double lambda = mode_rate(problem.odd_modes[i]);
        const double m = scaled_moment(sol.u.samples, lambda, h);
        const double c = problem.targets[i] * std::exp(-lambda * T);
        const double scale = std::max(std::abs(c), scaled_moment(abs_u, lambda, h));
        const double r = scale > 0.0 ? std::abs(m - c) / scale : 0.0;
        sol.residuals.push_back(r);
        sol.max_residual = std::max(sol.max_residual, r);
    }
    return sol;
}

std::vector<int> odd_modes_up_to(int k_max) {
    std::vector<int> out;
    for (int k = 1; k <= k_max; k += 2) out.push_back(k);
    return out;
}

NullControlReport null_control_verify(const TimeSignal& u, const ModalField& y0, int K_model,
                                      const std::vector<int>& controlled_modes) {
    NullControlReport r;
    const int k_max = controlled_modes.empty() ? 0 : controlled_modes.back();
    if (K_model < std::max(k_max, y0.K())) throw GuardError("K_model must cover the controlled modes and y0");
    const spectral::Trajectory y = heat::heat_modal_solve(u, y0, K_model);
    const ModalField& end = y.fields.back();
    r.controlled_modes = controlled_modes;
    for (int k : controlled_modes) {
        r.controlled_values.push_back(std::abs(end[k]));
        r.max_controlled = std::max(r.max_controlled, std::abs(end[k]));
    }
    for (int k = k_max + 1; k <= K_model; ++k) {
        if (k % 2 == 0) continue;
        r.tail_modes.push_back(k);
        r.tail_values.push_back(std::abs(end[k]));
        r.tail_envelope = std::max(r.tail_envelope, std::abs(end[k]) * k * k * k);
    }
    r.y0_norm = spectral::l2_norm(y0);
    r.control_l2 = l2_norm(u);
    r.gain = r.y0_norm > 0.0 ? r.control_l2 / r.y0_norm : 0.0;
    return r;
}

ReturnToZero return_to_zero(const TimeSignal& u_free, double T_total,
                            const std::vector<int>& odd_modes, int K_model) {
    const double T = u_free.T;
    if (T_total <= 0.0) T_total = 2.0 * T;
    if (!(T_total > T)) throw GuardError("T_total must exceed the free horizon");
    const double h = u_free.dt();
    const double steps_real = (T_total - T) / h;
    const int n_c = static_cast<int>(std::lround(steps_real));
    if (n_c < 1 || std::abs(steps_real - n_c) > 1e-9 * steps_real) {
        throw GuardError("T_total - T must be a whole number of control steps");
    }
    const int k_max = odd_modes.empty() ? 1 : odd_modes.back();
    K_model = std::max(K_model, k_max);

    const spectral::Trajectory y_free = heat::heat_modal_solve(u_free, ModalField(K_model), K_model);
    ModalField state_odd(K_model);
    for (int k = 1; k <= K_model; k += 2) state_odd[k] = y_free.fields.back()[k];

    MomentProblem p;
    p.T = T_total - T;
    p.odd_modes = odd_modes;
    p.targets = moment_targets(state_odd, odd_modes);
    p.n_t = n_c;
    p.start_value = u_free.samples.back();

    ReturnToZero out;
    out.T_free = T;
    out.corrector = solve_moment_control(p);
    out.u.T = T_total;
    out.u.samples = u_free.samples;
    out.u.samples.insert(out.u.samples.end(), out.corrector.u.samples.begin() + 1,
                         out.corrector.u.samples.end());
    out.verify = null_control_verify(out.u, ModalField(K_model), K_model, odd_modes);
    return out;
}

}  // namespace burgers::control
