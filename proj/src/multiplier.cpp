#include "burgers_lab/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "burgers_lab/errors.hpp"
#include "burgers_lab/quadrature.hpp"

namespace burgers::multiplier {

using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

constexpr cplx I_UNIT{0.0, 1.0};

double kpi2(int k) { return (k * pi) * (k * pi); }

void require_mode(int k) {
    if (k < 1) throw GuardError("mode index must be >= 1");
}

void require_even(int k) {
    require_mode(k);
    if (k % 2 != 0) throw GuardError("closed form requires even k");
}

void require_nonnegative(double z) {
    if (z < 0.0) throw GuardError("P_k and Q_k are defined for z >= 0; use evenness");
}

// Oscillation-scale panel count for integrands on [0, 1].
int panels_for(int k, double im) {
    const double freq = std::max(std::abs(im), k * pi);
    return std::max(1, static_cast<int>(std::ceil(freq / (2.0 * pi))));
}

// Scaled pieces e^{-2R} P, e^{-2R} Q, e^{-2R} |e^{L1} - e^{L2}|^2.
struct Scaled {
    double P;
    double Q;
    double D;
};

Scaled scaled_pq(double R, double Im) {
    const double em1 = std::exp(-R);
    const double em2 = std::exp(-2.0 * R);
    const double ci = std::cos(Im);
    const double si = std::sin(Im);
    Scaled s;
    s.P = -std::expm1(-4.0 * R) + 2.0 * em1 * std::expm1(-2.0 * R) * ci;
    s.Q = -2.0 * (em1 + em1 * em2 - 2.0 * ci * em2) * si;
    s.D = 1.0 + em2 * em2 - 2.0 * em2 * std::cos(2.0 * Im);
    return s;
}

}  // namespace

cplx lambda1(int k, double z) {
    require_mode(k);
    const double c = kpi2(k);
    const double a = std::hypot(z, 0.5 * c);
    // sqrt(a/2 - c/4) rewritten as |z| / sqrt(2a + c) to avoid cancellation.
    const double re = std::abs(z) / std::sqrt(2.0 * a + c);
    const double im = 0.5 * std::sqrt(2.0 * a + c);
    return {re, z < 0.0 ? -im : im};
}

LambdaPair lambda_pair(int k, double z) {
    const cplx l1 = lambda1(k, z);
    return LambdaPair{k, z, l1, -l1};
}

cplx principal_root(cplx w) {
    const double r = std::abs(w);
    if (r == 0.0) return {0.0, 0.0};
    const double x = w.real();
    const double y = w.imag();
    if (x >= 0.0) {
        const double re = std::sqrt(0.5 * (r + x));
        return {re, y / (2.0 * re)};
    }
    // On the negative real axis (y == 0) the root is +i sqrt(r).
    double im = std::sqrt(0.5 * (r - x));
    if (y < 0.0) im = -im;
    return {y / (2.0 * im), im};
}

double pk(int k, double z) {
    require_mode(k);
    require_nonnegative(z);
    const cplx l = lambda1(k, z);
    const double R = l.real();
    const double Im = l.imag();
    // e^{2R} - e^{-2R} - 2 Re(e^{L} - e^{-L}) with Re(e^{L} - e^{-L}) = 2 sinh(R) cos(Im)
    return 2.0 * std::sinh(2.0 * R) - 4.0 * std::sinh(R) * std::cos(Im);
}

double pk_definition(int k, double z) {
    require_mode(k);
    require_nonnegative(z);
    const cplx l = lambda1(k, z);
    const double m = std::norm(std::exp(-l) - 1.0);
    return m * std::expm1(2.0 * l.real());
}

double pk_lower_bound(int k, double z) {
    require_mode(k);
    require_nonnegative(z);
    const double R = lambda1(k, z).real();
    return 2.0 * std::sinh(2.0 * R) - 4.0 * std::sinh(R);
}

double qk(int k, double z) {
    require_mode(k);
    require_nonnegative(z);
    const cplx l = lambda1(k, z);
    const double R = l.real();
    const double Im = l.imag();
    return -2.0 * (2.0 * std::cosh(R) - 2.0 * std::cos(Im)) * std::sin(Im);
}

double qk_definition(int k, double z) {
    require_mode(k);
    require_nonnegative(z);
    const cplx l = lambda1(k, z);
    const cplx prod = (std::exp(-l) - 1.0) * (std::exp(std::conj(l)) - 1.0) *
                      (std::exp(2.0 * I_UNIT * l.imag()) - 1.0);
    return prod.imag();
}

double theta_closed(int k, double z) {
    require_even(k);
    z = std::abs(z);
    const double c = kpi2(k);
    const double a = std::hypot(z, 0.5 * c);
    const cplx l = lambda1(k, z);
    const double A = (2.0 * c + a) * pk(k, z) * l.real();
    const double B = (2.0 * c - a) * qk(k, z) * l.imag();
    return -2.0 * (A + B) / (a * a);
}

double theta_quadrature(int k, double z) {
    require_mode(k);
    const cplx l1 = lambda1(k, z);
    const cplx l2 = -l1;
    const cplx e1 = std::exp(l1);
    const cplx e2 = std::exp(l2);
    const cplx A = e2 - 1.0;
    const cplx B = 1.0 - e1;
    const cplx C = e1 - e2;
    auto f = [&](double x) {
        const cplx v = A * std::exp(l1 * x) + B * std::exp(l2 * x) + C;
        return std::norm(v) * std::cos(k * pi * x);
    };
    return quad::integrate(f, 0.0, 1.0, panels_for(k, l1.imag()));
}

IValues i_decomposition(int k, double z) {
    require_even(k);
    require_nonnegative(z);
    const double c = kpi2(k);
    const double a = std::hypot(z, 0.5 * c);
    const cplx l = lambda1(k, z);
    const double R = l.real();
    const double Im = l.imag();
    const double P = pk(k, z);
    const double Q = qk(k, z);
    IValues I{};
    I[0] = R * P / a;
    I[1] = I[0];
    I[2] = -2.0 * Im * Q / a;
    I[3] = -2.0 * (P * (0.5 * c * R + z * Im) - Q * (z * R - 0.5 * c * Im)) / (a * a);
    I[4] = I[3];
    return I;
}

IValues i_quadrature(int k, double z) {
    require_mode(k);
    const cplx l1 = lambda1(k, z);
    const cplx l2 = -l1;
    const cplx e1 = std::exp(l1);
    const cplx e2 = std::exp(l2);
    const cplx A = e2 - 1.0;
    const cplx B = 1.0 - e1;
    const cplx C = e1 - e2;
    const int panels = panels_for(k, l1.imag());
    auto moment = [&](cplx rate) {
        return quad::integrate(
            [&](double x) { return std::exp(rate * x) * std::cos(k * pi * x); }, 0.0, 1.0, panels);
    };
    IValues I{};
    I[0] = std::norm(A) * moment(2.0 * l1.real()).real();
    I[1] = std::norm(B) * moment(2.0 * l2.real()).real();
    I[2] = 2.0 * (A * std::conj(B) * moment(l1 + std::conj(l2))).real();
    I[3] = 2.0 * (A * std::conj(C) * moment(l1)).real();
    I[4] = 2.0 * (B * std::conj(C) * moment(l2)).real();
    return I;
}

double psi(int k, cplx zc) {
    require_mode(k);
    if (zc == cplx{0.0, 0.0}) throw GuardError("zc = 0 is excluded");
    const cplx l1 = principal_root(I_UNIT * zc);
    const cplx l2 = -l1;
    const cplx e1 = std::exp(l1);
    const cplx e2 = std::exp(l2);
    const cplx A = e2 - 1.0;
    const cplx B = 1.0 - e1;
    const cplx C = e1 - e2;
    auto f = [&](double x) {
        const cplx v = A * std::exp(l1 * x) + B * std::exp(l2 * x) + C;
        return std::norm(v) * std::cos(k * pi * x);
    };
    return quad::integrate(f, 0.0, 1.0, panels_for(k, l1.imag()));
}

double phi_cap(int k, cplx zc) {
    const double value = psi(k, zc);
    const cplx l1 = principal_root(I_UNIT * zc);
    const double d = std::norm(std::exp(l1) - std::exp(-l1));
    return value / (std::norm(zc) * d);
}

double omega(int k, double z) {
    require_even(k);
    z = std::abs(z);
    const double c = kpi2(k);
    const double a2 = z * z + 0.25 * c * c;
    const double a = std::sqrt(a2);
    const cplx l = lambda1(k, z);
    const Scaled s = scaled_pq(l.real(), l.imag());
    const double A = (2.0 * c + a) * s.P * l.real();
    const double B = (2.0 * c - a) * s.Q * l.imag();
    return -2.0 * (A + B) / (a2 * a2 * s.D);
}

MultiplierSample sample(int k, double z) {
    require_even(k);
    MultiplierSample m;
    m.k = k;
    m.z = z;
    m.lambda = lambda_pair(k, z);
    const double az = std::abs(z);
    m.P = pk(k, az);
    m.Q = qk(k, az);
    m.Theta = theta_closed(k, z);
    m.Omega = omega(k, z);
    m.I = i_decomposition(k, az);
    return m;
}

double sign_threshold(int k) { return 3.0 * kpi2(k) / (2.0 * std::sqrt(7.0)); }

double default_scan_range(int k) { return std::max(200.0, 2.0 * sign_threshold(k)); }

SignScan sign_scan(int k, double z_max, int n) {
    require_even(k);
    if (n < 2 || !(z_max > 0.0)) throw GuardError("scan needs n >= 2 and z_max > 0");
    SignScan s;
    s.k = k;
    s.z_max = z_max;
    s.n = n;
    s.threshold = sign_threshold(k);
    s.z.resize(n);
    s.omega.resize(n);
    s.max_omega = -std::numeric_limits<double>::infinity();
    bool beyond = true;
    bool everywhere = true;
    for (int i = 0; i < n; ++i) {
        const double z = -z_max + 2.0 * z_max * i / (n - 1);
        const double w = omega(k, z);
        s.z[i] = z;
        s.omega[i] = w;
        if (w > s.max_omega) {
            s.max_omega = w;
            s.argmax_z = z;
        }
        if (!(w < 0.0)) {
            everywhere = false;
            if (std::abs(z) > s.threshold) beyond = false;
        }
    }
    s.negative_beyond_threshold = beyond;
    s.negative_everywhere = everywhere;
    return s;
}

double asymptotic_deficit(int k, double z) {
    if (!(z > 0.0)) throw GuardError("asymptotic deficit needs z > 0");
    return std::pow(z, 2.5) * omega(k, z) + sqrt2;
}

DeficitFit fit_deficit(int k, double z_lo, double z_hi, int points) {
    if (points < 2 || !(z_lo > 0.0) || !(z_hi > z_lo)) throw GuardError("invalid fit range");
    DeficitFit fit;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < points; ++i) {
        const double lz = std::log(z_lo) + (std::log(z_hi) - std::log(z_lo)) * i / (points - 1);
        const double z = std::exp(lz);
        const double d = asymptotic_deficit(k, z);
        fit.z.push_back(z);
        fit.deficit.push_back(d);
        const double ly = std::log(std::abs(d));
        sx += lz;
        sy += ly;
        sxx += lz * lz;
        sxy += lz * ly;
    }
    const double m = points;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double c_acc = 0.0;
    for (std::size_t i = 0; i < fit.z.size(); ++i) c_acc += std::abs(fit.deficit[i]) * fit.z[i];
    fit.constant = c_acc / m;
    return fit;
}

cplx hat_y1_closed(cplx zc, double x, cplx u_hat) {
    if (zc == cplx{0.0, 0.0}) throw GuardError("zc = 0 is excluded");
    const cplx l1 = principal_root(I_UNIT * zc);
    // Equivalent to the two-exponential form with e^{L1} divided out; every
    // exponential below has nonpositive real part.
    const cplx s = (std::exp(l1 * (x - 1.0)) + std::exp(-l1 * x)) / (1.0 + std::exp(-l1));
    return I_UNIT * u_hat / zc * (s - 1.0);
}

cplx hat_y1_closed(int k_shift, double z, double x, cplx u_hat) {
    require_mode(k_shift);
    return hat_y1_closed(cplx{z, 0.5 * kpi2(k_shift)}, x, u_hat);
}

}  // namespace burgers::multiplier
