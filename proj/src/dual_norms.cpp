#include "burgers_lab/dual_norms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "burgers_lab/errors.hpp"
#include "burgers_lab/heat.hpp"

namespace burgers::norms {

using std::numbers::pi;

namespace {

const cplx I(0.0, 1.0);

// E0(w) = int_0^1 e^{-i w s} ds,  E1(w) = int_0^1 s e^{-i w s} ds.
void segment_kernels(cplx w, cplx& e0, cplx& e1) {
    if (std::abs(w) < 0.5) {
        const cplx c = -I * w;
        cplx power = 1.0;
        double fact = 1.0;
        e0 = 0.0;
        e1 = 0.0;
        for (int n = 0; n < 24; ++n) {
            e0 += power / (fact * (n + 1));
            e1 += power / (fact * (n + 2));
            power *= c;
            fact *= (n + 1);
        }
        return;
    }
    const cplx ex = std::exp(-I * w);
    e0 = (1.0 - ex) / (I * w);
    e1 = (ex * (1.0 + I * w) - 1.0) / (w * w);
}

double modulation_exponent(int k0, double T) { return 0.5 * (k0 * pi) * (k0 * pi) * T; }

ComplexPath transform_with_shift(const TimeSignal& u, double alpha, int pad) {
    if (pad < 8) throw GuardError("pad_factor must be at least 8");
    const int n = u.steps();
    if (n < 1) throw GuardError("signal needs at least one step");
    const double T = u.T;
    const double h = u.dt();
    const long N = static_cast<long>(pad) * n;

    ComplexPath path;
    path.pad_factor = pad;
    path.imag_shift = alpha;
    path.dxi = 2.0 * pi / (pad * T);
    path.edge_left = u.samples.front();
    path.edge_right = u.samples.back() * std::exp(alpha * T);

    fftw_complex* buf = fftw_alloc_complex(N);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(N), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    auto dft = [&](auto&& entry, std::vector<cplx>& out) {
        std::fill(reinterpret_cast<double*>(buf), reinterpret_cast<double*>(buf) + 2 * N, 0.0);
        for (int j = 0; j < n; ++j) buf[j][0] = entry(j) * std::exp(alpha * u.time(j));
        fftw_execute(plan);
        out.resize(N);
        for (long i = 0; i < N; ++i) out[i] = cplx(buf[i][0], buf[i][1]);
    };
    dft([&](int j) { return u.samples[j]; }, path.seg_a);
    dft([&](int j) { return u.samples[j + 1] - u.samples[j]; }, path.seg_b);
    fftw_destroy_plan(plan);
    fftw_free(buf);
    path.step = h;

    path.xi.resize(2 * N + 1);
    path.values.resize(2 * N + 1);
    for (long m = -N; m <= N; ++m) path.xi[m + N] = m * path.dxi;
    if (alpha == 0.0) {
        for (long m = 0; m <= N; ++m) {
            const cplx v = path.value_at(m);
            path.values[N + m] = v;
            path.values[N - m] = std::conj(v);
        }
        path.values[N] = cplx(path.values[N].real(), 0.0);
    } else {
        for (long m = -N; m <= N; ++m) path.values[m + N] = path.value_at(m);
    }
    return path;
}

}  // namespace

cplx ComplexPath::value_at(long m) const {
    const long N = static_cast<long>(seg_a.size());
    if (N == 0) return 0.0;
    const long idx = ((m % N) + N) % N;
    cplx e0, e1;
    segment_kernels(cplx(m * dxi, imag_shift) * step, e0, e1);
    return step / std::sqrt(2.0 * pi) * (e0 * seg_a[idx] + e1 * seg_b[idx]);
}

cplx transform_at(const TimeSignal& u, cplx z) {
    const int n = u.steps();
    const double h = u.dt();
    cplx e0, e1;
    segment_kernels(z * h, e0, e1);
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx phase = std::exp(-I * z * u.time(j));
        acc += phase * (u.samples[j] * e0 + (u.samples[j + 1] - u.samples[j]) * e1);
    }
    return acc * h / std::sqrt(2.0 * pi);
}

int auto_pad(double T) {
    if (!(T > 0.0)) throw GuardError("signal duration must be positive");
    return std::max(8, static_cast<int>(std::ceil(1.0 + 36.0 / T)));
}

ComplexPath extend_and_transform(const TimeSignal& u, int pad_factor) {
    return transform_with_shift(u, 0.0, pad_factor);
}

ComplexPath modulated_transform(const TimeSignal& u, int k0, int pad_factor) {
    const double e = modulation_exponent(k0, u.T);
    if (e > 700.0) {
        throw GuardError("modulation overflow: (k0 pi)^2 T / 2 = " + std::to_string(e) +
                         " > 700; use a smaller T or k0 = 2");
    }
    const int pad = pad_factor == 0 ? auto_pad(u.T) : pad_factor;
    return transform_with_shift(u, 0.5 * (k0 * pi) * (k0 * pi), pad);
}

double weighted_integral(const ComplexPath& path, const std::function<double(double)>& w,
                         double tail_coeff, double tail_power) {
    const std::size_t M = path.values.size();
    if (M < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const double weight = (i == 0 || i + 1 == M) ? 0.5 : 1.0;
        acc += weight * std::norm(path.values[i]) * w(path.xi[i]);
    }
    acc *= path.dxi;
    const double edge2 =
        path.edge_left * path.edge_left + path.edge_right * path.edge_right;
    const double xi_max = path.xi.back();
    // Both half-lines: 2 * edge2 / (2 pi) * tail_coeff * int_X^inf xi^{-2-p}.
    const double tail =
        edge2 / pi * tail_coeff * std::pow(xi_max, -1.0 - tail_power) / (1.0 + tail_power);
    return acc + tail;
}

NormDetail dual_sobolev_norm_detail(const ComplexPath& path, double s, double l1) {
    if (!(s > 0.0 && s < 2.0)) throw GuardError("Sobolev order must lie in (0, 2)");
    NormDetail d;
    d.pad_factor = path.pad_factor;
    const std::size_t M = path.values.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const double weight = (i == 0 || i + 1 == M) ? 0.5 : 1.0;
        acc += weight * std::norm(path.values[i]) *
               std::pow(1.0 + path.xi[i] * path.xi[i], -s);
    }
    d.grid_part = acc * path.dxi;
    const double edge2 =
        path.edge_left * path.edge_left + path.edge_right * path.edge_right;
    const double X = M ? path.xi.back() : 0.0;
    d.tail_part = X > 0.0 ? edge2 / pi * std::pow(X, -1.0 - 2.0 * s) / (1.0 + 2.0 * s) : 0.0;
    if (X > 0.0 && s > 0.5) {
        d.tail_bound = l1 * l1 / pi * std::pow(X, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
    }
    d.value = std::sqrt(d.grid_part + d.tail_part);
    return d;
}

namespace {

void check_pad(const TimeSignal& u, int pad) {
    if (pad < 8) throw GuardError("pad_factor must be at least 8");
    if (std::exp(-(pad - 1) * u.T) > 1e-2) {
        throw GuardError("pad_factor " + std::to_string(pad) +
                         " too small for 1% accuracy at T=" + std::to_string(u.T) +
                         "; use pad_factor >= " + std::to_string(auto_pad(u.T)));
    }
}

}  // namespace

NormDetail dual_sobolev_norm_detail(const TimeSignal& u, double s, int pad_factor) {
    const int pad = pad_factor == 0 ? auto_pad(u.T) : pad_factor;
    check_pad(u, pad);
    return dual_sobolev_norm_detail(extend_and_transform(u, pad), s, l1_norm(u));
}

double dual_sobolev_norm(const TimeSignal& u, double s, int pad_factor) {
    if (is_zero(u)) return 0.0;
    return dual_sobolev_norm_detail(u, s, pad_factor).value;
}

std::vector<double> dual_sobolev_norms(const TimeSignal& u, const std::vector<double>& orders,
                                       int pad_factor) {
    std::vector<double> out(orders.size(), 0.0);
    if (is_zero(u)) return out;
    const int pad = pad_factor == 0 ? auto_pad(u.T) : pad_factor;
    check_pad(u, pad);
    const ComplexPath path = extend_and_transform(u, pad);
    const double l1 = l1_norm(u);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        out[i] = dual_sobolev_norm_detail(path, orders[i], l1).value;
    }
    return out;
}

double plancherel_gap(const TimeSignal& u, int pad_factor, int images) {
    const double l2 = l2_norm(u);
    if (l2 == 0.0) return 0.0;
    const ComplexPath path = extend_and_transform(u, pad_factor);
    const long N = static_cast<long>(path.seg_a.size());
    const long M = (images + 1) * N;
    double acc = 0.0;
    for (long m = -M; m <= M; ++m) {
        acc += (std::abs(m) == M ? 0.5 : 1.0) * std::norm(path.value_at(m));
    }
    const double edge2 =
        path.edge_left * path.edge_left + path.edge_right * path.edge_right;
    const double spectral = acc * path.dxi + edge2 / (pi * M * path.dxi);
    return std::abs(l2 * l2 - spectral) / (l2 * l2);
}

PrimitiveCheck primitive_norm_check(const TimeSignal& u, double s) {
    if (s < 1.0) throw GuardError("primitive check needs s >= 1");
    PrimitiveCheck r;
    if (is_zero(u)) {
        r.skipped = true;
        return r;
    }
    const TimeSignal U = heat::primitive_U(u);
    r.rhs = dual_sobolev_norm(u, s);
    // s - 1 = 0 is the L2 norm itself.
    r.lhs = s == 1.0 ? l2_norm(U) : dual_sobolev_norm(U, s - 1.0);
    r.ratio = r.lhs / r.rhs;
    return r;
}

InterpolationCheck interpolation_check(const TimeSignal& u) {
    InterpolationCheck r;
    if (is_zero(u)) {
        r.skipped = true;
        return r;
    }
    const auto n = dual_sobolev_norms(u, {1.0, 1.25, 0.75});
    r.lhs = n[0];
    r.rhs = std::sqrt(n[1] * n[2]);
    r.passed = r.lhs <= r.rhs * (1.0 + 1e-10);
    return r;
}

}  // namespace burgers::norms
