// The frequency multiplier Omega_k and its building blocks.
//
// With c = (k pi)^2 and a(z) = sqrt(z^2 + c^2/4):
//   Lambda_1(z) = sqrt(a/2 - c/4) + i sign(z) sqrt(a/2 + c/4),  Lambda_2 = -Lambda_1,
//   so Lambda_1^2 = i z - c/2.
// Theta_k(z) = int_0^1 |(e^{L2}-1) e^{L1 x} + (1-e^{L1}) e^{L2 x} + e^{L1} - e^{L2}|^2 cos(k pi x) dx
// Omega_k(z) = Theta_k(z) / (a^2 |e^{L1} - e^{L2}|^2).
// Closed forms (P, Q, Theta, I_j) hold for even k only.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace burgers::multiplier {

using cplx = std::complex<double>;

struct LambdaPair {
    int k = 0;
    double z = 0.0;
    cplx lambda1;
    cplx lambda2;
};

cplx lambda1(int k, double z);
LambdaPair lambda_pair(int k, double z);

// Square root with argument in (-pi/2, pi/2].
cplx principal_root(cplx w);

// P_k and Q_k for z >= 0: closed forms and the defining products.
double pk(int k, double z);
double pk_definition(int k, double z);
double pk_lower_bound(int k, double z);
double qk(int k, double z);
double qk_definition(int k, double z);

double theta_closed(int k, double z);
double theta_quadrature(int k, double z);

// I_1..I_5 with sum equal to Theta_k.
using IValues = std::array<double, 5>;
IValues i_decomposition(int k, double z);  // closed forms
IValues i_quadrature(int k, double z);     // each term from its defining integral

double psi(int k, cplx zc);
double phi_cap(int k, cplx zc);

// Evaluated with e^{2 Re Lambda_1} divided out of numerator and denominator,
// so it stays finite for arbitrarily large |z|.
double omega(int k, double z);

struct MultiplierSample {
    int k = 0;
    double z = 0.0;
    LambdaPair lambda;
    double P = 0.0;
    double Q = 0.0;
    double Theta = 0.0;
    double Omega = 0.0;
    IValues I{};
};

MultiplierSample sample(int k, double z);

// 3 (k pi)^2 / (2 sqrt 7)
double sign_threshold(int k);

struct SignScan {
    int k = 0;
    double z_max = 0.0;
    int n = 0;
    double threshold = 0.0;
    double max_omega = 0.0;
    double argmax_z = 0.0;
    bool negative_beyond_threshold = false;
    bool negative_everywhere = false;
    std::vector<double> z;
    std::vector<double> omega;
};

SignScan sign_scan(int k, double z_max, int n);
double default_scan_range(int k);

// z^{5/2} Omega_k(z) + sqrt(2)
double asymptotic_deficit(int k, double z);

struct DeficitFit {
    double slope = 0.0;      // least-squares slope of log|deficit| vs log z
    double constant = 0.0;   // fitted C in |deficit| ~ C / z
    std::vector<double> z;
    std::vector<double> deficit;
};

DeficitFit fit_deficit(int k, double z_lo, double z_hi, int points);

// Closed-form solution of i zc w - w'' = u_hat on (0,1), w(0) = w(1) = 0.
cplx hat_y1_closed(cplx zc, double x, cplx u_hat);
// Same with zc = z + i (k pi)^2 / 2.
cplx hat_y1_closed(int k_shift, double z, double x, cplx u_hat);

}  // namespace burgers::multiplier
