// Dirichlet sine basis e_k(x) = sqrt(2) sin(k pi x) on (0, 1).
//
// Grid functions live on the interior points x_j = j/(n+1), j = 1..n, so the
// discrete sine transform (FFTW RODFT00) maps them exactly to and from sine
// coefficients below the grid Nyquist limit.
#pragma once

#include <memory>
#include <vector>

namespace burgers::spectral {

struct ModalField {
    std::vector<double> coeffs;  // coefficient of e_k at index k-1

    ModalField() = default;
    explicit ModalField(int K) : coeffs(K, 0.0) {}
    explicit ModalField(std::vector<double> c) : coeffs(std::move(c)) {}

    int K() const { return static_cast<int>(coeffs.size()); }
    double& operator[](int k) { return coeffs[k - 1]; }  // 1-based mode index
    double operator[](int k) const { return coeffs[k - 1]; }
};

struct GridFunction {
    std::vector<double> values;
    int n() const { return static_cast<int>(values.size()); }
};

struct Trajectory {
    double T = 0.0;
    std::vector<ModalField> fields;  // n_t + 1 fields at t_j = j T / n_t

    int n_t() const { return static_cast<int>(fields.size()) - 1; }
    int K() const { return fields.empty() ? 0 : fields.front().K(); }
    double dt() const { return T / n_t(); }
    double time(int j) const { return T * j / n_t(); }
};

ModalField unit_mode(int K, int k, double amplitude = 1.0);
Trajectory zero_trajectory(double T, int n_t, int K);

// Reusable sine/cosine transforms on one grid size. Holds FFTW plans and
// scratch buffers, so an instance must not be shared between threads.
class SineGrid {
public:
    explicit SineGrid(int n);
    ~SineGrid();
    SineGrid(const SineGrid&) = delete;
    SineGrid& operator=(const SineGrid&) = delete;

    int n() const { return n_; }
    double x(int j) const { return static_cast<double>(j) / (n_ + 1); }  // j = 1..n

    // Values of sum_k c_k e_k at the interior points.
    std::vector<double> synthesize(const std::vector<double>& coeffs);
    // Values of d/dx sum_k c_k e_k at the interior points.
    std::vector<double> synthesize_derivative(const std::vector<double>& coeffs);
    // Trapezoid projection onto e_1..e_K.
    std::vector<double> analyze(const std::vector<double>& values, int K);

private:
    struct Plans;
    int n_;
    std::unique_ptr<Plans> plans_;
};

GridFunction sine_synthesis(const ModalField& field, int n);
ModalField sine_analysis(const GridFunction& g, int K);

double l2_norm(const ModalField& field);
double h1_seminorm(const ModalField& field);
double yt_norm(const Trajectory& traj);
// Time-trapezoid L2((0,T), L2) and L2((0,T), H1) norms.
double l2l2_norm(const Trajectory& traj);
double l2h1_norm(const Trajectory& traj);

constexpr double kWeightExponentLimit = 700.0;
// Throws GuardError("weight overflow; rescale T") when pi^2 k^2 t > 700.
void check_weight_exponent(int k, double t);

double phi_k_eval(int k, double t, double x);
double phi_k_x_eval(int k, double t, double x);

// Exact int_0^1 y(x)^2 cos(k pi x) dx from the modal product rule
//   int e_a e_b cos(k pi x) = (1/2)[delta_{|a-b|,k} - delta_{a+b,k}].
double cos_moment_modal(const ModalField& field, int k);
// Same integral by trapezoid on a SineGrid.
double cos_moment_grid(SineGrid& grid, const ModalField& field, int k);

enum class TimeRule {
    Trapezoid,  // trapezoid in t
    ExpLinear,  // exact for e^{lambda t} times the piecewise-linear interpolant
};

enum class SpaceRule {
    Grid,   // trapezoid on n = 8K interior points
    Modal,  // closed-form product rule
};

// int_0^T int_0^1 y^2 phi_{k,x} dx dt.
double quadratic_phi_pairing(const Trajectory& traj, int k,
                             TimeRule time_rule = TimeRule::Trapezoid,
                             SpaceRule space_rule = SpaceRule::Grid);

}  // namespace burgers::spectral
