#pragma once

#include <array>
#include <variant>

namespace r3s1::variational {

struct Point4 {
    double x1, x2, x3, x4;
};

/// Bounding shell of a trial function's support in the 3d (or 4d radial)
/// distance; r_outer is +inf for unbounded kinds.
struct Support {
    double r_inner = 0.0;
    double r_outer = 0.0;
    bool bounded = false;
};

enum class TrialKind { radial4d, hydrogen3d, shell, weyl };

/// Index and cutoff scale of the Hardy-optimizing sequence
/// psi_n(x) = |x|^(-1+1/n) eta(|x|).
struct OptimizingSequenceSpec {
    int n;
    double delta;
};

struct HydrogenQuantumNumbers {
    int N;
    int l;
    int m;
};

// --- shared shapes ---------------------------------------------------------

/// C^1 plateau cutoff: 1 on [-delta, delta], mollifier bridge down to 0 at
/// |t| = 3 delta/2.
double cutoff_eta(double t, double delta);
double cutoff_eta_prime(double t, double delta);

/// Mollifier bump exp(-1/(1-(2t-3)^2)) supported on (1, 2), and derivatives.
double bump(double t);
double bump_prime(double t);
double bump_second(double t);

// --- per-kind parameter records --------------------------------------------

struct RadialProfile {
    enum class Shape { optimizing_sequence, gaussian } shape;
    OptimizingSequenceSpec seq{1, 0.4}; // used by optimizing_sequence shape
    double value(double rho) const;
    double derivative(double rho) const;
};

struct HydrogenParams {
    HydrogenQuantumNumbers q;
    double radial_norm; // normalization of the Laguerre radial factor
    double theta_norm;  // normalization of the Legendre polar factor

    double radial(double r) const;
    double radial_derivative(double r) const;
    double theta(double cos_theta) const;
    double theta_derivative(double cos_theta, double sin_theta) const;
    double phi_factor(double phi) const;
    double phi_derivative(double phi) const;
};

struct ShellParams {
    double rho; // shell scale: support is rho < r < 2 rho
    double R;   // compactification radius (fixes the fibre factor)
    double c3;  // 3d normalization of the unit-scale bump

    double profile(double r) const; // includes (2 pi R)^(-1/2) rho^(-3/2)
    double profile_derivative(double r) const;
};

struct WeylParams {
    double k; // plane-wave number per axis; the wave vector is (k,k,k)
    int n;    // translation/dilation index
    double R;
    double c1; // 1d normalization of the unit-scale bump

    double b(double t) const; // scaled 1d factor b_n, unit L^2 norm
    double b_prime(double t) const;
    double b_second(double t) const;
};

// --- the trial function -----------------------------------------------------

/// An evaluable wavefunction with its kind-specific parameters.  hydrogen3d
/// evaluates the 3d eigenfunction itself; shell and weyl kinds include the
/// (2 pi R)^(-1/2) fibre factor of their lifts (weyl evaluates the real
/// envelope, the plane wave being a phase).
class TrialFunction {
public:
    TrialKind kind;
    std::variant<RadialProfile, HydrogenParams, ShellParams, WeylParams> params;
    Support support;
    bool analytic_gradient = true;

    double value(const Point4& p) const;
    std::array<double, 4> gradient(const Point4& p) const;
};

// --- factories ---------------------------------------------------------------

/// psi_n(x) = |x|^(-1+1/n) eta(|x|), supported in the ball of radius
/// 3 delta/2.  Requires n >= 1 and 0 < delta < 1/2.
TrialFunction optimizing_sequence(const OptimizingSequenceSpec& spec);

/// Radial Gaussian exp(-|x|^2/2), the closed-form Hardy test function.
TrialFunction gaussian_trial();

/// Normalized 3d hydrogen eigenfunction phi_Nlm (a0 = 1); real azimuthal
/// convention cos(m phi) / sin(|m| phi).
TrialFunction hydrogen_eigenfunction(const HydrogenQuantumNumbers& q);

/// Normalized shell function psi_rho supported on {rho < r < 2 rho}.
TrialFunction shell_trial(double rho, double R);

/// Weyl-sequence envelope: product bump translated to the far cube
/// (n(n+1), n(n+2))^3, times the fibre factor.
TrialFunction weyl_trial(double k, int n, double R);

} // namespace r3s1::variational
