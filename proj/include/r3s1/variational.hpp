#pragma once

#include "r3s1/potential.hpp"
#include "r3s1/trial_functions.hpp"

namespace r3s1::variational {

/// Quadratic-form values of a trial function.  total = kinetic + Z*potential,
/// where `potential` stores the coupling-free form v[psi] = int V |psi|^2.
struct RayleighReport {
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
    double norm_sq = 0.0;
    double quotient = 0.0;
    double quadrature_error = 0.0;
};

enum class Domain { r4, omega };

/// Hardy-quotient evaluation; `unbounded` flags a divergent singular integral.
struct HardyQuotient {
    double value = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
    bool unbounded = false;
};

/// (int |grad psi|^2) / (((d-2)^2/4) int |psi|^2/|x|^2) over R^d.
/// Radial kinds accept d in {3, 4}; hydrogen, shell and weyl (envelope)
/// kinds are 3d objects and require d = 3.
HardyQuotient hardy_quotient(const TrialFunction& psi, int d);

/// Rayleigh quotient of psi_n for -Delta + Z V, V = -1/|x|^2, on R^4.
/// Diverges linearly in n for Z > 1.
RayleighReport instability_rayleigh(double Z, const OptimizingSequenceSpec& spec);

/// Witnesses of the sequence estimates: bounded norm, bounded
/// kinetic-minus-singular gap, linear growth of the singular integral.
struct SequenceDiagnostics {
    double norm_sq;
    double kinetic;
    double singular; // int |psi|^2 / |x|^2
    double kinetic_minus_singular;
    double singular_over_n;
    double c_theta; // 2 pi^2, the S^3 surface factor
};
SequenceDiagnostics optimizing_sequence_diagnostics(const OptimizingSequenceSpec& spec);

/// Form bound witness for the compactified stability estimate:
/// a computed C(eps) with |v[psi]| <= (1+eps) h0[psi] + C(eps) ||psi||^2
/// for the concrete plateau cutoff used in the estimate.
double compactified_bound_constant(double eps, double R);

/// h[psi] for psi = (2 pi R)^(-1/2) phi_100 on Omega; the fibre integral of
/// V_c reduces v[psi] to the 3d Coulomb integral and the total is exactly
/// -1 in internal units, for every R.
RayleighReport ground_state_bound(double R);

/// Residual of the Weyl sequence: || -Delta psi_n + Z V psi_n - 3k^2 psi_n ||
/// with Z = 4R (or an explicit override, e.g. 0 for the free case), plus its
/// a-priori bound and components.
struct WeylResidual {
    double residual;
    double bound;      // sqrt(||Lap phi_n||^2 + 12 k^2 ||grad phi_n||^2) + Z sup|V|
    double grad_norm;  // ||grad phi_n||
    double lap_norm;   // ||Lap phi_n||
    double sup_v;      // sup over the support box of |V_c|
};
WeylResidual weyl_residual(double k, int n, double R);
WeylResidual weyl_residual(double k, int n, double R, double Z);

/// General form evaluation: h0[psi], v[psi], ||psi||^2 by quadrature.
/// radial4d kinds live on R^4 (V = -1/|x|^2); hydrogen, shell and weyl
/// kinds on Omega (V = V_c, evaluated through the fibre integrals).
RayleighReport rayleigh(const TrialFunction& psi, const potential::PotentialSpec& spec,
                        Domain domain);

} // namespace r3s1::variational
