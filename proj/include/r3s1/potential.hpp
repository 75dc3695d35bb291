#pragma once

#include "r3s1/quadrature.hpp"

namespace r3s1::potential {

// Internal units: hbar^2/(2m) = 1 and a0 = 1, so the coupling is Z = 4R,
// the critical radius is 1/4 and energies are in units of hbar^2/(2m a0^2).

/// CODATA Bohr radius, metres.
inline constexpr double bohr_radius_m = 5.29177210544e-11;

double meters_to_bohr(double meters);
double bohr_to_meters(double bohr);

/// Coupling from the compactification radius: Z = 4R (a0 = 1).
double charge_to_z(double R);

/// Critical compactification radius a0/4, in metres.
double critical_radius_physical();

/// Critical radius in internal units (Bohr radii).
double critical_radius_internal();

/// Physical configuration: radius of the compact dimension, coupling and
/// the truncation order of the image sum.
struct PotentialSpec {
    double R;      // compactification radius, units of a0
    double Z;      // dimensionless coupling
    int n_images;  // image-sum truncation |n| <= n_images

    /// Z fixed by the charge relation Z = 4R.
    static PotentialSpec from_radius(double R, int n_images = 10000);
    /// Free coupling, not tied to R.
    static PotentialSpec with_coupling(double R, double Z, int n_images = 10000);
};

/// A point of the configuration space: 3d radial distance and the
/// coordinate along the circle, reduced into [-pi R, pi R].
struct SpacePoint {
    double r;
    double x4;
};

/// Reduce an unreduced circle coordinate into [-pi R, pi R].
double reduce_x4(double x4, double R);

/// Compactified Coulomb potential, closed form:
///   V_c(r, x4) = -(1/(2 R r)) sinh(r/R) / (cosh(r/R) - cos(x4/R)).
/// The prefactor sinh(r/R)/r is evaluated by series for r/R < 1e-4 and the
/// denominator as 2(sinh^2(a/2) + sin^2(b/2)), so the value stays accurate
/// down to the singularity and out to arbitrarily large r.
/// Throws std::domain_error at (0,0) or when |x4| > pi R.
double closed_form(SpacePoint p, const PotentialSpec& spec);

/// Truncated image sum with an analytic tail estimate.
///   partial_sum = -sum_{|n| <= N} 1/(r^2 + (x4 - 2 pi n R)^2)
///   value       = partial_sum + tail estimate (integral bracket midpoint)
///   tail_bound  = rigorous bound on |exact - value| (bracket half-width
///                 plus a summation-roundoff cushion)
struct ImageSum {
    double value;
    double tail_bound;
    double partial_sum;
    long terms;
};
ImageSum image_sum(SpacePoint p, const PotentialSpec& spec);

/// Remainder W = V_c + 1/(r^2 + x4^2), i.e. the n != 0 images only.
/// Evaluated by direct summation (plus tail estimate), which extends
/// continuously to (0,0) and avoids cancellation near the singularity.
/// Satisfies -1/(4R^2) <= W < 0 and W -> 0 as r -> infinity.
double remainder_w(SpacePoint p, const PotentialSpec& spec);

/// sup |W| bound from the odd-lambda series: 1/(4 R^2).
double remainder_bound(const PotentialSpec& spec);

/// Integral of V_c over the compact fibre at fixed r > 0, by adaptive
/// quadrature of the closed form.  Equals -pi/r identically in R.
quadrature::QuadResult axial_integral(double r, const PotentialSpec& spec);

/// The same integral from the arctan antiderivative
///   -(1/r) atan(coth(r/(2R)) tan(x4/(2R))) |_{-pi R}^{pi R},
/// used as an independent cross-check of the quadrature.
double axial_integral_antiderivative(double r, const PotentialSpec& spec);

/// Partial antiderivative between x4 limits inside (-pi R, pi R).
double axial_antiderivative_between(double r, double x4_lo, double x4_hi,
                                    const PotentialSpec& spec);

/// Closed form of the fibre integral of V_c^2:
///   pi coth(r/R) / (2 R r^2).
double axial_square_integral(double r, const PotentialSpec& spec);

} // namespace r3s1::potential
