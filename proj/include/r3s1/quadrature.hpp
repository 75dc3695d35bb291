#pragma once

#include <functional>

namespace r3s1::quadrature {

/// Result of an adaptive integration: value, a conservative error bound,
/// and whether the requested tolerance was reached.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
/// Stops when the accumulated error estimate is below
/// max(abs_tol, rel_tol * |value|) or the interval budget is exhausted.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, double abs_tol = 1e-300,
                     int max_intervals = 4000);

/// Integration of f over [a, b], 0 < a < b, in the variable u = log(rho).
/// Suited to integrands with power-law behaviour at small rho.
QuadResult integrate_log(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-12, double abs_tol = 1e-300,
                         int max_intervals = 4000);

/// n-point trapezoid rule for a (b-a)-periodic function sampled at
/// a + i*h, i = 0..n-1.  Spectrally accurate for smooth periodic f.
double periodic_trapezoid(const std::function<double(double)>& f, double a, double b, int n);

} // namespace r3s1::quadrature
