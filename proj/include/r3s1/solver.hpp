#pragma once

#include "r3s1/band_matrix.hpp"
#include "r3s1/potential.hpp"

#include <functional>
#include <string>
#include <vector>

namespace r3s1::solver {

/// Radial operator -d^2/drho^2 - gamma/rho^2 with gamma = Z - 3/4 - l(l+2),
/// the s-wave-reduced 4d problem.
struct RadialOperatorSpec {
    double Z;
    int l;
    double gamma;

    static RadialOperatorSpec make(double Z, int l);
};

/// Graded radial grid (geometric for stretch = 1, clustered toward r_min for
/// stretch > 1) times a uniform periodic grid on the compact fibre.
struct GridSpec {
    double r_min;
    double r_max;
    int n_r;           // radial nodes including both Dirichlet endpoints
    int n_x4 = 8;      // fibre nodes (even)
    double stretch = 1.0;

    void validate() const;
    std::vector<double> radial_nodes() const;

    /// Geometric grid with a fixed number of nodes per log unit, so grids
    /// with different r_min coincide near r_max.
    static GridSpec graded(double r_min, double r_max, double nodes_per_log, int n_x4);
};

/// Assembled symmetric matrix with its grid metadata.  The graded-grid
/// Laplacian is symmetrized by the diagonal similarity D^(1/2) A D^(-1/2)
/// with D the finite-volume cell widths; eigenvalues are unchanged.
struct OperatorAssembly {
    SymmetricBandMatrix matrix;
    GridSpec grid;
    potential::PotentialSpec potential_ref{0.1, 0.4, 100};
    int l = 0;
    bool compactified = false;
    std::string bc;
    std::vector<double> interior_r; // interior radial nodes
    std::vector<double> cell_width; // finite-volume widths (the D weights)
};

/// Tridiagonal assembly of -d^2/drho^2 - gamma/rho^2 on [r_min, r_max],
/// Dirichlet at both ends.
OperatorAssembly assemble_radial_4d(const RadialOperatorSpec& spec, const GridSpec& grid);

/// 2d assembly of -d_r^2 - d_x4^2 + l(l+1)/r^2 + Z V_c(r, x4) with Dirichlet
/// radial ends and periodic fibre; V_c evaluated at the nodes.
OperatorAssembly assemble_compactified(const potential::PotentialSpec& spec, int l,
                                       const GridSpec& grid);

struct SpectralResult {
    std::vector<double> eigenvalues; // sorted ascending
    std::vector<double> residuals;   // ||A v - lambda v|| per returned pair
    long n_negative = 0;             // eigenvalue count below -tol_neg (whole matrix)
    double ground = 0.0;
    bool converged = true;
    std::string message;
};

struct EigenOptions {
    double tol_neg = 1e-6;
    bool want_vectors = true;
    double bisect_tol = 1e-11;
    double residual_tol_scale = 1e-8; // accepted: residual <= scale*(1+|lambda|)
};

/// k smallest eigenvalues by inertia bisection; eigenvectors and residual
/// certificates by band-LU inverse iteration when requested.
SpectralResult lowest_eigenvalues(const OperatorAssembly& A, int k,
                                  const EigenOptions& opts = {});

/// Bound states summed over angular sectors l = 0..l_max with multiplicity
/// (2l+1); a lower bound for the operator on the truncated domain.
long count_bound_states(const potential::PotentialSpec& spec, int l_max,
                        const GridSpec& grid, double tol_neg = 1e-6);

/// Ground energy of the l = 0 compactified operator on each grid of the
/// ladder (eigenvalue-only path; brackets warm-started level to level).
std::vector<double> instability_refinement(const potential::PotentialSpec& spec,
                                           const std::vector<GridSpec>& ladder);

/// Discrete Rayleigh quotient of the x4-constant interpolant u = r f(r) of a
/// 3d radial trial profile; an exact upper bound for the matrix ground state.
double interpolated_quotient(const OperatorAssembly& A,
                             const std::function<double(double)>& f3d);

} // namespace r3s1::solver
