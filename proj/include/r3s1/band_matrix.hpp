#pragma once

#include <vector>

namespace r3s1::solver {

/// Real symmetric band matrix, lower-band storage: entry (j+d, j) for
/// d = 0..kd lives at ab[j*(kd+1)+d].
class SymmetricBandMatrix {
public:
    SymmetricBandMatrix() = default;
    SymmetricBandMatrix(int n, int kd);

    int dim() const { return n_; }
    int bandwidth() const { return kd_; }

    /// Lower-triangle write access; requires j <= i <= j + kd.
    double& at(int i, int j);
    /// Symmetric read access; zero outside the band.
    double get(int i, int j) const;

    void matvec(const double* x, double* y) const;
    std::vector<double> matvec(const std::vector<double>& x) const;

    double inf_norm() const;

    /// Number of eigenvalues strictly below tau, by the inertia of the
    /// LDL^T factorization of A - tau I (Sylvester).  Near-zero pivots are
    /// replaced by a tiny negative value, as in Sturm bisection.
    long count_below(double tau) const;

    /// The k smallest eigenvalues by inertia bisection, each to absolute
    /// accuracy abs_tol (plus the roundoff floor of the count function).
    /// lo/hi, when given, must bracket all k of them.
    std::vector<double> smallest_eigenvalues(int k, double abs_tol = 1e-11,
                                             double lo_hint = 0.0, double hi_hint = 0.0,
                                             bool use_hints = false) const;

    struct EigenPair {
        double lambda = 0.0;
        std::vector<double> vector;
        double residual = 0.0;
        bool converged = false;
    };

    /// Inverse iteration at the given shift through a band LU; previous
    /// vectors, if supplied, are projected out (for clustered eigenvalues).
    EigenPair eigenpair_near(double shift,
                             const std::vector<const std::vector<double>*>& orthogonalize_against =
                                 {}) const;

private:
    int n_ = 0, kd_ = 0;
    std::vector<double> ab_;
};

} // namespace r3s1::solver
