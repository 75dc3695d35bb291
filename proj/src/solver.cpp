#include "r3s1/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace r3s1::solver {

namespace {
constexpr double kPi = std::numbers::pi;
}

RadialOperatorSpec RadialOperatorSpec::make(double Z, int l) {
    if (l < 0) throw std::invalid_argument("RadialOperatorSpec: l must be >= 0");
    return {Z, l, Z - 0.75 - double(l) * (l + 2.0)};
}

void GridSpec::validate() const {
    if (!(r_min > 0.0) || !(r_min < r_max)) throw std::invalid_argument("GridSpec: need 0 < r_min < r_max");
    if (n_r < 16) throw std::invalid_argument("GridSpec: n_r must be >= 16");
    if (n_x4 < 8 || n_x4 % 2 != 0) throw std::invalid_argument("GridSpec: n_x4 must be even and >= 8");
    if (!(stretch > 0.0)) throw std::invalid_argument("GridSpec: stretch must be positive");
}

std::vector<double> GridSpec::radial_nodes() const {
    std::vector<double> r(n_r);
    const double ratio = r_max / r_min;
    for (int j = 0; j < n_r; ++j) {
        const double t = double(j) / (n_r - 1);
        r[j] = r_min * std::pow(ratio, std::pow(t, stretch));
    }
    r.front() = r_min;
    r.back() = r_max;
    return r;
}

GridSpec GridSpec::graded(double r_min, double r_max, double nodes_per_log, int n_x4) {
    GridSpec g;
    g.r_min = r_min;
    g.r_max = r_max;
    g.n_r = std::max(16, int(std::ceil(nodes_per_log * std::log(r_max / r_min))) + 1);
    g.n_x4 = n_x4;
    g.stretch = 1.0;
    g.validate();
    return g;
}

namespace {

// Finite-volume pieces of the symmetrized 1d Laplacian on the graded grid.
struct RadialStencil {
    std::vector<double> diag;     // second-difference diagonal
    std::vector<double> off;      // coupling (j, j+1), symmetrized
    std::vector<double> interior; // interior nodes
    std::vector<double> width;    // finite-volume cell widths
};

RadialStencil radial_stencil(const GridSpec& grid) {
    const std::vector<double> r = grid.radial_nodes();
    const int m = grid.n_r - 2;
    RadialStencil s;
    s.diag.resize(m);
    s.off.assign(std::max(0, m - 1), 0.0);
    s.interior.resize(m);
    s.width.resize(m);
    for (int j = 1; j <= m; ++j) {
        const double hl = r[j] - r[j - 1];
        const double hr = r[j + 1] - r[j];
        s.interior[j - 1] = r[j];
        s.width[j - 1] = 0.5 * (hl + hr);
        s.diag[j - 1] = (1.0 / hl + 1.0 / hr) / s.width[j - 1];
    }
    for (int j = 0; j + 1 < m; ++j) {
        const double h = s.interior[j + 1] - s.interior[j];
        s.off[j] = -1.0 / (h * std::sqrt(s.width[j] * s.width[j + 1]));
    }
    return s;
}

} // namespace

OperatorAssembly assemble_radial_4d(const RadialOperatorSpec& spec, const GridSpec& grid) {
    grid.validate();
    const RadialStencil s = radial_stencil(grid);
    const int m = static_cast<int>(s.interior.size());

    OperatorAssembly a;
    a.matrix = SymmetricBandMatrix(m, 1);
    a.grid = grid;
    a.l = spec.l;
    a.compactified = false;
    a.bc = "dirichlet";
    a.interior_r = s.interior;
    a.cell_width = s.width;
    a.potential_ref = potential::PotentialSpec::with_coupling(1.0, spec.Z, 1);

    for (int j = 0; j < m; ++j) {
        const double rj = s.interior[j];
        a.matrix.at(j, j) = s.diag[j] - spec.gamma / (rj * rj);
        if (j + 1 < m) a.matrix.at(j + 1, j) = s.off[j];
    }
    return a;
}

OperatorAssembly assemble_compactified(const potential::PotentialSpec& spec, int l,
                                       const GridSpec& grid) {
    grid.validate();
    if (l < 0) throw std::invalid_argument("assemble_compactified: l must be >= 0");
    const RadialStencil s = radial_stencil(grid);
    const int m = static_cast<int>(s.interior.size());
    const int nx = grid.n_x4;
    const double h4 = 2.0 * kPi * spec.R / nx;

    OperatorAssembly a;
    a.matrix = SymmetricBandMatrix(m * nx, nx);
    a.grid = grid;
    a.l = l;
    a.compactified = true;
    a.bc = "dirichlet-r/periodic-x4";
    a.interior_r = s.interior;
    a.cell_width = s.width;
    a.potential_ref = spec;

    const double hop4 = -1.0 / (h4 * h4);
    for (int j = 0; j < m; ++j) {
        const double rj = s.interior[j];
        const double centrifugal = l * (l + 1.0) / (rj * rj);
        for (int i = 0; i < nx; ++i) {
            const double x4 = -kPi * spec.R + i * h4;
            const int p = j * nx + i;
            a.matrix.at(p, p) = s.diag[j] + 2.0 / (h4 * h4) + centrifugal +
                                spec.Z * potential::closed_form({rj, x4}, spec);
            if (i + 1 < nx) a.matrix.at(p + 1, p) = hop4;
            if (j + 1 < m) a.matrix.at(p + nx, p) = s.off[j];
        }
        if (nx > 2) a.matrix.at(j * nx + nx - 1, j * nx) += hop4; // periodic wrap
    }
    return a;
}

SpectralResult lowest_eigenvalues(const OperatorAssembly& A, int k, const EigenOptions& opts) {
    const int n = A.matrix.dim();
    if (k < 1 || k > n) throw std::invalid_argument("lowest_eigenvalues: k out of range");

    SpectralResult res;
    res.eigenvalues = A.matrix.smallest_eigenvalues(k, opts.bisect_tol);
    res.n_negative = A.matrix.count_below(-opts.tol_neg);

    if (opts.want_vectors) {
        std::vector<std::vector<double>> vectors;
        res.residuals.resize(k, 0.0);
        for (int i = 0; i < k; ++i) {
            std::vector<const std::vector<double>*> prev;
            for (int j = 0; j < i; ++j) {
                const double sep = std::abs(res.eigenvalues[i] - res.eigenvalues[j]);
                if (sep <= std::max(1e-6 * (1.0 + std::abs(res.eigenvalues[i])),
                                    100.0 * opts.bisect_tol))
                    prev.push_back(&vectors[j]);
            }
            auto pair = A.matrix.eigenpair_near(res.eigenvalues[i], prev);
            if (!pair.converged) {
                res.converged = false;
                res.message = "inverse iteration failed at index " + std::to_string(i);
                vectors.emplace_back(n, 0.0);
                res.residuals[i] = std::numeric_limits<double>::infinity();
                continue;
            }
            res.residuals[i] = pair.residual;
            if (pair.residual > opts.residual_tol_scale * A.matrix.inf_norm()) {
                res.converged = false;
                res.message = "residual above tolerance at index " + std::to_string(i);
            }
            res.eigenvalues[i] = pair.lambda;
            vectors.push_back(std::move(pair.vector));
        }
        std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    }
    res.ground = res.eigenvalues.front();
    return res;
}

long count_bound_states(const potential::PotentialSpec& spec, int l_max, const GridSpec& grid,
                        double tol_neg) {
    if (l_max < 0) throw std::invalid_argument("count_bound_states: l_max must be >= 0");
    long total = 0;
    for (int l = 0; l <= l_max; ++l) {
        const OperatorAssembly a = assemble_compactified(spec, l, grid);
        total += (2 * l + 1) * a.matrix.count_below(-tol_neg);
    }
    return total;
}

std::vector<double> instability_refinement(const potential::PotentialSpec& spec,
                                           const std::vector<GridSpec>& ladder) {
    std::vector<double> grounds;
    grounds.reserve(ladder.size());
    bool have_prev = false;
    double prev = 0.0;
    for (const GridSpec& g : ladder) {
        const OperatorAssembly a = assemble_compactified(spec, 0, g);
        std::vector<double> eig;
        if (have_prev) {
            // the ground either converges near the previous value or dives
            const double lo = std::min(prev * 16.0 - 2.0, -2.0);
            const double hi = std::max(prev * 0.01 + 1.0, 1.0);
            eig = a.matrix.smallest_eigenvalues(1, 1e-10, lo, hi, true);
        } else {
            eig = a.matrix.smallest_eigenvalues(1, 1e-10);
        }
        grounds.push_back(eig.front());
        prev = eig.front();
        have_prev = true;
    }
    return grounds;
}

double interpolated_quotient(const OperatorAssembly& A,
                             const std::function<double(double)>& f3d) {
    const int m = static_cast<int>(A.interior_r.size());
    const int nx = A.compactified ? A.grid.n_x4 : 1;
    std::vector<double> w(static_cast<size_t>(m) * nx);
    for (int j = 0; j < m; ++j) {
        const double u = A.interior_r[j] * f3d(A.interior_r[j]);
        const double scaled = std::sqrt(A.cell_width[j]) * u;
        for (int i = 0; i < nx; ++i) w[static_cast<size_t>(j) * nx + i] = scaled;
    }
    const std::vector<double> aw = A.matrix.matvec(w);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
        num += w[i] * aw[i];
        den += w[i] * w[i];
    }
    if (den == 0.0) throw std::invalid_argument("interpolated_quotient: trial vanishes on the grid");
    return num / den;
}

} // namespace r3s1::solver
