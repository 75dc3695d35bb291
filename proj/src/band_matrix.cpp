#include "r3s1/band_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <lapacke.h>

namespace r3s1::solver {

SymmetricBandMatrix::SymmetricBandMatrix(int n, int kd) : n_(n), kd_(kd) {
    if (n <= 0 || kd < 0 || kd >= n)
        throw std::invalid_argument("SymmetricBandMatrix: bad dimensions");
    ab_.assign(static_cast<size_t>(n) * (kd + 1), 0.0);
}

double& SymmetricBandMatrix::at(int i, int j) {
    assert(j <= i && i <= j + kd_ && i < n_);
    return ab_[static_cast<size_t>(j) * (kd_ + 1) + (i - j)];
}

double SymmetricBandMatrix::get(int i, int j) const {
    if (i < j) std::swap(i, j);
    if (i - j > kd_) return 0.0;
    return ab_[static_cast<size_t>(j) * (kd_ + 1) + (i - j)];
}

void SymmetricBandMatrix::matvec(const double* x, double* y) const {
    for (int i = 0; i < n_; ++i) y[i] = 0.0;
    for (int j = 0; j < n_; ++j) {
        const double* col = &ab_[static_cast<size_t>(j) * (kd_ + 1)];
        y[j] += col[0] * x[j];
        const int imax = std::min(n_ - 1, j + kd_);
        for (int i = j + 1; i <= imax; ++i) {
            const double a = col[i - j];
            y[i] += a * x[j];
            y[j] += a * x[i];
        }
    }
}

std::vector<double> SymmetricBandMatrix::matvec(const std::vector<double>& x) const {
    std::vector<double> y(n_);
    matvec(x.data(), y.data());
    return y;
}

double SymmetricBandMatrix::inf_norm() const {
    std::vector<double> row_sum(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
        const double* col = &ab_[static_cast<size_t>(j) * (kd_ + 1)];
        row_sum[j] += std::abs(col[0]);
        const int imax = std::min(n_ - 1, j + kd_);
        for (int i = j + 1; i <= imax; ++i) {
            row_sum[i] += std::abs(col[i - j]);
            row_sum[j] += std::abs(col[i - j]);
        }
    }
    return *std::max_element(row_sum.begin(), row_sum.end());
}

long SymmetricBandMatrix::count_below(double tau) const {
    // Banded LDL^T with a ring buffer of the last kd columns of L.
    const int kd = kd_, w = kd + 1;
    const double pivmin = 1e-290 * std::max(1.0, inf_norm() + std::abs(tau));
    std::vector<double> lcols(static_cast<size_t>(w) * w, 0.0); // column j mod w
    std::vector<double> dvals(w, 0.0);
    long count = 0;
    for (int j = 0; j < n_; ++j) {
        const double* col = &ab_[static_cast<size_t>(j) * w];
        double d = col[0] - tau;
        const int i_lo = std::max(0, j - kd);
        for (int i = i_lo; i < j; ++i) {
            const double lij = lcols[static_cast<size_t>(i % w) * w + (j - i)];
            d -= lij * lij * dvals[i % w];
        }
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
        // column j of L (rows j+1 .. j+kd)
        double* lj = &lcols[static_cast<size_t>(j % w) * w];
        const int m_hi = std::min(n_ - 1, j + kd);
        for (int m = j + 1; m <= m_hi; ++m) {
            double s = (m - j <= kd) ? col[m - j] : 0.0;
            const int i_start = std::max(0, m - kd);
            for (int i = std::max(i_start, i_lo); i < j; ++i) {
                const double lmi = lcols[static_cast<size_t>(i % w) * w + (m - i)];
                const double lji = lcols[static_cast<size_t>(i % w) * w + (j - i)];
                s -= lmi * lji * dvals[i % w];
            }
            lj[m - j] = s / d;
        }
        dvals[j % w] = d;
    }
    return count;
}

std::vector<double> SymmetricBandMatrix::smallest_eigenvalues(int k, double abs_tol,
                                                              double lo_hint, double hi_hint,
                                                              bool use_hints) const {
    if (k < 1 || k > n_) throw std::invalid_argument("smallest_eigenvalues: bad k");
    double lo, hi;
    const double norm = inf_norm();
    if (use_hints) {
        lo = lo_hint;
        hi = hi_hint;
        // widen if the hints do not actually bracket
        for (int i = 0; i < 12 && count_below(lo) > 0; ++i) lo -= std::max(1.0, std::abs(lo));
        for (int i = 0; i < 12 && count_below(hi) < k; ++i) hi += std::max(1.0, std::abs(hi));
        if (count_below(lo) > 0) lo = -norm - 1.0;
        if (count_below(hi) < k) hi = norm + 1.0;
    } else {
        lo = -norm - 1.0;
        hi = norm + 1.0;
    }

    std::vector<double> eigs(k);
    double left = lo;
    for (int idx = 1; idx <= k; ++idx) {
        double a = left, b = hi;
        // invariant: count(a) < idx <= count(b)
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (count_below(mid) < idx)
                a = mid;
            else
                b = mid;
            if (b - a <= abs_tol) break;
        }
        eigs[idx - 1] = 0.5 * (a + b);
        left = a; // eigenvalue idx+1 is not below this
    }
    return eigs;
}

SymmetricBandMatrix::EigenPair SymmetricBandMatrix::eigenpair_near(
    double shift, const std::vector<const std::vector<double>*>& orthogonalize_against) const {
    const int n = n_, kd = kd_;
    const int ldab = 3 * kd + 1;
    EigenPair out;
    out.lambda = shift;

    std::vector<double> ab(static_cast<size_t>(ldab) * n);
    std::vector<lapack_int> ipiv(n);
    double mu = shift;
    const double scale = inf_norm() + std::abs(shift) + 1.0;

    lapack_int info = 1;
    for (int attempt = 0; attempt < 4 && info != 0; ++attempt) {
        std::fill(ab.begin(), ab.end(), 0.0);
        // LAPACK general-band layout (column-major): AB(kl+ku+i-j, j) = A(i,j)
        for (int j = 0; j < n; ++j) {
            const int i_hi = std::min(n - 1, j + kd);
            const int i_lo = std::max(0, j - kd);
            for (int i = i_lo; i <= i_hi; ++i) {
                double v = get(i, j);
                if (i == j) v -= mu;
                ab[static_cast<size_t>(j) * ldab + (2 * kd + i - j)] = v;
            }
        }
        info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kd, kd, ab.data(), ldab, ipiv.data());
        if (info != 0) mu += (attempt + 1) * 1e-11 * scale; // nudge off the exact eigenvalue
    }
    if (info != 0) return out;

    std::mt19937_64 rng(0x2545F4914F6CDD1DULL + static_cast<unsigned long long>(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = gauss(rng);

    auto project_out = [&](std::vector<double>& x) {
        for (const auto* u : orthogonalize_against) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += x[i] * (*u)[i];
            for (int i = 0; i < n; ++i) x[i] -= dot * (*u)[i];
        }
    };
    auto normalize = [&](std::vector<double>& x) {
        double s = 0.0;
        for (double t : x) s += t * t;
        s = std::sqrt(s);
        for (double& t : x) t /= s;
        return s;
    };

    project_out(v);
    normalize(v);

    std::vector<double> av(n);
    double lambda = shift, lambda_prev = shift;
    for (int it = 0; it < 25; ++it) {
        info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kd, kd, 1, ab.data(), ldab,
                              ipiv.data(), v.data(), n);
        if (info != 0) return out;
        project_out(v);
        normalize(v);
        matvec(v.data(), av.data());
        lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += v[i] * av[i];
        if (it > 0 && std::abs(lambda - lambda_prev) <= 1e-14 * (1.0 + std::abs(lambda))) break;
        lambda_prev = lambda;
    }

    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = av[i] - lambda * v[i];
        rss += r * r;
    }
    out.lambda = lambda;
    out.vector = std::move(v);
    out.residual = std::sqrt(rss);
    out.converged = true;
    return out;
}

} // namespace r3s1::solver
