#include "r3s1/trial_functions.hpp"

#include "r3s1/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace r3s1::variational {

namespace {

constexpr double kPi = std::numbers::pi;

double laguerre(int k, int alpha, double x) {
    if (k < 0) return 0.0;
    return std::assoc_laguerre(k, alpha, x);
}

// d/dx L_k^a(x) = -L_{k-1}^{a+1}(x)
double laguerre_prime(int k, int alpha, double x) {
    if (k < 1) return 0.0;
    return -std::assoc_laguerre(k - 1, alpha + 1, x);
}

double legendre_p(int l, int m, double x) {
    if (m > l) return 0.0;
    return std::assoc_legendre(l, m, x);
}

double factorial_ratio_sqrt(int num_fact, int den_fact) {
    // sqrt(num! / den!)
    return std::exp(0.5 * (std::lgamma(num_fact + 1.0) - std::lgamma(den_fact + 1.0)));
}

double bump_norm_1d() {
    static const double c = [] {
        auto f = [](double t) {
            const double b = bump(t);
            return b * b;
        };
        return 1.0 / std::sqrt(quadrature::integrate(f, 1.0, 2.0, 1e-14).value);
    }();
    return c;
}

double bump_norm_3d() {
    static const double c = [] {
        auto f = [](double s) {
            const double b = bump(s);
            return b * b * s * s;
        };
        return 1.0 / std::sqrt(4.0 * kPi * quadrature::integrate(f, 1.0, 2.0, 1e-14).value);
    }();
    return c;
}

} // namespace

// --- shapes -----------------------------------------------------------------

double cutoff_eta(double t, double delta) {
    const double a = std::abs(t);
    if (a <= delta) return 1.0;
    if (a >= 1.5 * delta) return 0.0;
    const double s = (2.0 * a - 2.0 * delta) / delta;
    if (s >= 1.0 - 1e-7) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double cutoff_eta_prime(double t, double delta) {
    const double a = std::abs(t);
    if (a <= delta || a >= 1.5 * delta) return 0.0;
    const double s = (2.0 * a - 2.0 * delta) / delta;
    if (s >= 1.0 - 1e-7) return 0.0;
    const double one_ms2 = 1.0 - s * s;
    const double eta = std::exp(1.0 - 1.0 / one_ms2);
    const double deta_ds = eta * (-2.0 * s / (one_ms2 * one_ms2));
    return deta_ds * (2.0 / delta) * (t < 0.0 ? -1.0 : 1.0);
}

double bump(double t) {
    const double s = 2.0 * t - 3.0;
    const double one_ms2 = 1.0 - s * s;
    if (one_ms2 <= 1e-7) return 0.0;
    return std::exp(-1.0 / one_ms2);
}

double bump_prime(double t) {
    const double s = 2.0 * t - 3.0;
    const double one_ms2 = 1.0 - s * s;
    if (one_ms2 <= 1e-7) return 0.0;
    const double g = std::exp(-1.0 / one_ms2);
    return 2.0 * g * (-2.0 * s / (one_ms2 * one_ms2));
}

double bump_second(double t) {
    const double s = 2.0 * t - 3.0;
    const double one_ms2 = 1.0 - s * s;
    if (one_ms2 <= 1e-7) return 0.0;
    const double g = std::exp(-1.0 / one_ms2);
    const double p = -2.0 * s / (one_ms2 * one_ms2);
    const double p_prime = -2.0 * (1.0 + 3.0 * s * s) / (one_ms2 * one_ms2 * one_ms2);
    return 4.0 * g * (p * p + p_prime);
}

// --- RadialProfile -----------------------------------------------------------

double RadialProfile::value(double rho) const {
    if (shape == Shape::gaussian) return std::exp(-0.5 * rho * rho);
    const double p = -1.0 + 1.0 / seq.n;
    return std::pow(rho, p) * cutoff_eta(rho, seq.delta);
}

double RadialProfile::derivative(double rho) const {
    if (shape == Shape::gaussian) return -rho * std::exp(-0.5 * rho * rho);
    const double p = -1.0 + 1.0 / seq.n;
    return p * std::pow(rho, p - 1.0) * cutoff_eta(rho, seq.delta) +
           std::pow(rho, p) * cutoff_eta_prime(rho, seq.delta);
}

// --- HydrogenParams ----------------------------------------------------------

double HydrogenParams::radial(double r) const {
    const int N = q.N, l = q.l;
    const double x = 2.0 * r / N;
    return radial_norm * std::exp(-r / N) * std::pow(x, l) * laguerre(N - l - 1, 2 * l + 1, x);
}

double HydrogenParams::radial_derivative(double r) const {
    const int N = q.N, l = q.l;
    const double x = 2.0 * r / N;
    const double e = std::exp(-r / N);
    const double L = laguerre(N - l - 1, 2 * l + 1, x);
    const double Lp = laguerre_prime(N - l - 1, 2 * l + 1, x);
    double d = -std::pow(x, l) * L / N + std::pow(x, l) * Lp * (2.0 / N);
    if (l > 0) d += l * (2.0 / N) * std::pow(x, l - 1) * L;
    return radial_norm * e * d;
}

double HydrogenParams::theta(double cos_theta) const {
    return theta_norm * legendre_p(q.l, std::abs(q.m), cos_theta);
}

double HydrogenParams::theta_derivative(double cos_theta, double sin_theta) const {
    const int l = q.l, m = std::abs(q.m);
    if (l == 0) return 0.0;
    if (std::abs(sin_theta) < 1e-14) return 0.0;
    // dP/dtheta = (l x P_l^m - (l+m) P_{l-1}^m) / sin(theta)
    const double p = legendre_p(l, m, cos_theta);
    const double pm1 = legendre_p(l - 1, m, cos_theta);
    return theta_norm * (l * cos_theta * p - (l + m) * pm1) / sin_theta;
}

double HydrogenParams::phi_factor(double phi) const {
    const int m = q.m;
    if (m == 0) return 1.0 / std::sqrt(2.0 * kPi);
    if (m > 0) return std::cos(m * phi) / std::sqrt(kPi);
    return std::sin(-m * phi) / std::sqrt(kPi);
}

double HydrogenParams::phi_derivative(double phi) const {
    const int m = q.m;
    if (m == 0) return 0.0;
    if (m > 0) return -m * std::sin(m * phi) / std::sqrt(kPi);
    return -m * std::cos(-m * phi) / std::sqrt(kPi);
}

// --- ShellParams --------------------------------------------------------------

double ShellParams::profile(double r) const {
    const double fibre = 1.0 / std::sqrt(2.0 * kPi * R);
    return fibre * c3 * std::pow(rho, -1.5) * bump(r / rho);
}

double ShellParams::profile_derivative(double r) const {
    const double fibre = 1.0 / std::sqrt(2.0 * kPi * R);
    return fibre * c3 * std::pow(rho, -2.5) * bump_prime(r / rho);
}

// --- WeylParams ----------------------------------------------------------------

double WeylParams::b(double t) const {
    return c1 / std::sqrt(double(n)) * bump(t / n - n);
}

double WeylParams::b_prime(double t) const {
    return c1 * std::pow(double(n), -1.5) * bump_prime(t / n - n);
}

double WeylParams::b_second(double t) const {
    return c1 * std::pow(double(n), -2.5) * bump_second(t / n - n);
}

// --- TrialFunction ---------------------------------------------------------------

double TrialFunction::value(const Point4& p) const {
    switch (kind) {
        case TrialKind::radial4d: {
            const auto& rp = std::get<RadialProfile>(params);
            const double rho =
                std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 + p.x4 * p.x4);
            return rp.value(rho);
        }
        case TrialKind::hydrogen3d: {
            const auto& h = std::get<HydrogenParams>(params);
            const double r = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
            if (r == 0.0) return h.radial(0.0) * h.theta(1.0) * h.phi_factor(0.0);
            const double ct = p.x3 / r;
            const double phi = std::atan2(p.x2, p.x1);
            return h.radial(r) * h.theta(ct) * h.phi_factor(phi);
        }
        case TrialKind::shell: {
            const auto& s = std::get<ShellParams>(params);
            const double r = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
            return s.profile(r);
        }
        case TrialKind::weyl: {
            const auto& w = std::get<WeylParams>(params);
            const double fibre = 1.0 / std::sqrt(2.0 * kPi * w.R);
            return fibre * w.b(p.x1) * w.b(p.x2) * w.b(p.x3);
        }
    }
    return 0.0;
}

std::array<double, 4> TrialFunction::gradient(const Point4& p) const {
    switch (kind) {
        case TrialKind::radial4d: {
            const auto& rp = std::get<RadialProfile>(params);
            const double rho =
                std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 + p.x4 * p.x4);
            if (rho == 0.0) return {0, 0, 0, 0};
            const double d = rp.derivative(rho) / rho;
            return {d * p.x1, d * p.x2, d * p.x3, d * p.x4};
        }
        case TrialKind::hydrogen3d: {
            const auto& h = std::get<HydrogenParams>(params);
            const double r = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
            if (r == 0.0) return {0, 0, 0, 0};
            const double ct = p.x3 / r;
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            const double phi = std::atan2(p.x2, p.x1);
            const double cp = std::cos(phi), sp = std::sin(phi);

            const double dr = h.radial_derivative(r) * h.theta(ct) * h.phi_factor(phi);
            const double dth =
                h.radial(r) * h.theta_derivative(ct, st) * h.phi_factor(phi) / r;
            double dph = 0.0;
            if (h.q.m != 0 && st > 1e-14)
                dph = h.radial(r) * h.theta(ct) * h.phi_derivative(phi) / (r * st);

            // unit vectors r^, theta^, phi^
            return {dr * st * cp + dth * ct * cp - dph * sp,
                    dr * st * sp + dth * ct * sp + dph * cp,
                    dr * ct - dth * st, 0.0};
        }
        case TrialKind::shell: {
            const auto& s = std::get<ShellParams>(params);
            const double r = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
            if (r == 0.0) return {0, 0, 0, 0};
            const double d = s.profile_derivative(r) / r;
            return {d * p.x1, d * p.x2, d * p.x3, 0.0};
        }
        case TrialKind::weyl: {
            const auto& w = std::get<WeylParams>(params);
            const double fibre = 1.0 / std::sqrt(2.0 * kPi * w.R);
            const double b1 = w.b(p.x1), b2 = w.b(p.x2), b3 = w.b(p.x3);
            return {fibre * w.b_prime(p.x1) * b2 * b3, fibre * b1 * w.b_prime(p.x2) * b3,
                    fibre * b1 * b2 * w.b_prime(p.x3), 0.0};
        }
    }
    return {0, 0, 0, 0};
}

// --- factories ---------------------------------------------------------------------

TrialFunction optimizing_sequence(const OptimizingSequenceSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("optimizing_sequence: n must be >= 1");
    if (!(spec.delta > 0.0 && spec.delta < 0.5))
        throw std::invalid_argument("optimizing_sequence: delta must lie in (0, 1/2)");
    TrialFunction t;
    t.kind = TrialKind::radial4d;
    t.params = RadialProfile{RadialProfile::Shape::optimizing_sequence, spec};
    t.support = {0.0, 1.5 * spec.delta, true};
    return t;
}

TrialFunction gaussian_trial() {
    TrialFunction t;
    t.kind = TrialKind::radial4d;
    t.params = RadialProfile{RadialProfile::Shape::gaussian, {1, 0.4}};
    t.support = {0.0, std::numeric_limits<double>::infinity(), false};
    return t;
}

TrialFunction hydrogen_eigenfunction(const HydrogenQuantumNumbers& q) {
    if (q.N < 1) throw std::invalid_argument("hydrogen: N must be >= 1");
    if (q.l < 0 || q.l > q.N - 1) throw std::invalid_argument("hydrogen: l out of range");
    if (q.m < -q.l || q.m > q.l) throw std::invalid_argument("hydrogen: m out of range");

    HydrogenParams h;
    h.q = q;
    const int N = q.N, l = q.l, m = std::abs(q.m);
    h.radial_norm = std::sqrt(std::pow(2.0 / N, 3) / (2.0 * N)) *
                    factorial_ratio_sqrt(N - l - 1, N + l);
    h.theta_norm = std::sqrt((2.0 * l + 1.0) / 2.0) * factorial_ratio_sqrt(l - m, l + m);

    TrialFunction t;
    t.kind = TrialKind::hydrogen3d;
    t.params = h;
    t.support = {0.0, std::numeric_limits<double>::infinity(), false};
    return t;
}

TrialFunction shell_trial(double rho, double R) {
    if (!(rho > 0.0)) throw std::invalid_argument("shell_trial: rho must be positive");
    if (!(R > 0.0)) throw std::invalid_argument("shell_trial: R must be positive");
    TrialFunction t;
    t.kind = TrialKind::shell;
    t.params = ShellParams{rho, R, bump_norm_3d()};
    t.support = {rho, 2.0 * rho, true};
    return t;
}

TrialFunction weyl_trial(double k, int n, double R) {
    if (n < 1) throw std::invalid_argument("weyl_trial: n must be >= 1");
    if (k < 0.0) throw std::invalid_argument("weyl_trial: k must be >= 0");
    if (!(R > 0.0)) throw std::invalid_argument("weyl_trial: R must be positive");
    TrialFunction t;
    t.kind = TrialKind::weyl;
    t.params = WeylParams{k, n, R, bump_norm_1d()};
    const double root3 = std::sqrt(3.0);
    t.support = {root3 * n * (n + 1.0), root3 * n * (n + 2.0), true};
    return t;
}

} // namespace r3s1::variational
