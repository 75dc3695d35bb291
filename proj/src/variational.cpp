#include "r3s1/variational.hpp"

#include "r3s1/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace r3s1::variational {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCTheta = 2.0 * kPi * kPi; // surface area of the unit S^3

using quadrature::integrate;
using quadrature::QuadResult;

// --- Gauss-Legendre rule (for the far-cube tensor integrals) -----------------

struct GLRule {
    std::vector<double> x, w;
};

const GLRule& gauss_legendre_32() {
    static const GLRule rule = [] {
        const int n = 32;
        GLRule r;
        r.x.resize(n);
        r.w.resize(n);
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.x[i] = -x;
            r.x[n - 1 - i] = x;
            r.w[i] = w;
            r.w[n - 1 - i] = w;
        }
        return r;
    }();
    return rule;
}

// tensor-product integral of f(x1,x2,x3) over [lo,hi]^3
template <typename F>
double tensor_integral(double lo, double hi, F&& f) {
    const GLRule& g = gauss_legendre_32();
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    const int n = static_cast<int>(g.x.size());
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = mid + half * g.x[i];
        ws[i] = half * g.w[i];
    }
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                sum += ws[i] * ws[j] * ws[k] * f(xs[i], xs[j], xs[k]);
    return sum;
}

// --- forms of the optimizing sequence ----------------------------------------
//
// psi = rho^p eta(rho), p = -1 + 1/n.  On the plateau (0, delta) the power
// integrals are exact; only the bridge (delta, 3 delta/2) needs quadrature.

struct SeqForms {
    double norm_sq, kinetic, singular, quad_error;
};

SeqForms seq_forms(const OptimizingSequenceSpec& s) {
    const double p = -1.0 + 1.0 / s.n;
    const double d = s.delta;
    auto plateau = [&](double expo) { return std::pow(d, expo + 1.0) / (expo + 1.0); };

    auto eta = [&](double rho) { return cutoff_eta(rho, d); };
    auto etap = [&](double rho) { return cutoff_eta_prime(rho, d); };

    QuadResult norm_b = integrate(
        [&](double rho) {
            const double e = eta(rho);
            return std::pow(rho, 2.0 * p + 3.0) * e * e;
        },
        d, 1.5 * d, 1e-13);
    QuadResult sing_b = integrate(
        [&](double rho) {
            const double e = eta(rho);
            return std::pow(rho, 2.0 * p + 1.0) * e * e;
        },
        d, 1.5 * d, 1e-13);
    QuadResult kin_b = integrate(
        [&](double rho) {
            const double dpsi =
                p * std::pow(rho, p - 1.0) * eta(rho) + std::pow(rho, p) * etap(rho);
            return dpsi * dpsi * rho * rho * rho;
        },
        d, 1.5 * d, 1e-13);

    SeqForms f;
    f.norm_sq = kCTheta * (plateau(2.0 * p + 3.0) + norm_b.value);
    f.singular = kCTheta * (plateau(2.0 * p + 1.0) + sing_b.value);
    f.kinetic = kCTheta * (p * p * plateau(2.0 * p + 1.0) + kin_b.value);
    f.quad_error = kCTheta * (norm_b.error + sing_b.error + kin_b.error);
    return f;
}

// --- hydrogen radial forms ------------------------------------------------------

struct HydrogenForms {
    double norm_sq, kinetic, v_omega, quad_error;
};

HydrogenForms hydrogen_forms(const HydrogenParams& h, const potential::PotentialSpec& spec) {
    const int N = h.q.N, l = h.q.l;
    const double rcut = 60.0 * N + 40.0;

    QuadResult norm = integrate(
        [&](double r) {
            const double R = h.radial(r);
            return R * R * r * r;
        },
        0.0, rcut, 1e-12);
    QuadResult kin = integrate(
        [&](double r) {
            const double dR = h.radial_derivative(r);
            double t = dR * dR * r * r;
            if (l > 0) {
                const double R = h.radial(r);
                t += l * (l + 1.0) * R * R;
            }
            return t;
        },
        0.0, rcut, 1e-12);
    QuadResult pot = integrate(
        [&](double r) {
            const double R = h.radial(r);
            return R * R * r * r * potential::axial_integral(r, spec).value;
        },
        0.0, rcut, 1e-11);

    HydrogenForms f;
    f.norm_sq = norm.value;
    f.kinetic = kin.value;
    f.v_omega = pot.value / (2.0 * kPi * spec.R);
    f.quad_error = norm.error + kin.error + pot.error / (2.0 * kPi * spec.R);
    return f;
}

// --- 1d invariants of the normalized weyl bump ----------------------------------

struct BumpInvariants {
    double grad_sq;  // int b'^2, with int b^2 = 1
    double lap_sq;   // int b''^2
};

const BumpInvariants& bump_invariants() {
    static const BumpInvariants inv = [] {
        const double n2 = integrate([](double t) { return bump(t) * bump(t); }, 1.0, 2.0, 1e-14).value;
        const double g2 =
            integrate([](double t) { return bump_prime(t) * bump_prime(t); }, 1.0, 2.0, 1e-14).value;
        const double l2 =
            integrate([](double t) { return bump_second(t) * bump_second(t); }, 1.0, 2.0, 1e-14).value;
        return BumpInvariants{g2 / n2, l2 / n2};
    }();
    return inv;
}

} // namespace

// --- hardy quotient --------------------------------------------------------------

HardyQuotient hardy_quotient(const TrialFunction& psi, int d) {
    if (d < 3) throw std::invalid_argument("hardy_quotient: d must be >= 3");
    const double hardy_const = 0.25 * (d - 2.0) * (d - 2.0);
    HardyQuotient out;

    switch (psi.kind) {
        case TrialKind::radial4d: {
            const auto& rp = std::get<RadialProfile>(psi.params);
            const double area = (d == 4) ? kCTheta : 4.0 * kPi;
            if (d != 3 && d != 4)
                throw std::invalid_argument("hardy_quotient: radial kinds support d in {3,4}");
            if (rp.shape == RadialProfile::Shape::optimizing_sequence) {
                const auto& s = rp.seq;
                const double p = -1.0 + 1.0 / s.n;
                if (2.0 * p + d - 3.0 <= -1.0) {
                    out.unbounded = true;
                    out.value = std::numeric_limits<double>::infinity();
                    return out;
                }
                if (d == 4) {
                    const SeqForms f = seq_forms(s);
                    out.numerator = f.kinetic;
                    out.denominator = hardy_const * f.singular;
                } else {
                    // d = 3 with n = 1 (the only convergent case): quadrature
                    QuadResult num = integrate(
                        [&](double rho) {
                            const double dp = rp.derivative(rho);
                            return area * dp * dp * std::pow(rho, d - 1.0);
                        },
                        1e-12, 1.5 * s.delta, 1e-12);
                    QuadResult den = integrate(
                        [&](double rho) {
                            const double v = rp.value(rho);
                            return area * v * v * std::pow(rho, d - 3.0);
                        },
                        1e-12, 1.5 * s.delta, 1e-12);
                    out.numerator = num.value;
                    out.denominator = hardy_const * den.value;
                }
            } else { // gaussian
                QuadResult num = integrate(
                    [&](double rho) {
                        const double dp = rp.derivative(rho);
                        return area * dp * dp * std::pow(rho, d - 1.0);
                    },
                    0.0, 40.0, 1e-13);
                QuadResult den = integrate(
                    [&](double rho) {
                        const double v = rp.value(rho);
                        return area * v * v * std::pow(rho, d - 3.0);
                    },
                    0.0, 40.0, 1e-13);
                out.numerator = num.value;
                out.denominator = hardy_const * den.value;
            }
            break;
        }
        case TrialKind::hydrogen3d: {
            if (d != 3) throw std::invalid_argument("hardy_quotient: hydrogen kind is 3d");
            const auto& h = std::get<HydrogenParams>(psi.params);
            const double rcut = 60.0 * h.q.N + 40.0;
            QuadResult num = integrate(
                [&](double r) {
                    const double dR = h.radial_derivative(r);
                    double t = dR * dR * r * r;
                    if (h.q.l > 0) {
                        const double R = h.radial(r);
                        t += h.q.l * (h.q.l + 1.0) * R * R;
                    }
                    return t;
                },
                0.0, rcut, 1e-12);
            QuadResult den =
                integrate([&](double r) { const double R = h.radial(r); return R * R; },
                          0.0, rcut, 1e-12);
            out.numerator = num.value;
            out.denominator = hardy_const * den.value;
            break;
        }
        case TrialKind::shell: {
            if (d != 3) throw std::invalid_argument("hardy_quotient: shell kind is 3d");
            const auto& s = std::get<ShellParams>(psi.params);
            QuadResult num = integrate(
                [&](double r) {
                    const double df = s.profile_derivative(r);
                    return df * df * r * r;
                },
                s.rho, 2.0 * s.rho, 1e-12);
            QuadResult den =
                integrate([&](double r) { const double f = s.profile(r); return f * f; },
                          s.rho, 2.0 * s.rho, 1e-12);
            out.numerator = num.value;
            out.denominator = hardy_const * den.value;
            break;
        }
        case TrialKind::weyl: {
            if (d != 3) throw std::invalid_argument("hardy_quotient: weyl envelope is 3d");
            const auto& w = std::get<WeylParams>(psi.params);
            const double lo = w.n * (w.n + 1.0), hi = w.n * (w.n + 2.0);
            const double grad = tensor_integral(lo, hi, [&](double a, double b, double c) {
                const double g1 = w.b_prime(a) * w.b(b) * w.b(c);
                const double g2 = w.b(a) * w.b_prime(b) * w.b(c);
                const double g3 = w.b(a) * w.b(b) * w.b_prime(c);
                return g1 * g1 + g2 * g2 + g3 * g3;
            });
            const double sing = tensor_integral(lo, hi, [&](double a, double b, double c) {
                const double f = w.b(a) * w.b(b) * w.b(c);
                return f * f / (a * a + b * b + c * c);
            });
            out.numerator = grad;
            out.denominator = hardy_const * sing;
            break;
        }
    }
    if (out.denominator == 0.0) {
        out.unbounded = true;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.value = out.numerator / out.denominator;
    return out;
}

// --- instability ------------------------------------------------------------------

RayleighReport instability_rayleigh(double Z, const OptimizingSequenceSpec& spec) {
    if (Z < 0.0) throw std::invalid_argument("instability_rayleigh: Z must be >= 0");
    const SeqForms f = seq_forms(spec);
    RayleighReport r;
    r.kinetic = f.kinetic;
    r.potential = -f.singular;
    r.total = r.kinetic + Z * r.potential;
    r.norm_sq = f.norm_sq;
    r.quotient = r.total / r.norm_sq;
    r.quadrature_error = f.quad_error;
    return r;
}

SequenceDiagnostics optimizing_sequence_diagnostics(const OptimizingSequenceSpec& spec) {
    const SeqForms f = seq_forms(spec);
    SequenceDiagnostics d;
    d.norm_sq = f.norm_sq;
    d.kinetic = f.kinetic;
    d.singular = f.singular;
    d.kinetic_minus_singular = f.kinetic - f.singular;
    d.singular_over_n = f.singular / spec.n;
    d.c_theta = kCTheta;
    return d;
}

double compactified_bound_constant(double eps, double R) {
    if (!(eps > 0.0) || !(R > 0.0))
        throw std::invalid_argument("compactified_bound_constant: eps, R must be positive");
    // plateau cutoff xi: 1 inside |x| <= pi R/2, bridge down to 3 pi R/4
    const double a1 = 0.5 * kPi * R;
    const double bridge = 0.25 * kPi * R;
    // max |d eta/ds| of the mollifier bridge, computed once
    static const double max_slope = [] {
        double m = 0.0;
        for (int i = 1; i < 2000; ++i) {
            const double s = i / 2000.0;
            const double one_ms2 = 1.0 - s * s;
            const double v = std::exp(1.0 - 1.0 / one_ms2) * 2.0 * s / (one_ms2 * one_ms2);
            m = std::max(m, v);
        }
        return m;
    }();
    const double grad_xi_sup = max_slope / bridge;
    return (1.0 + 1.0 / eps) * grad_xi_sup * grad_xi_sup + 1.0 / (a1 * a1) +
           1.0 / (4.0 * R * R);
}

// --- ground-state bound -------------------------------------------------------------

RayleighReport ground_state_bound(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("ground_state_bound: R must be positive");
    const potential::PotentialSpec spec = potential::PotentialSpec::from_radius(R, 100);
    const TrialFunction phi = hydrogen_eigenfunction({1, 0, 0});
    const auto& h = std::get<HydrogenParams>(phi.params);
    const HydrogenForms f = hydrogen_forms(h, spec);

    RayleighReport r;
    r.kinetic = f.kinetic / f.norm_sq;
    r.potential = f.v_omega / f.norm_sq;
    r.total = r.kinetic + spec.Z * r.potential;
    r.norm_sq = 1.0;
    r.quotient = r.total;
    r.quadrature_error = f.quad_error;
    return r;
}

// --- weyl residual -------------------------------------------------------------------

WeylResidual weyl_residual(double k, int n, double R) {
    return weyl_residual(k, n, R, potential::charge_to_z(R));
}

WeylResidual weyl_residual(double k, int n, double R, double Z) {
    const TrialFunction t = weyl_trial(k, n, R);
    const auto& w = std::get<WeylParams>(t.params);
    const potential::PotentialSpec spec = potential::PotentialSpec::with_coupling(R, Z, 100);
    const BumpInvariants& inv = bump_invariants();

    const double grad_sq_n = inv.grad_sq / (double(n) * n);         // per-axis int b_n'^2
    const double lap_sq_n = inv.lap_sq / (std::pow(double(n), 4));  // per-axis int b_n''^2
    const double lap = 3.0 * lap_sq_n + 6.0 * grad_sq_n * grad_sq_n; // ||Lap phi_n||^2
    const double grad = 3.0 * grad_sq_n;                             // ||grad phi_n||^2

    const double lo = n * (n + 1.0), hi = n * (n + 2.0);
    // int Lap(phi_n) phi_n / r
    const double t3 = tensor_integral(lo, hi, [&](double a, double b, double c) {
        const double b1 = w.b(a), b2 = w.b(b), b3 = w.b(c);
        const double lap_phi =
            w.b_second(a) * b2 * b3 + b1 * w.b_second(b) * b3 + b1 * b2 * w.b_second(c);
        return lap_phi * b1 * b2 * b3 / std::sqrt(a * a + b * b + c * c);
    });
    // int phi_n^2 * (fibre integral of V_c^2)
    const double t2 = tensor_integral(lo, hi, [&](double a, double b, double c) {
        const double f = w.b(a) * w.b(b) * w.b(c);
        const double r = std::sqrt(a * a + b * b + c * c);
        return f * f * potential::axial_square_integral(r, spec);
    });

    const double res_sq = lap + 4.0 * k * k * grad + (Z / R) * t3 + Z * Z / (2.0 * kPi * R) * t2;

    WeylResidual out;
    out.residual = std::sqrt(std::max(0.0, res_sq));
    out.grad_norm = std::sqrt(grad);
    out.lap_norm = std::sqrt(lap);
    const double r_min = std::sqrt(3.0) * lo;
    const double arg = r_min / (2.0 * R);
    out.sup_v = 1.0 / (2.0 * R * r_min) * ((arg > 350.0) ? 1.0 : 1.0 / std::tanh(arg));
    out.bound = std::sqrt(lap + 12.0 * k * k * grad) + Z * out.sup_v;
    return out;
}

// --- general rayleigh ------------------------------------------------------------------

RayleighReport rayleigh(const TrialFunction& psi, const potential::PotentialSpec& spec,
                        Domain domain) {
    RayleighReport r;
    switch (psi.kind) {
        case TrialKind::radial4d: {
            if (domain != Domain::r4)
                throw std::invalid_argument("rayleigh: radial4d trials live on R^4");
            const auto& rp = std::get<RadialProfile>(psi.params);
            if (rp.shape == RadialProfile::Shape::optimizing_sequence) {
                return instability_rayleigh(spec.Z, rp.seq);
            }
            // gaussian on R^4 with V = -1/|x|^2
            QuadResult norm = integrate(
                [&](double rho) {
                    const double v = rp.value(rho);
                    return kCTheta * v * v * rho * rho * rho;
                },
                0.0, 40.0, 1e-13);
            QuadResult kin = integrate(
                [&](double rho) {
                    const double d = rp.derivative(rho);
                    return kCTheta * d * d * rho * rho * rho;
                },
                0.0, 40.0, 1e-13);
            QuadResult sing = integrate(
                [&](double rho) {
                    const double v = rp.value(rho);
                    return kCTheta * v * v * rho;
                },
                0.0, 40.0, 1e-13);
            r.kinetic = kin.value;
            r.potential = -sing.value;
            r.norm_sq = norm.value;
            r.quadrature_error = kin.error + sing.error + norm.error;
            break;
        }
        case TrialKind::hydrogen3d: {
            if (domain != Domain::omega)
                throw std::invalid_argument("rayleigh: hydrogen trials are lifted to Omega");
            const auto& h = std::get<HydrogenParams>(psi.params);
            const HydrogenForms f = hydrogen_forms(h, spec);
            r.kinetic = f.kinetic;
            r.potential = f.v_omega;
            r.norm_sq = f.norm_sq;
            r.quadrature_error = f.quad_error;
            break;
        }
        case TrialKind::shell: {
            if (domain != Domain::omega)
                throw std::invalid_argument("rayleigh: shell trials live on Omega");
            const auto& s = std::get<ShellParams>(psi.params);
            const double two_pi_r = 2.0 * kPi * s.R;
            QuadResult norm = integrate(
                [&](double rr) {
                    const double f = s.profile(rr);
                    return 4.0 * kPi * two_pi_r * f * f * rr * rr;
                },
                s.rho, 2.0 * s.rho, 1e-12);
            QuadResult kin = integrate(
                [&](double rr) {
                    const double df = s.profile_derivative(rr);
                    return 4.0 * kPi * two_pi_r * df * df * rr * rr;
                },
                s.rho, 2.0 * s.rho, 1e-12);
            QuadResult pot = integrate(
                [&](double rr) {
                    const double f = s.profile(rr);
                    return 4.0 * kPi * f * f * rr * rr *
                           potential::axial_integral(rr, spec).value;
                },
                s.rho, 2.0 * s.rho, 1e-11);
            r.kinetic = kin.value;
            r.potential = pot.value;
            r.norm_sq = norm.value;
            r.quadrature_error = kin.error + pot.error + norm.error;
            break;
        }
        case TrialKind::weyl: {
            if (domain != Domain::omega)
                throw std::invalid_argument("rayleigh: weyl trials live on Omega");
            const auto& w = std::get<WeylParams>(psi.params);
            const BumpInvariants& inv = bump_invariants();
            const int n = w.n;
            const double grad = 3.0 * inv.grad_sq / (double(n) * n);
            const double lo = n * (n + 1.0), hi = n * (n + 2.0);
            const double t1 = tensor_integral(lo, hi, [&](double a, double b, double c) {
                const double f = w.b(a) * w.b(b) * w.b(c);
                return f * f / std::sqrt(a * a + b * b + c * c);
            });
            r.norm_sq = 1.0;
            r.kinetic = grad + 3.0 * w.k * w.k;
            r.potential = -t1 / (2.0 * spec.R);
            r.quadrature_error = 1e-10;
            break;
        }
    }
    r.total = r.kinetic + spec.Z * r.potential;
    r.quotient = r.total / r.norm_sq;
    return r;
}

} // namespace r3s1::variational
