#include "r3s1/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace r3s1::potential {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(const SpacePoint& p, const PotentialSpec& spec) {
    if (!(p.r >= 0.0)) throw std::domain_error("potential: r must be >= 0");
    if (std::abs(p.x4) > kPi * spec.R)
        throw std::domain_error("potential: |x4| > pi R, reduce the coordinate first");
}

// One image term 1/(r^2 + u^2) at distance u along the unrolled circle.
double image_term(double r, double u) { return 1.0 / (r * r + u * u); }

// Integral of 1/(r^2 + (2 pi R t -/+ x4)^2) dt from t0 to infinity,
// where u0 = 2 pi R t0 -/+ x4 > 0.
double tail_integral(double r, double u0, double R) {
    const double w = 2.0 * kPi * R;
    if (r == 0.0) return 1.0 / (w * u0);
    return std::atan2(r, u0) / (w * r);
}

struct TailEstimate {
    double value;      // midpoint of the enclosure
    double half_width; // rigorous half-width
    double extra_sum;  // explicitly summed terms beyond the window
    long extra_terms;
};

// Enclosure of sum_{m >= m_start} 1/(r^2 + (2 pi R m - s x4)^2) for one
// tail side (s = +1 or -1).  Terms are summed explicitly until the
// integrand is convex along the tail, then bracketed between the
// trapezoid and midpoint comparison integrals.
TailEstimate one_sided_tail(double r, double x4, double R, long m_start) {
    const double w = 2.0 * kPi * R;
    TailEstimate est{0.0, 0.0, 0.0, 0};
    long m0 = m_start;
    // advance until u(m0 - 1/2) > max(r, w/8): guarantees f decreasing and
    // convex on [m0 - 1/2, infinity)
    const double need = std::max(r, 0.125 * w);
    while (w * (m0 - 0.5) - x4 <= need) {
        const double u = w * m0 - x4;
        est.extra_sum += image_term(r, u);
        ++est.extra_terms;
        ++m0;
    }
    const double f_m0 = image_term(r, w * m0 - x4);
    const double hi = tail_integral(r, w * (m0 - 0.5) - x4, R);
    const double lo = tail_integral(r, w * m0 - x4, R) + 0.5 * f_m0;
    est.value = est.extra_sum + 0.5 * (lo + hi);
    est.half_width = 0.5 * (hi - lo);
    if (est.half_width < 0.0) est.half_width = std::abs(est.half_width);
    return est;
}

} // namespace

double meters_to_bohr(double meters) { return meters / bohr_radius_m; }
double bohr_to_meters(double bohr) { return bohr * bohr_radius_m; }

double charge_to_z(double R) {
    if (!(R > 0.0)) throw std::domain_error("charge_to_z: R must be positive");
    return 4.0 * R;
}

double critical_radius_physical() { return bohr_radius_m / 4.0; }
double critical_radius_internal() { return 0.25; }

PotentialSpec PotentialSpec::from_radius(double R, int n_images) {
    return with_coupling(R, charge_to_z(R), n_images);
}

PotentialSpec PotentialSpec::with_coupling(double R, double Z, int n_images) {
    if (!(R > 0.0)) throw std::domain_error("PotentialSpec: R must be positive");
    if (n_images < 0) throw std::domain_error("PotentialSpec: n_images must be >= 0");
    return PotentialSpec{R, Z, n_images};
}

double reduce_x4(double x4, double R) {
    // remainder(x, 2 pi R) lands in [-pi R, pi R]
    return std::remainder(x4, 2.0 * kPi * R);
}

double closed_form(SpacePoint p, const PotentialSpec& spec) {
    check_domain(p, spec);
    if (p.r == 0.0 && p.x4 == 0.0)
        throw std::domain_error("closed_form: singular point (r, x4) = (0, 0)");
    const double R = spec.R;
    const double a = p.r / R;
    const double b = p.x4 / R;

    if (a > 350.0) {
        // exp-scaled far form; e^{-a} underflows harmlessly
        const double em = std::exp(-a);
        const double em2 = em * em;
        return -(1.0 / (2.0 * R * p.r)) * (1.0 - em2) / ((1.0 + em2) - 2.0 * em * std::cos(b));
    }

    // sinh(a)/a by series below a = 1e-4, keeping the r -> 0 limit exact
    double q;
    if (a < 1e-4) {
        const double a2 = a * a;
        q = 1.0 + a2 / 6.0 + a2 * a2 / 120.0 + a2 * a2 * a2 / 5040.0;
    } else {
        q = std::sinh(a) / a;
    }
    // cosh(a) - cos(b) = 2 (sinh^2(a/2) + sin^2(b/2)), cancellation-free
    const double sh = std::sinh(0.5 * a);
    const double sn = std::sin(0.5 * b);
    const double denom = 2.0 * (sh * sh + sn * sn);
    return -q / (2.0 * R * R * denom);
}

ImageSum image_sum(SpacePoint p, const PotentialSpec& spec) {
    check_domain(p, spec);
    if (p.r == 0.0 && p.x4 == 0.0)
        throw std::domain_error("image_sum: singular point (r, x4) = (0, 0)");
    const double R = spec.R;
    const double w = 2.0 * kPi * R;
    const long N = spec.n_images;

    // window |n| <= N, compensated, small terms first
    double sum = 0.0, comp = 0.0, abs_sum = 0.0;
    auto add = [&](double term) {
        abs_sum += std::abs(term);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (long n = N; n >= 1; --n) {
        add(image_term(p.r, p.x4 - w * n));
        add(image_term(p.r, p.x4 + w * n));
    }
    add(image_term(p.r, p.x4));

    const TailEstimate plus = one_sided_tail(p.r, p.x4, R, N + 1);
    const TailEstimate minus = one_sided_tail(p.r, -p.x4, R, N + 1);

    ImageSum out;
    out.partial_sum = -sum;
    out.terms = 2 * N + 1;
    out.value = -(sum + plus.value + minus.value);
    const double eps = std::numeric_limits<double>::epsilon();
    const double roundoff = 8.0 * eps * (abs_sum + plus.value + minus.value);
    out.tail_bound = plus.half_width + minus.half_width + roundoff;
    return out;
}

double remainder_w(SpacePoint p, const PotentialSpec& spec) {
    check_domain(p, spec);
    const double R = spec.R;
    const double w = 2.0 * kPi * R;
    const long N = std::max(1, spec.n_images);

    double sum = 0.0, comp = 0.0;
    auto add = [&](double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (long n = N; n >= 1; --n) {
        add(image_term(p.r, p.x4 - w * n));
        add(image_term(p.r, p.x4 + w * n));
    }
    const TailEstimate plus = one_sided_tail(p.r, p.x4, R, N + 1);
    const TailEstimate minus = one_sided_tail(p.r, -p.x4, R, N + 1);
    return -(sum + plus.value + minus.value);
}

double remainder_bound(const PotentialSpec& spec) { return 1.0 / (4.0 * spec.R * spec.R); }

quadrature::QuadResult axial_integral(double r, const PotentialSpec& spec) {
    if (!(r > 0.0)) throw std::domain_error("axial_integral: r must be positive");
    const double half = kPi * spec.R;
    auto f = [&](double x4) { return closed_form({r, x4}, spec); };
    // integrand is even in x4
    quadrature::QuadResult res = quadrature::integrate(f, 0.0, half, 1e-13, 1e-300, 6000);
    res.value *= 2.0;
    res.error *= 2.0;
    return res;
}

double axial_antiderivative_between(double r, double x4_lo, double x4_hi,
                                    const PotentialSpec& spec) {
    if (!(r > 0.0)) throw std::domain_error("axial antiderivative: r must be positive");
    const double R = spec.R;
    const double c = 1.0 / std::tanh(0.5 * r / R); // coth(r/(2R))
    auto F = [&](double x4) { return -std::atan(c * std::tan(0.5 * x4 / R)) / r; };
    return F(x4_hi) - F(x4_lo);
}

double axial_integral_antiderivative(double r, const PotentialSpec& spec) {
    const double half = kPi * spec.R;
    return axial_antiderivative_between(r, -half, half, spec);
}

double axial_square_integral(double r, const PotentialSpec& spec) {
    if (!(r > 0.0)) throw std::domain_error("axial_square_integral: r must be positive");
    const double a = r / spec.R;
    const double coth = (a > 350.0) ? 1.0 : 1.0 / std::tanh(a);
    return kPi * coth / (2.0 * spec.R * r * r);
}

} // namespace r3s1::potential
