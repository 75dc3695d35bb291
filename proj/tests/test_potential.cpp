#include <doctest.h>

#include "r3s1/potential.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace r3s1::potential;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("charge relation and critical radius") {
    CHECK(charge_to_z(0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(charge_to_z(0.1) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(charge_to_z(0.3) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(critical_radius_internal() == 0.25);
    CHECK(std::abs(critical_radius_physical() - 1.32e-11) / 1.32e-11 < 0.01);
    CHECK(charge_to_z(critical_radius_internal()) == doctest::Approx(1.0));
    // unit round trip
    const double R_m = 2.5e-11;
    CHECK(bohr_to_meters(meters_to_bohr(R_m)) == doctest::Approx(R_m).epsilon(1e-12));
}

TEST_CASE("closed form: far field restores the 3d Coulomb law") {
    const auto spec = PotentialSpec::from_radius(0.1, 100000);
    const double v = closed_form({2.0, 0.05}, spec);
    CHECK(std::abs(v / (-1.0 / (2.0 * 2.0 * 0.1)) - 1.0) < 0.01); // -2.5 within 1%
    const auto img = image_sum({2.0, 0.05}, spec);
    CHECK(std::abs(img.value - v) <= img.tail_bound);
}

TEST_CASE("closed form: near field is the 4d inverse square") {
    const auto spec = PotentialSpec::from_radius(1.0, 10000);
    const double r = 1e-3;
    const double v = closed_form({r, 0.0}, spec);
    CHECK(std::abs(v / (-1.0 / (r * r)) - 1.0) < 1e-3);
    const auto img = image_sum({r, 0.0}, spec);
    CHECK(std::abs(img.value - v) <= img.tail_bound);
}

TEST_CASE("closed form: r -> 0 limit at the far fibre point is -1/(4R^2)") {
    for (double R : {1.0, 0.25}) {
        const auto spec = PotentialSpec::from_radius(R, 10000);
        const double v = closed_form({1e-8, kPi * R}, spec);
        CHECK(v == doctest::Approx(-1.0 / (4.0 * R * R)).epsilon(1e-10));
        // cross-check against the image sum slightly off the axis
        const auto img = image_sum({1e-6, kPi * R}, spec);
        CHECK(std::abs(img.value + 1.0 / (4.0 * R * R)) < 1e-8);
    }
}

TEST_CASE("closed form agrees with the fibre Fourier series") {
    // sinh a / (cosh a - cos b) = 1 + 2 sum_m e^{-m a} cos(m b)
    const auto spec = PotentialSpec::from_radius(0.5, 100);
    for (double r : {0.2, 1.0, 3.0}) {
        for (double x4 : {0.0, 0.3, kPi * 0.5 - 1e-3}) {
            const double a = r / spec.R, b = x4 / spec.R;
            double series = 1.0;
            for (int m = 1; m < 400; ++m) series += 2.0 * std::exp(-m * a) * std::cos(m * b);
            const double expected = -series / (2.0 * spec.R * r);
            CHECK(closed_form({r, x4}, spec) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("image sum: single-image truncation and the lambda(2) point") {
    const auto spec0 = PotentialSpec::with_coupling(1.0, 4.0, 0);
    const auto img0 = image_sum({1.0, 0.0}, spec0);
    CHECK(img0.partial_sum == doctest::Approx(-1.0).epsilon(1e-15)); // n = 0 term only
    // the corrected value still encloses the closed form
    const double cf = closed_form({1.0, 0.0}, spec0);
    CHECK(std::abs(img0.value - cf) <= img0.tail_bound);

    // (r=0, x4=pi R): -sum 1/(pi(2n-1))^2 = -1/4 (lambda(2) = pi^2/8)
    const auto spec = PotentialSpec::from_radius(1.0, 10000);
    const auto img = image_sum({0.0, kPi}, spec);
    CHECK(img.value == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("image sum matches the closed form within its rigorous bound") {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double R : {0.05, 0.25, 1.0}) {
        const auto spec = PotentialSpec::from_radius(R, 10000);
        for (int i = 0; i < 400; ++i) {
            const double r = std::exp(std::log(1e-3) + unit(rng) * std::log(1e5));
            const double x4 = (2.0 * unit(rng) - 1.0) * kPi * R;
            const auto img = image_sum({r, x4}, spec);
            const double cf = closed_form({r, x4}, spec);
            REQUIRE(std::abs(img.value - cf) <= img.tail_bound);
            REQUIRE(img.tail_bound <= 1e-7);
        }
    }
}

TEST_CASE("remainder W: origin value, bound, sign, decay, defining identity") {
    const auto spec = PotentialSpec::from_radius(1.0, 10000);
    // direct n != 0 sum at the origin: -2 sum 1/(2 pi n)^2 = -zeta(2)/(2 pi^2) = -1/12
    CHECK(remainder_w({0.0, 0.0}, spec) == doctest::Approx(-1.0 / 12.0).epsilon(1e-10));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double R : {0.25, 1.0}) {
        const auto s = PotentialSpec::from_radius(R, 10000);
        for (int i = 0; i < 300; ++i) {
            const double r = std::exp(std::log(1e-3) + unit(rng) * std::log(1e5));
            const double x4 = (2.0 * unit(rng) - 1.0) * kPi * R;
            const double w = remainder_w({r, x4}, s);
            REQUIRE(w < 0.0);
            REQUIRE(std::abs(w) <= remainder_bound(s) * (1.0 + 1e-12));
        }
    }
    // decay: W ~ -(1/(2Rr) - 1/r^2) far out, so ~ -4.9e-3 at r = 100
    const double w100 = remainder_w({100.0, 0.5}, spec);
    CHECK(std::abs(w100) < 1e-2);
    CHECK(w100 == doctest::Approx(-(1.0 / 200.0) + 1.0 / (100.0 * 100.0 + 0.25)).epsilon(1e-4));
    CHECK(std::abs(remainder_w({1000.0, 0.5}, spec)) < 1e-3);
    CHECK(std::abs(remainder_w({1000.0, 0.5}, spec)) < std::abs(w100));

    // defining identity W = V_c + 1/(r^2 + x4^2) at moderate points
    for (double r : {0.5, 1.0, 3.0}) {
        const double w = remainder_w({r, 0.7}, spec);
        const double id = closed_form({r, 0.7}, spec) + 1.0 / (r * r + 0.7 * 0.7);
        CHECK(w == doctest::Approx(id).epsilon(1e-10));
    }
}

TEST_CASE("axial integral: the -pi/r identity and its antiderivative") {
    const auto spec1 = PotentialSpec::from_radius(1.0, 100);
    CHECK(axial_integral(2.0, spec1).value == doctest::Approx(-kPi / 2.0).epsilon(1e-10));

    // R-independence
    const auto spec01 = PotentialSpec::from_radius(0.1, 100);
    CHECK(axial_integral(1.0, spec01).value == doctest::Approx(-kPi).epsilon(1e-10));

    // quadrature vs antiderivative at r = 10
    const auto q = axial_integral(10.0, spec1);
    CHECK(std::abs(q.value - axial_integral_antiderivative(10.0, spec1)) < 1e-10);

    // partial-interval antiderivative against quadrature
    const double lo = -1.1, hi = 2.0;
    const auto part = r3s1::quadrature::integrate(
        [&](double x4) { return closed_form({3.0, x4}, spec1); }, lo, hi, 1e-13);
    CHECK(part.value ==
          doctest::Approx(axial_antiderivative_between(3.0, lo, hi, spec1)).epsilon(1e-11));

    // fibre integral of V^2, closed form vs quadrature
    for (double r : {0.3, 2.0, 20.0}) {
        const auto sq = r3s1::quadrature::integrate(
            [&](double x4) {
                const double v = closed_form({r, x4}, spec1);
                return v * v;
            },
            -kPi * spec1.R, kPi * spec1.R, 1e-12);
        CHECK(sq.value == doctest::Approx(axial_square_integral(r, spec1)).epsilon(1e-9));
    }
}

TEST_CASE("monotonicity and sign of the closed form") {
    const auto spec = PotentialSpec::from_radius(0.25, 100);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double r = std::exp(std::log(1e-3) + unit(rng) * std::log(1e5));
        const double x4 = (2.0 * unit(rng) - 1.0) * kPi * spec.R;
        const double v = closed_form({r, x4}, spec);
        REQUIRE(v < 0.0);
        REQUIRE(closed_form({r, 0.0}, spec) <= closed_form({r, kPi * spec.R}, spec));
    }
}

TEST_CASE("domain errors") {
    const auto spec = PotentialSpec::from_radius(0.5, 10);
    CHECK_THROWS_AS(closed_form({0.0, 0.0}, spec), std::domain_error);
    CHECK_THROWS_AS(closed_form({1.0, 2.0 * kPi}, spec), std::domain_error);
    CHECK_THROWS_AS(image_sum({0.0, 0.0}, spec), std::domain_error);
    CHECK_THROWS_AS(axial_integral(0.0, spec), std::domain_error);
    CHECK_THROWS_AS(PotentialSpec::from_radius(-1.0), std::domain_error);
    // reduction helper puts arbitrary coordinates back into range
    const double reduced = reduce_x4(5.25 * kPi * spec.R * 2.0, spec.R);
    CHECK(std::abs(reduced) <= kPi * spec.R);
    CHECK_NOTHROW(closed_form({1.0, reduced}, spec));
}
