#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bicoulomb/params.hpp"
#include "bicoulomb/special_functions.hpp"
#include "oracles.hpp"

using namespace bicoulomb;

TEST_CASE("laguerre closed forms") {
    for (double x : {0.0, 0.3, 2.0, 17.5}) {
        for (int k : {0, 1, 4, 9})
            CHECK(laguerre(0, k, x) == 1.0);
        CHECK(oracles::rel_err(laguerre(1, 1, x), 2.0 - x) < 1e-15);
        CHECK(oracles::rel_err(laguerre(2, 1, x), x * x / 2.0 - 3.0 * x + 3.0) < 2e-15);
    }
}

TEST_CASE("laguerre recurrence agrees with the direct series") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ux(0.0, 100.0);
    for (int q = 0; q <= 30; q += 3)
        for (int k = 0; k <= 30; k += 5)
            for (int t = 0; t < 6; ++t) {
                const double x = ux(rng);
                const long double want = oracles::laguerre_series(q, k, x);
                const double got = laguerre(q, k, x);
                // relative to the series' own positive-term magnitude
                const double scale = std::max(std::abs(double(want)),
                                              double(oracles::laguerre_series(q, k, -x)));
                CHECK(std::abs(got - double(want)) / scale < 1e-10);
            }
}

TEST_CASE("laguerre coefficient extraction") {
    const PolynomialCoeffs c21 = laguerre_coefficients(2, 1);
    REQUIRE(c21.degree() == 2);
    CHECK(c21.coeffs[0] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(c21.coeffs[1] == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(c21.coeffs[2] == doctest::Approx(0.5).epsilon(1e-15));
    for (int q : {0, 1, 5, 12})
        for (int k : {0, 3, 25}) {
            const PolynomialCoeffs c = laguerre_coefficients(q, k);
            for (double x : {0.1, 1.0, 7.3}) {
                // scale by the positive-term sum; the alternating Horner sum
                // cannot do better than that conditioning allows
                const double scale = double(oracles::laguerre_series(q, k, -x));
                CHECK(std::abs(c(x) - double(oracles::laguerre_series(q, k, x))) <
                      1e-13 * scale);
            }
        }
}

TEST_CASE("associated Legendre against the Rodrigues formula") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> uu(-1.0, 1.0);
    for (double u : {-0.9, -0.25, 0.0, 0.5, 1.0})
        CHECK(assoc_legendre(0, 0, u) == 1.0);
    for (double u : {-0.7, 0.2, 0.95})
        CHECK(oracles::rel_err(assoc_legendre(1, 0, u), u) < 1e-15);
    CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));  // Condon-Shortley

    for (int l = 0; l <= 8; ++l)
        for (int m = 0; m <= l; ++m)
            for (int t = 0; t < 5; ++t) {
                const double u = uu(rng);
                const double want = double(oracles::rodrigues_legendre(l, m, u));
                CHECK(std::abs(assoc_legendre(l, m, u) - want) <=
                      1e-12 * std::max(1.0, std::abs(want)));
            }
}

TEST_CASE("associated Legendre negative m and domain errors") {
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    for (int l = 1; l <= 5; ++l)
        for (int m = 1; m <= l; ++m) {
            const double u = 0.37;
            double ratio = 1.0;
            for (int i = l - m + 1; i <= l + m; ++i)
                ratio /= i;
            const double want = (m % 2 == 0 ? 1.0 : -1.0) * ratio * assoc_legendre(l, m, u);
            CHECK(oracles::rel_err(assoc_legendre(l, -m, u), want) < 1e-13);
        }
    CHECK_THROWS_AS(assoc_legendre(2, 3, 0.5), DomainError);
    CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), DomainError);
    CHECK_THROWS_AS(assoc_legendre(-1, 0, 0.5), DomainError);
}

TEST_CASE("spherical harmonics") {
    CHECK(oracles::rel_err(spherical_harmonic(0, 0, 0.7, 1.3).real(),
                           1.0 / std::sqrt(4.0 * std::numbers::pi)) < 1e-14);
    CHECK(std::abs(spherical_harmonic(0, 0, 0.7, 1.3).imag()) < 1e-16);

    // unit norm on the sphere by an independent quadrature
    const double n21 = oracles::sphere_norm2(
        [](double th, double ph) { return spherical_harmonic(2, 1, th, ph); });
    CHECK(std::abs(n21 - 1.0) < 1e-10);

    // conjugation symmetry Y_{l,-m} = (-1)^m conj(Y_{l,m})
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uth(0.01, std::numbers::pi - 0.01);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * std::numbers::pi);
    for (int l = 0; l <= 6; ++l)
        for (int m = 0; m <= l; ++m) {
            const double th = uth(rng), ph = uph(rng);
            const auto lhs = spherical_harmonic(l, -m, th, ph);
            const auto rhs =
                (m % 2 == 0 ? 1.0 : -1.0) * std::conj(spherical_harmonic(l, m, th, ph));
            CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(rhs)));
        }
    CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.3, 0.0), DomainError);
}

TEST_CASE("radial function closed forms") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    for (double r : {0.05, 0.7, 3.0, 14.0}) {
        CHECK(oracles::rel_err(radial_u(1, 0, 1.0, p, r), 2.0 * std::exp(-r)) < 1e-14);
        CHECK(oracles::rel_err(radial_u(2, 1, 1.0, p, r),
                               r * std::exp(-r / 2.0) / std::sqrt(24.0)) < 1e-14);
    }
}

TEST_CASE("radial normalization") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    auto norm_integral = [&](int n, int l, double xi, int intervals) {
        const double r_cut = (4.0 * n + 60.0) * n * xi * xi / 2.0;
        return oracles::simpson(
            [&](double r) {
                if (r <= 0.0)
                    return 0.0;
                const double u = radial_u(n, l, xi, p, r);
                return u * u * r * r;
            },
            0.0, r_cut, intervals);
    };
    CHECK(std::abs(norm_integral(3, 1, 1.0, 300000) - 1.0) < 1e-10);
    for (int n = 1; n <= 10; ++n)
        for (int l = 0; l < n; ++l)
            for (double xi : {0.5, 1.0, 2.0})
                CHECK(std::abs(norm_integral(n, l, xi, 100000) - 1.0) < 1e-8);
}

TEST_CASE("xi scaling law") {
    // u with xi_s = c equals the xi_s = 1 evaluation at r/c^2, scaled by c^-3
    const PhysicalParams p = PhysicalParams::atomic_units();
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> ur(0.1, 40.0);
    std::uniform_real_distribution<double> uc(0.3, 2.5);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + int(rng() % 8);
        const int l = int(rng() % n);
        const double c = uc(rng), r = ur(rng);
        const double lhs = radial_u(n, l, c, p, r);
        const double rhs = radial_u(n, l, 1.0, p, r / (c * c)) / (c * c * c);
        CHECK(oracles::rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("radial function domain errors") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    CHECK_THROWS_AS(radial_u(2, 2, 1.0, p, 1.0), DomainError);
    CHECK_THROWS_AS(radial_u(2, 3, 1.0, p, 1.0), DomainError);
    CHECK_THROWS_AS(radial_u(0, 0, 1.0, p, 1.0), DomainError);
    CHECK_THROWS_AS(radial_u(2, 1, 0.0, p, 1.0), DomainError);
    CHECK_THROWS_AS(radial_u(2, 1, 1.0, p, -1.0), DomainError);
}
