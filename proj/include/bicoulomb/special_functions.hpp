#pragma once

// Real special functions behind the eigenfunctions: generalized Laguerre
// polynomials, associated Legendre functions (Condon-Shortley phase) and
// orthonormal complex spherical harmonics over C(i1), plus the normalized
// radial function u_{n l}(r) for one idempotent sector.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "bicoulomb/errors.hpp"
#include "bicoulomb/params.hpp"

namespace bicoulomb {

// Dense polynomial, coefficients in ascending degree order.
struct PolynomialCoeffs {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }
};

// Generalized Laguerre polynomial L_q^k(x) by the three-term recurrence in q.
// Stable for the degrees used here (q up to ~50) and avoids the factorial
// overflow of the series form.
inline double laguerre(int q, int k, double x) {
    if (q < 0 || k < 0)
        throw DomainError("laguerre: q and k must be nonnegative");
    if (q == 0)
        return 1.0;
    double prev = 1.0;               // L_0
    double cur = 1.0 + k - x;        // L_1
    for (int i = 1; i < q; ++i) {
        double next = ((2.0 * i + k + 1.0 - x) * cur - (i + k) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Coefficients of L_q^k in ascending degree: c_m = (-1)^m binom(q+k, q-m)/m!.
// Built from the exact term ratio c_{m+1}/c_m = -(q-m)/((m+1)(k+m+1)).
inline PolynomialCoeffs laguerre_coefficients(int q, int k) {
    if (q < 0 || k < 0)
        throw DomainError("laguerre_coefficients: q and k must be nonnegative");
    PolynomialCoeffs p;
    p.coeffs.resize(static_cast<std::size_t>(q) + 1);
    double c = 1.0;  // binom(q+k, q)
    for (int i = 1; i <= q; ++i)
        c *= double(k + i) / double(i);
    p.coeffs[0] = c;
    for (int m = 0; m < q; ++m) {
        c *= -double(q - m) / (double(m + 1) * double(k + m + 1));
        p.coeffs[static_cast<std::size_t>(m) + 1] = c;
    }
    return p;
}

// Associated Legendre P_l^m(u) with the Condon-Shortley phase.  m may be
// negative: P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
inline double assoc_legendre(int l, int m, double u) {
    if (l < 0 || std::abs(m) > l)
        throw DomainError("assoc_legendre: requires 0 <= |m| <= l");
    if (!(u >= -1.0 && u <= 1.0))
        throw DomainError("assoc_legendre: requires u in [-1, 1]");

    const int am = std::abs(m);
    // P_am^am = (-1)^am (2am-1)!! (1-u^2)^{am/2}
    double pmm = 1.0;
    if (am > 0) {
        const double s = std::sqrt((1.0 - u) * (1.0 + u));
        double odd = 1.0;
        for (int i = 1; i <= am; ++i) {
            pmm *= -odd * s;
            odd += 2.0;
        }
    }
    double result;
    if (l == am) {
        result = pmm;
    } else {
        double pm1 = u * (2.0 * am + 1.0) * pmm;  // P_{am+1}^{am}
        if (l == am + 1) {
            result = pm1;
        } else {
            double p = 0.0;
            for (int ll = am + 2; ll <= l; ++ll) {
                p = ((2.0 * ll - 1.0) * u * pm1 - (ll + am - 1.0) * pmm) / (ll - am);
                pmm = pm1;
                pm1 = p;
            }
            result = p;
        }
    }
    if (m < 0) {
        const double ratio = std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0));
        result *= (am % 2 == 0 ? 1.0 : -1.0) * ratio;
    }
    return result;
}

// Orthonormal spherical harmonic: integral of conj(Y_lm) Y_l'm' over the
// sphere is the double Kronecker delta.  Condon-Shortley phase included.
inline Complex1<double> spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l)
        throw DomainError("spherical_harmonic: requires 0 <= |m| <= l");
    const int am = std::abs(m);
    const double lognorm =
        0.5 * (std::log((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) +
               std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0));
    double base = std::exp(lognorm) * assoc_legendre(l, am, std::cos(theta));
    if (m < 0 && am % 2 != 0)
        base = -base;  // Y_{l,-m} = (-1)^m conj(Y_{l,m})
    return std::polar(1.0, m * phi) * base;
}

// Normalized sector radial function
//   u_{n l}(r) = sqrt((2Z/(n a0_s))^3 (n-l-1)! / (2n (n+l)!))
//                * exp(-zeta/2) zeta^l L_{n-l-1}^{2l+1}(zeta),
// with zeta = 2Z r/(n a0_s) and a0_s = a0 xi_s^2.  The factorial bracket is
// evaluated in log space; (n+l)! overflows doubles well before n = 50.
inline double radial_u(int n, int l, double xi_s, const PhysicalParams& params, double r) {
    if (n < 1 || l < 0 || l >= n)
        throw DomainError("radial_u: requires n >= 1 and 0 <= l < n");
    if (!(xi_s > 0.0) || !std::isfinite(xi_s))
        throw DomainError("radial_u: requires xi_s > 0");
    if (!(r > 0.0))
        throw DomainError("radial_u: requires r > 0");
    const double a0s = params.bohr_radius() * xi_s * xi_s;
    const double scale = 2.0 * params.Z / (n * a0s);
    const double zeta = scale * r;
    const double lognorm = 0.5 * (3.0 * std::log(scale) + std::lgamma(double(n - l)) -
                                  std::log(2.0 * n) - std::lgamma(double(n + l + 1)));
    const double logenv = lognorm - 0.5 * zeta + (l > 0 ? l * std::log(zeta) : 0.0);
    return std::exp(logenv) * laguerre(n - l - 1, 2 * l + 1, zeta);
}

} // namespace bicoulomb
