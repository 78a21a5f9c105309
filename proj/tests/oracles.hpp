#pragma once

// Test-side oracles, kept independent of the library's evaluation paths:
// the explicit Laguerre series with exact binomials, the Rodrigues formula
// for associated Legendre functions, and composite-Simpson integration for
// normalization and sphere integrals.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "bicoulomb/bicomplex.hpp"

namespace oracles {

inline __int128 binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    // Pascal's triangle row by row, exact.
    std::vector<__int128> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<__int128> next(i + 1, 1);
        for (int j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

// L_q^k(x) = sum_m (-1)^m binom(q+k, q-m) x^m / m!, summed directly.
inline long double laguerre_series(int q, int k, long double x) {
    long double sum = 0.0L, xm = 1.0L, mfact = 1.0L;
    for (int m = 0; m <= q; ++m) {
        if (m > 0) {
            xm *= x;
            mfact *= m;
        }
        const long double b = static_cast<long double>(binomial(q + k, q - m));
        sum += (m % 2 == 0 ? 1.0L : -1.0L) * b * xm / mfact;
    }
    return sum;
}

// Rodrigues form: P_l^m(u) = (-1)^m (1-u^2)^{m/2} / (2^l l!) d^{l+m}/du^{l+m} (u^2-1)^l,
// carried out on exact integer coefficients.  m >= 0.
inline long double rodrigues_legendre(int l, int m, long double u) {
    std::vector<__int128> coeff(2 * l + 1, 0);  // (u^2-1)^l
    for (int j = 0; j <= l; ++j) {
        const __int128 sign = ((l - j) % 2 == 0) ? 1 : -1;
        coeff[2 * j] = sign * binomial(l, j);
    }
    for (int d = 0; d < l + m; ++d) {
        for (std::size_t p = 1; p < coeff.size(); ++p)
            coeff[p - 1] = coeff[p] * static_cast<__int128>(p);
        coeff.pop_back();
        if (coeff.empty())
            return 0.0L;
    }
    long double poly = 0.0L;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        poly = poly * u + static_cast<long double>(*it);
    long double pref = 1.0L;
    for (int i = 1; i <= l; ++i)
        pref *= 2.0L * i;  // 2^l l!
    const long double s = std::pow(1.0L - u * u, m / 2.0L);
    return (m % 2 == 0 ? 1.0L : -1.0L) * s * poly / pref;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 != 0)
        ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    return sum * h / 3.0;
}

// int |f(theta, phi)|^2 dOmega by Simpson in theta and periodic trapezoid in phi.
inline double sphere_norm2(const std::function<std::complex<double>(double, double)>& f,
                           int n_theta = 2048, int n_phi = 256) {
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    double total = 0.0;
    for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = ip * dphi;
        total += simpson(
            [&](double th) { return std::norm(f(th, phi)) * std::sin(th); }, 0.0,
            std::numbers::pi, n_theta);
    }
    return total * dphi;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1e-300});
}

inline double comp_norm(const bicoulomb::Bicomplex<double>& a) {
    return std::max(std::abs(a.c1), std::abs(a.c2));
}

inline bicoulomb::Bicomplex<double> random_bicomplex(std::mt19937_64& rng, double mag_lo = 1e-3,
                                                     double mag_hi = 1e3) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto comp = [&]() {
        const double mag = std::exp(std::log(mag_lo) + u01(rng) * std::log(mag_hi / mag_lo));
        return std::polar(mag, u01(rng) * 2.0 * std::numbers::pi);
    };
    return {comp(), comp()};
}

} // namespace oracles
