#pragma once

// The bicomplex Coulomb spectrum: quantum-number sextuplets, eigenvalues
// E_n with idempotent components E_s = -mu Z^2 e^4 / (2 hbar^2 xi_s^2 n_s^2),
// full eigenfunctions psi_nlm = sum_s u_{n_s l_s}(r) Y_{l_s m_s}(theta,phi) e_s,
// degeneracy counting, the xi*sqrt(j) energy symmetry, and a finite-difference
// residual check of the sector radial equation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <tuple>
#include <vector>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/errors.hpp"
#include "bicoulomb/params.hpp"
#include "bicoulomb/special_functions.hpp"

namespace bicoulomb {

// Integer sextuplet (n1, n2, l1, l2, m1, m2) indexing one eigenfunction per
// idempotent sector.  Valid iff l_s <= n_s - 1 and |m_s| <= l_s for s = 1, 2.
struct QuantumNumbers {
    int n1 = 1, n2 = 1;
    int l1 = 0, l2 = 0;
    int m1 = 0, m2 = 0;

    int n(int s) const { return s == 1 ? n1 : n2; }
    int l(int s) const { return s == 1 ? l1 : l2; }
    int m(int s) const { return s == 1 ? m1 : m2; }

    bool valid() const {
        for (int s = 1; s <= 2; ++s) {
            if (n(s) < 1 || l(s) < 0 || l(s) > n(s) - 1 || std::abs(m(s)) > l(s))
                return false;
        }
        return true;
    }

    void validate() const {
        if (!valid()) {
            std::ostringstream os;
            os << "QuantumNumbers: invalid sextuplet (" << n1 << "," << n2 << "," << l1 << ","
               << l2 << "," << m1 << "," << m2 << "); need l_s <= n_s-1 and |m_s| <= l_s";
            throw DomainError(os.str());
        }
    }

    auto operator<=>(const QuantumNumbers&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const QuantumNumbers& q) {
    return os << "(" << q.n1 << "," << q.n2 << "," << q.l1 << "," << q.l2 << "," << q.m1 << ","
              << q.m2 << ")";
}

// Degeneracy of E_{n1 n2} is the product n1^2 n2^2 of the standard Coulomb
// degeneracies of each sector.
inline long long degeneracy(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw DomainError("degeneracy: requires n1, n2 >= 1");
    return 1LL * n1 * n1 * n2 * n2;
}

// All valid sextuplets sharing the principal pair (n1, n2).
inline std::vector<QuantumNumbers> enumerate_states(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw DomainError("enumerate_states: requires n1, n2 >= 1");
    std::vector<QuantumNumbers> out;
    for (int l1 = 0; l1 < n1; ++l1)
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int l2 = 0; l2 < n2; ++l2)
                for (int m2 = -l2; m2 <= l2; ++m2)
                    out.push_back({n1, n2, l1, l2, m1, m2});
    return out;
}

// Eigenvalue with a general (possibly complexified) commutator scalar, given
// by its idempotent components.  Used by the sqrt(j) symmetry check, where
// xi*sqrt(j) = xi1*e1 + i1*xi2*e2 is not hyperbolic.
inline Bicomplex<double> energy_bicomplex(int n1, int n2, const PhysicalParams& p,
                                          const Bicomplex<double>& xi) {
    if (n1 < 1 || n2 < 1)
        throw DomainError("energy: requires n1, n2 >= 1");
    if (is_null_cone(xi))
        throw NullConeError("energy: xi lies in the null cone");
    const double num = p.mu * p.Z * p.Z * p.e2 * p.e2;
    const double h2 = p.hbar * p.hbar;
    auto comp = [&](const Complex1<double>& xs, int ns) {
        return -num / (2.0 * h2 * (xs * xs) * double(ns) * double(ns));
    };
    return {comp(xi.c1, n1), comp(xi.c2, n2)};
}

// E_n in the hyperbolic representation; xi is taken from params (in D+), so
// both idempotent components are strictly negative real numbers.
inline Hyperbolic<double> energy(int n1, int n2, const PhysicalParams& p) {
    p.validate();
    const Bicomplex<double> e =
        energy_bicomplex(n1, n2, p, {Complex1<double>(p.xi1), Complex1<double>(p.xi2)});
    return Hyperbolic<double>::from_components(e.c1.real(), e.c2.real());
}

// Formal symmetry of the hyperbolic eigenvalue representation:
//   Re{E_n, xi} = Hy{E_n, xi*sqrt(j)}  and  Re{E_n, xi*sqrt(j)} = Hy{E_n, xi}.
// Returns the worse relative deviation of the two swap identities.
inline double energy_symmetry_deviation(const QuantumNumbers& q, const PhysicalParams& p) {
    p.validate();
    const Bicomplex<double> xi{Complex1<double>(p.xi1), Complex1<double>(p.xi2)};
    const Bicomplex<double> xisj = xi * sqrt_j<double>();
    const Bicomplex<double> e = energy_bicomplex(q.n1, q.n2, p, xi);
    const Bicomplex<double> esj = energy_bicomplex(q.n1, q.n2, p, xisj);
    auto rel = [](const Complex1<double>& a, const Complex1<double>& b) {
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        return std::abs(a - b) / scale;
    };
    return std::max(rel(re_part(e), hy_part(esj)), rel(re_part(esj), hy_part(e)));
}

inline bool energy_symmetry_check(const QuantumNumbers& q, const PhysicalParams& p,
                                  double rel_tol = 1e-12) {
    return energy_symmetry_deviation(q, p) <= rel_tol;
}

// psi_nlm(r, theta, phi): idempotent components are the sector products
// u_{n_s l_s}(r) Y_{l_s m_s}(theta, phi).
inline Bicomplex<double> wavefunction_eval(const QuantumNumbers& q, const PhysicalParams& p,
                                           double r, double theta, double phi) {
    q.validate();
    p.validate();
    Bicomplex<double> out;
    out.c1 = radial_u(q.n1, q.l1, p.xi1, p, r) * spherical_harmonic(q.l1, q.m1, theta, phi);
    out.c2 = radial_u(q.n2, q.l2, p.xi2, p, r) * spherical_harmonic(q.l2, q.m2, theta, phi);
    return out;
}

// A general eigenfunction of H for fixed (n1, n2): per sector, a finite sum
// over (l, m) with C(i1) coefficients.  An empty coefficient map means the
// single state given by qnums.
struct EigenfunctionSpec {
    QuantumNumbers qnums;
    // key = (sector s in {1,2}, l, m)
    std::map<std::tuple<int, int, int>, Complex1<double>> coefficients;

    void validate() const {
        qnums.validate();
        for (const auto& [key, c] : coefficients) {
            const auto [s, l, m] = key;
            (void)c;
            if (s != 1 && s != 2)
                throw DomainError("EigenfunctionSpec: sector must be 1 or 2");
            const int ns = qnums.n(s);
            if (l < 0 || l > ns - 1 || std::abs(m) > l) {
                std::ostringstream os;
                os << "EigenfunctionSpec: coefficient key (s=" << s << ", l=" << l
                   << ", m=" << m << ") violates l < n_s, |m| <= l for n_s = " << ns;
                throw DomainError(os.str());
            }
        }
    }
};

inline Bicomplex<double> general_eigenfunction_eval(const EigenfunctionSpec& spec,
                                                    const PhysicalParams& p, double r,
                                                    double theta, double phi) {
    spec.validate();
    p.validate();
    if (spec.coefficients.empty())
        return wavefunction_eval(spec.qnums, p, r, theta, phi);
    Bicomplex<double> out = Bicomplex<double>::zero();
    for (const auto& [key, c] : spec.coefficients) {
        const auto [s, l, m] = key;
        const int ns = spec.qnums.n(s);
        const Complex1<double> term =
            c * radial_u(ns, l, p.xi(s), p, r) * spherical_harmonic(l, m, theta, phi);
        if (s == 1)
            out.c1 += term;
        else
            out.c2 += term;
    }
    return out;
}

namespace detail {

// Max relative residual of the sector radial equation
//   (1/r^2) d/dr (r^2 u') - [l(l+1)/r^2 - (2 mu/eta_s^2)(Z e^2/r + E_s)] u = 0
// for an arbitrary radial function, by 5-point central differences with
// step h = 1e-3 * max(1, r).  The residual is normalized by the local scale
// max(|u|, |u'|/r).
inline double radial_ode_residual_of(int n, int l, double xi_s, const PhysicalParams& p,
                                     std::span<const double> r_samples,
                                     const std::function<double(double)>& u) {
    if (n < 1 || l < 0 || l >= n)
        throw DomainError("radial_ode_residual: requires n >= 1 and 0 <= l < n");
    if (!(xi_s > 0.0))
        throw DomainError("radial_ode_residual: requires xi_s > 0");
    const double eta = p.hbar * xi_s;
    const double energy_s = -p.mu * p.Z * p.Z * p.e2 * p.e2 / (2.0 * eta * eta * n * n);
    const double two_mu_over_eta2 = 2.0 * p.mu / (eta * eta);

    double worst = 0.0;
    for (double r : r_samples) {
        const double h = 1e-3 * std::max(1.0, r);
        if (!(r - 2.0 * h > 0.0))
            throw DomainError("radial_ode_residual: sample too close to r = 0 for the stencil");
        const double um2 = u(r - 2.0 * h);
        const double um1 = u(r - h);
        const double u0 = u(r);
        const double up1 = u(r + h);
        const double up2 = u(r + 2.0 * h);
        const double d1 = (um2 - 8.0 * um1 + 8.0 * up1 - up2) / (12.0 * h);
        const double d2 = (-um2 + 16.0 * um1 - 30.0 * u0 + 16.0 * up1 - up2) / (12.0 * h * h);
        const double v = l * (l + 1.0) / (r * r) -
                         two_mu_over_eta2 * (p.Z * p.e2 / r + energy_s);
        const double res = d2 + 2.0 * d1 / r - v * u0;
        const double scale = std::max({std::abs(u0), std::abs(d1) / r, 1e-300});
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace detail

// Residual of the exact solution u_{n l}; bounded by stencil truncation and
// rounding only.  A non-solution fails this check (see tests).
inline double radial_ode_residual(int n, int l, double xi_s, const PhysicalParams& p,
                                  std::span<const double> r_samples) {
    p.validate();
    return detail::radial_ode_residual_of(
        n, l, xi_s, p, r_samples, [&](double r) { return radial_u(n, l, xi_s, p, r); });
}

} // namespace bicoulomb
