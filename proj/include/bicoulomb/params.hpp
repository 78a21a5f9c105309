#pragma once

#include <cmath>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/errors.hpp"

namespace bicoulomb {

// Physical constants of the problem plus the commutator scalar
// xi = xi1*e1 + xi2*e2, which must lie in D+ (both components strictly
// positive).  Defaults are atomic units: mu = hbar = e2 = 1, a0 = 1.
struct PhysicalParams {
    double mu = 1.0;    // reduced mass
    double Z = 1.0;     // charge count
    double e2 = 1.0;    // squared elementary charge
    double hbar = 1.0;
    double xi1 = 1.0;   // idempotent components of xi
    double xi2 = 1.0;

    static PhysicalParams atomic_units(double x1 = 1.0, double x2 = 1.0) {
        PhysicalParams p;
        p.xi1 = x1;
        p.xi2 = x2;
        return p;
    }

    double xi(int s) const { return s == 1 ? xi1 : xi2; }
    double eta(int s) const { return hbar * xi(s); }

    Hyperbolic<double> xi_hyperbolic() const {
        return Hyperbolic<double>::from_components(xi1, xi2);
    }
    Bicomplex<double> eta_bicomplex() const {
        return {Complex1<double>(hbar * xi1), Complex1<double>(hbar * xi2)};
    }

    // Standard Bohr radius a0 = hbar^2/(mu e^2); the sector value is
    // a0_s = a0 * xi_s^2.
    double bohr_radius() const { return hbar * hbar / (mu * e2); }
    double a0(int s) const {
        double x = xi(s);
        return bohr_radius() * x * x;
    }

    void validate() const {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!positive(mu) || !positive(Z) || !positive(e2) || !positive(hbar))
            throw DomainError("PhysicalParams: mu, Z, e2, hbar must be finite and > 0");
        if (!std::isfinite(xi1) || !std::isfinite(xi2))
            throw DomainError("PhysicalParams: xi components must be finite");
        if (std::abs(xi1) <= null_cone_tol || std::abs(xi2) <= null_cone_tol)
            throw NullConeError("PhysicalParams: xi lies in the null cone");
        if (xi1 < 0.0 || xi2 < 0.0)
            throw DomainError("PhysicalParams: xi must lie in D+ (components > 0)");
    }
};

} // namespace bicoulomb
