#pragma once

// Quadrature over R^3 in spherical coordinates, realizing the Lebesgue
// integral of the bicomplex scalar product.  Radial: Gauss-Legendre on
// geometrically growing panels covering [0, r_cut] plus an exponential-map
// tail; r_cut is chosen so the truncated integrand envelope is below 1e-18
// of its peak.  Angular: Gauss-Legendre in cos(theta) (exact up to the band
// limit) and a uniform trapezoid in phi.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bicoulomb/coulomb.hpp"
#include "bicoulomb/errors.hpp"
#include "bicoulomb/params.hpp"

namespace bicoulomb {

// Gauss-Legendre nodes and weights on [-1, 1] via Golub-Welsch: eigenvalues
// of the symmetric tridiagonal Jacobi matrix, weights from the first
// eigenvector components.
inline std::pair<Eigen::ArrayXd, Eigen::ArrayXd> gauss_legendre(int n) {
    if (n < 1)
        throw DomainError("gauss_legendre: order must be >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    Eigen::ArrayXd nodes = solver.eigenvalues().array();
    Eigen::ArrayXd weights(n);
    for (int i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        weights[i] = 2.0 * v0 * v0;
    }
    return {std::move(nodes), std::move(weights)};
}

struct QuadratureOptions {
    int nodes_per_panel = 40;
    double panel_growth = 1.7;
    int tail_nodes = 16;
    double tail_relative_cutoff = 1e-18;  // envelope drop defining r_cut
    int n_theta = 0;                      // 0 = l_max + 1
    int n_phi = 0;                        // 0 = 2 l_max + 2
    double r_cut_override = 0.0;          // 0 = automatic
};

struct QuadratureGrid {
    Eigen::ArrayXd r;      // radial nodes
    Eigen::ArrayXd rw;     // radial weights including the r^2 volume factor
    Eigen::ArrayXd theta;  // polar nodes
    Eigen::ArrayXd tw;     // Gauss-Legendre weights in cos(theta)
    Eigen::ArrayXd phi;    // uniform azimuthal nodes
    double pw = 0.0;       // common azimuthal weight 2*pi/N_phi
    int n_max = 1;
    int l_max = 0;
    double r_cut = 0.0;

    int radial_size() const { return static_cast<int>(r.size()); }
    int angular_size() const { return static_cast<int>(theta.size() * phi.size()); }
    long long total_nodes() const { return 1LL * radial_size() * angular_size(); }

    double angular_weight_sum() const { return tw.sum() * pw * double(phi.size()); }

    void validate() const {
        if (r.size() == 0 || theta.size() == 0 || phi.size() == 0)
            throw GridError("QuadratureGrid: empty node set");
        if ((rw <= 0.0).any() || (tw <= 0.0).any() || pw <= 0.0)
            throw GridError("QuadratureGrid: weights must be positive");
        if (std::abs(angular_weight_sum() - 4.0 * std::numbers::pi) > 1e-12)
            throw GridError("QuadratureGrid: angular weights do not sum to 4*pi");
    }

    static QuadratureGrid build(int n_max, int l_max, const PhysicalParams& params,
                                const QuadratureOptions& opt = {});
    static QuadratureGrid for_states(std::span<const QuantumNumbers> states,
                                     const PhysicalParams& params,
                                     const QuadratureOptions& opt = {});
};

namespace detail {

// Smallest r beyond which r^D e^{-kappa r} has dropped below `cutoff` of its
// peak value at r* = D/kappa.  Bisection on the log envelope.
inline double envelope_cutoff_radius(double kappa, double degree, double cutoff) {
    const double target = std::log(cutoff);
    const double rstar = degree / kappa;
    auto logenv = [&](double r) { return -kappa * (r - rstar) + degree * std::log(r / rstar); };
    double lo = rstar, hi = rstar;
    do {
        hi *= 2.0;
    } while (logenv(hi) > target);
    for (int it = 0; it < 200 && hi - lo > 1e-9 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (logenv(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

} // namespace detail

inline QuadratureGrid QuadratureGrid::build(int n_max, int l_max, const PhysicalParams& params,
                                            const QuadratureOptions& opt) {
    params.validate();
    if (n_max < 1 || l_max < 0 || l_max > n_max - 1)
        throw GridError("QuadratureGrid: requires n_max >= 1 and 0 <= l_max <= n_max-1");
    if (opt.nodes_per_panel < 2 || opt.tail_nodes < 1 || opt.panel_growth <= 1.0)
        throw GridError("QuadratureGrid: bad quadrature options");

    QuadratureGrid g;
    g.n_max = n_max;
    g.l_max = l_max;

    const double a0_max = std::max(params.a0(1), params.a0(2));
    const double a0_min = std::min(params.a0(1), params.a0(2));
    // Slowest decay of a product of two radial functions and the fastest
    // single-u variation scale.
    const double kappa_slow = 2.0 * params.Z / (n_max * a0_max);
    const double len_fast = a0_min / (2.0 * params.Z);
    const double degree = 2.0 * n_max;  // polynomial growth bound incl. r^2

    g.r_cut = opt.r_cut_override > 0.0
                  ? opt.r_cut_override
                  : detail::envelope_cutoff_radius(kappa_slow, degree, opt.tail_relative_cutoff);

    // Geometrically growing panels over [0, r_cut].
    std::vector<double> bounds{0.0};
    double width = std::min(len_fast, g.r_cut / 8.0);
    while (bounds.back() < g.r_cut) {
        bounds.push_back(std::min(bounds.back() + width, g.r_cut));
        width *= opt.panel_growth;
    }
    const int n_panels = static_cast<int>(bounds.size()) - 1;

    const auto [gl_nodes, gl_weights] = gauss_legendre(opt.nodes_per_panel);
    const int nr = n_panels * opt.nodes_per_panel + opt.tail_nodes;
    g.r.resize(nr);
    g.rw.resize(nr);
    int idx = 0;
    for (int pnl = 0; pnl < n_panels; ++pnl) {
        const double a = bounds[pnl], b = bounds[pnl + 1];
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (int i = 0; i < opt.nodes_per_panel; ++i, ++idx) {
            const double rr = mid + half * gl_nodes[i];
            g.r[idx] = rr;
            g.rw[idx] = half * gl_weights[i] * rr * rr;
        }
    }
    // Tail r = r_cut - ln(1-t)/kappa over t in (0, 1); contributes below the
    // cutoff by construction of r_cut, kept as a safety margin.
    const auto [tail_nodes, tail_weights] = gauss_legendre(opt.tail_nodes);
    for (int i = 0; i < opt.tail_nodes; ++i, ++idx) {
        const double t = 0.5 * (tail_nodes[i] + 1.0);
        const double rr = g.r_cut - std::log1p(-t) / kappa_slow;
        const double jac = 1.0 / (kappa_slow * (1.0 - t));
        g.r[idx] = rr;
        g.rw[idx] = 0.5 * tail_weights[i] * jac * rr * rr;
    }

    // Angular rules: exact for products of harmonics up to l_max.
    const int ntheta = opt.n_theta > 0 ? opt.n_theta : l_max + 1;
    const int nphi = opt.n_phi > 0 ? opt.n_phi : 2 * l_max + 2;
    auto [u_nodes, u_weights] = gauss_legendre(ntheta);
    g.theta.resize(ntheta);
    g.tw.resize(ntheta);
    for (int i = 0; i < ntheta; ++i) {
        g.theta[i] = std::acos(u_nodes[i]);
        g.tw[i] = u_weights[i];
    }
    g.phi.resize(nphi);
    for (int i = 0; i < nphi; ++i)
        g.phi[i] = 2.0 * std::numbers::pi * i / nphi;
    g.pw = 2.0 * std::numbers::pi / nphi;

    g.validate();
    return g;
}

inline QuadratureGrid QuadratureGrid::for_states(std::span<const QuantumNumbers> states,
                                                 const PhysicalParams& params,
                                                 const QuadratureOptions& opt) {
    if (states.empty())
        throw GridError("QuadratureGrid::for_states: empty state list");
    int n_max = 1, l_max = 0;
    for (const auto& q : states) {
        q.validate();
        n_max = std::max({n_max, q.n1, q.n2});
        l_max = std::max({l_max, q.l1, q.l2});
    }
    return build(n_max, l_max, params, opt);
}

} // namespace bicoulomb
