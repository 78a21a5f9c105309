#pragma once

// The bicomplex scalar product (f, g) = sum_s e_s int conj(f_s) g_s dmu by
// quadrature, the induced T-norm, normalization, orthonormality matrices,
// canonical-commutator residuals and the commuting-operator block property.
// Accumulation is compensated (Kahan) and strictly ordered, so results are
// bit-stable.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/coulomb.hpp"
#include "bicoulomb/errors.hpp"
#include "bicoulomb/params.hpp"
#include "bicoulomb/quadrature.hpp"

namespace bicoulomb {

// A ket as a pointwise evaluator over (r, theta, phi); both idempotent
// component functions must be square-integrable on the grid in use.
struct SampledKet {
    std::function<Bicomplex<double>(double r, double theta, double phi)> eval;
    std::optional<QuantumNumbers> qnums;
};

inline SampledKet make_state_ket(const QuantumNumbers& q, const PhysicalParams& p) {
    q.validate();
    p.validate();
    SampledKet k;
    k.qnums = q;
    k.eval = [q, p](double r, double theta, double phi) {
        return wavefunction_eval(q, p, r, theta, phi);
    };
    return k;
}

inline SampledKet make_general_ket(const EigenfunctionSpec& spec, const PhysicalParams& p) {
    spec.validate();
    p.validate();
    SampledKet k;
    k.qnums = spec.qnums;
    k.eval = [spec, p](double r, double theta, double phi) {
        return general_eigenfunction_eval(spec, p, r, theta, phi);
    };
    return k;
}

// alpha * f for a bicomplex scalar alpha.
inline SampledKet scaled(const SampledKet& f, const Bicomplex<double>& alpha) {
    SampledKet k;
    k.qnums = f.qnums;
    k.eval = [inner = f.eval, alpha](double r, double theta, double phi) {
        return alpha * inner(r, theta, phi);
    };
    return k;
}

inline SampledKet ket_sum(const SampledKet& f, const SampledKet& g) {
    SampledKet k;
    k.eval = [fe = f.eval, ge = g.eval](double r, double theta, double phi) {
        return fe(r, theta, phi) + ge(r, theta, phi);
    };
    return k;
}

namespace detail {

struct KahanComplex {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> comp{0.0, 0.0};

    void add(const std::complex<double>& term) {
        const std::complex<double> y = term - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Component values of a ket on the flattened grid (r outer, theta, phi inner).
struct GriddedKet {
    Eigen::ArrayXcd v1, v2;
};

inline GriddedKet evaluate_on_grid(const SampledKet& f, const QuadratureGrid& g) {
    const int nr = g.radial_size();
    const int nt = static_cast<int>(g.theta.size());
    const int np = static_cast<int>(g.phi.size());
    GriddedKet out;
    out.v1.resize(1LL * nr * nt * np);
    out.v2.resize(1LL * nr * nt * np);
    long long idx = 0;
    for (int ir = 0; ir < nr; ++ir)
        for (int it = 0; it < nt; ++it)
            for (int ip = 0; ip < np; ++ip, ++idx) {
                const Bicomplex<double> val = f.eval(g.r[ir], g.theta[it], g.phi[ip]);
                out.v1[idx] = val.c1;
                out.v2[idx] = val.c2;
            }
    return out;
}

inline Eigen::ArrayXd flat_weights(const QuadratureGrid& g) {
    const int nr = g.radial_size();
    const int nt = static_cast<int>(g.theta.size());
    const int np = static_cast<int>(g.phi.size());
    Eigen::ArrayXd w(1LL * nr * nt * np);
    long long idx = 0;
    for (int ir = 0; ir < nr; ++ir)
        for (int it = 0; it < nt; ++it)
            for (int ip = 0; ip < np; ++ip, ++idx)
                w[idx] = g.rw[ir] * g.tw[it] * g.pw;
    return w;
}

inline Bicomplex<double> gram_entry(const GriddedKet& f, const GriddedKet& g,
                                    const Eigen::ArrayXd& w) {
    KahanComplex s1, s2;
    const long long n = w.size();
    for (long long i = 0; i < n; ++i) {
        s1.add(w[i] * std::conj(f.v1[i]) * g.v1[i]);
        s2.add(w[i] * std::conj(f.v2[i]) * g.v2[i]);
    }
    return {s1.sum, s2.sum};
}

} // namespace detail

// (f, g) = sum_s e_s int conj(f_s) g_s r^2 dr dOmega.
inline Bicomplex<double> scalar_product(const SampledKet& f, const SampledKet& g,
                                        const QuadratureGrid& grid) {
    grid.validate();
    const auto fv = detail::evaluate_on_grid(f, grid);
    const auto gv = detail::evaluate_on_grid(g, grid);
    return detail::gram_entry(fv, gv, detail::flat_weights(grid));
}

// ||f|| = sqrt(((f,f)_1 + (f,f)_2)/2); the real norm lifted to functions.
inline double induced_norm(const SampledKet& f, const QuadratureGrid& grid) {
    const Bicomplex<double> p = scalar_product(f, f, grid);
    return std::sqrt(std::max(0.0, (p.c1.real() + p.c2.real()) / 2.0));
}

// Multiplies by (f,f)^{-1/2}, componentwise.  Fails on the null cone: a ket
// with a vanishing sector cannot be normalized.
inline SampledKet normalize(const SampledKet& f, const QuadratureGrid& grid,
                            double tol = null_cone_tol) {
    const Bicomplex<double> p = scalar_product(f, f, grid);
    if (is_null_cone(p, tol))
        throw NullConeError("normalize: (f,f) lies in the null cone");
    const Bicomplex<double> factor{1.0 / std::sqrt(p.c1), 1.0 / std::sqrt(p.c2)};
    return scaled(f, factor);
}

using BicomplexMatrix = Eigen::Matrix<Bicomplex<double>, Eigen::Dynamic, Eigen::Dynamic>;

// Gram matrix of eigenstates; entry (i, j) must reproduce the triple-delta
// pattern delta_nn' delta_ll' delta_mm' per idempotent component, i.e. every
// entry is 0, e1, e2 or 1 up to quadrature error.
inline BicomplexMatrix orthonormality_matrix(std::span<const QuantumNumbers> states,
                                             const PhysicalParams& p,
                                             const QuadratureGrid& grid) {
    grid.validate();
    const int m = static_cast<int>(states.size());
    std::vector<detail::GriddedKet> cached;
    cached.reserve(m);
    for (const auto& q : states)
        cached.push_back(detail::evaluate_on_grid(make_state_ket(q, p), grid));
    const Eigen::ArrayXd w = detail::flat_weights(grid);
    BicomplexMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out(i, j) = detail::gram_entry(cached[i], cached[j], w);
    return out;
}

// Expected Gram entry for two sextuplets under exact orthonormality.
inline Bicomplex<double> expected_gram_entry(const QuantumNumbers& a, const QuantumNumbers& b) {
    const double d1 = (a.n1 == b.n1 && a.l1 == b.l1 && a.m1 == b.m1) ? 1.0 : 0.0;
    const double d2 = (a.n2 == b.n2 && a.l2 == b.l2 && a.m2 == b.m2) ? 1.0 : 0.0;
    return {Complex1<double>(d1), Complex1<double>(d2)};
}

// Max residual of ([X_i, P_k] - i1*eta*delta_ik) f over the probe points,
// relative to |eta*f|.  Derivatives along axis k by 5-point central
// differences of f and of x_i*f.
inline double commutator_residual(
    int i, int k, const std::function<Bicomplex<double>(double, double, double)>& f,
    const PhysicalParams& p, std::span<const Eigen::Vector3d> probes, double h = 1e-2) {
    if (i < 1 || i > 3 || k < 1 || k > 3)
        throw DomainError("commutator_residual: axes must be in {1,2,3}");
    p.validate();
    const Bicomplex<double> i1eta = Bicomplex<double>::i1() * p.eta_bicomplex();
    const double delta = (i == k) ? 1.0 : 0.0;

    double worst = 0.0;
    for (const auto& pt : probes) {
        Eigen::Vector3d step = Eigen::Vector3d::Zero();
        step[k - 1] = h;
        auto at = [&](double c) {
            const Eigen::Vector3d q = pt + c * step;
            return f(q[0], q[1], q[2]);
        };
        const Bicomplex<double> fm2 = at(-2), fm1 = at(-1), f0 = at(0), fp1 = at(1), fp2 = at(2);
        auto d5 = [&](const Bicomplex<double>& a, const Bicomplex<double>& b,
                      const Bicomplex<double>& c, const Bicomplex<double>& d) {
            return (1.0 / (12.0 * h)) * (a - 8.0 * b + 8.0 * c - d);
        };
        const Bicomplex<double> df = d5(fm2, fm1, fp1, fp2);
        // derivative of x_i * f along axis k (the coordinate shifts with the stencil)
        auto xi_at = [&](double c) { return (pt + c * step)[i - 1]; };
        const Bicomplex<double> dxif =
            d5(xi_at(-2) * fm2, xi_at(-1) * fm1, xi_at(1) * fp1, xi_at(2) * fp2);
        // [X_i, P_k] f = -i1*eta*(x_i d_k f - d_k(x_i f))
        const Bicomplex<double> comm = -(i1eta * (pt[i - 1] * df - dxif));
        const Bicomplex<double> target = delta * (i1eta * f0);
        const double scale = std::max(real_norm(p.eta_bicomplex() * f0), 1e-300);
        worst = std::max(worst, real_norm(comm - target) / scale);
    }
    return worst;
}

struct CommutingBlockReport {
    double max_offblock = 0.0;
    double tol = 0.0;
    int pairs_checked = 0;
    bool ok = false;
    explicit operator bool() const { return ok; }
};

// For U commuting with H: whenever E_n - E_n' is off the null cone (both
// principal numbers differ), the matrix element (psi, U psi') must vanish.
inline CommutingBlockReport commuting_block_check(
    const std::function<SampledKet(const SampledKet&)>& U,
    std::span<const QuantumNumbers> states, const PhysicalParams& p, const QuadratureGrid& grid,
    double tol = 1e-8) {
    grid.validate();
    const int m = static_cast<int>(states.size());
    const Eigen::ArrayXd w = detail::flat_weights(grid);
    std::vector<detail::GriddedKet> bras, images;
    bras.reserve(m);
    images.reserve(m);
    for (const auto& q : states) {
        const SampledKet ket = make_state_ket(q, p);
        bras.push_back(detail::evaluate_on_grid(ket, grid));
        images.push_back(detail::evaluate_on_grid(U(ket), grid));
    }
    CommutingBlockReport rep;
    rep.tol = tol;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            // E separates iff n differs in both sectors (E_s is injective in n_s)
            if (states[a].n1 == states[b].n1 || states[a].n2 == states[b].n2)
                continue;
            const Bicomplex<double> elem = detail::gram_entry(bras[a], images[b], w);
            rep.max_offblock = std::max(rep.max_offblock, real_norm(elem));
            ++rep.pairs_checked;
        }
    rep.ok = rep.max_offblock < tol;
    return rep;
}

} // namespace bicoulomb
