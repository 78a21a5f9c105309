#pragma once

// Named end-to-end verification checks with tolerances pinned in code:
// closed-form energy values, the standard-limit reduction against frozen
// textbook hydrogen functions, quadrature orthonormality, radial ODE
// residuals, degeneracy counting, the xi*sqrt(j) symmetry, ring/norm and
// scalar-product axioms, canonical-commutator residuals, surface path
// equivalence, and the null-cone normalization failure.  Exposed both
// through the `verify` CLI command and the acceptance test binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/coulomb.hpp"
#include "bicoulomb/hilbert.hpp"
#include "bicoulomb/params.hpp"
#include "bicoulomb/quadrature.hpp"
#include "bicoulomb/surfaces.hpp"
#include "bicoulomb/special_functions.hpp"

namespace bicoulomb {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst observed deviation (units per check)
    double threshold = 0.0;  // pass bound
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    // Restrict the ode-residual check to a single (n, l) pair.
    std::optional<int> ode_n;
    std::optional<int> ode_l;
};

namespace reference {

// Frozen textbook hydrogen radial functions R_nl (atomic units, Z = 1),
// unit-normalized; used as the independent standard-limit reference.
inline double hydrogen_radial(int n, int l, double r) {
    const double x = r;
    switch (n * 10 + l) {
        case 10: return 2.0 * std::exp(-x);
        case 20: return (1.0 / (2.0 * std::sqrt(2.0))) * (2.0 - x) * std::exp(-x / 2.0);
        case 21: return (1.0 / (2.0 * std::sqrt(6.0))) * x * std::exp(-x / 2.0);
        case 30:
            return (2.0 / (81.0 * std::sqrt(3.0))) * (27.0 - 18.0 * x + 2.0 * x * x) *
                   std::exp(-x / 3.0);
        case 31:
            return (4.0 / (81.0 * std::sqrt(6.0))) * x * (6.0 - x) * std::exp(-x / 3.0);
        case 32: return (4.0 / (81.0 * std::sqrt(30.0))) * x * x * std::exp(-x / 3.0);
        case 40:
            return 0.25 * (1.0 - 3.0 * x / 4.0 + x * x / 8.0 - x * x * x / 192.0) *
                   std::exp(-x / 4.0);
        case 41:
            return (std::sqrt(5.0) / (16.0 * std::sqrt(3.0))) * x *
                   (1.0 - x / 4.0 + x * x / 80.0) * std::exp(-x / 4.0);
        case 42:
            return (1.0 / (64.0 * std::sqrt(5.0))) * x * x * (1.0 - x / 12.0) *
                   std::exp(-x / 4.0);
        case 43:
            return (1.0 / (768.0 * std::sqrt(35.0))) * x * x * x * std::exp(-x / 4.0);
        default: throw DomainError("hydrogen_radial: tabulated only for n <= 4");
    }
}

// Frozen spherical harmonics (Condon-Shortley phase) for l <= 3.
inline std::complex<double> hydrogen_ylm(int l, int m, double theta, double phi) {
    using std::cos;
    using std::sin;
    constexpr double pi = std::numbers::pi;
    const double ct = cos(theta), st = sin(theta);
    const std::complex<double> eip = std::polar(1.0, m * phi);
    const int am = std::abs(m);
    double val = 0.0;
    switch (l * 10 + am) {
        case 0: val = std::sqrt(1.0 / (4.0 * pi)); break;
        case 10: val = std::sqrt(3.0 / (4.0 * pi)) * ct; break;
        case 11: val = -std::sqrt(3.0 / (8.0 * pi)) * st; break;
        case 20: val = std::sqrt(5.0 / (16.0 * pi)) * (3.0 * ct * ct - 1.0); break;
        case 21: val = -std::sqrt(15.0 / (8.0 * pi)) * st * ct; break;
        case 22: val = std::sqrt(15.0 / (32.0 * pi)) * st * st; break;
        case 30: val = std::sqrt(7.0 / (16.0 * pi)) * (5.0 * ct * ct - 3.0) * ct; break;
        case 31: val = -std::sqrt(21.0 / (64.0 * pi)) * st * (5.0 * ct * ct - 1.0); break;
        case 32: val = std::sqrt(105.0 / (32.0 * pi)) * st * st * ct; break;
        case 33: val = -std::sqrt(35.0 / (64.0 * pi)) * st * st * st; break;
        default: throw DomainError("hydrogen_ylm: tabulated only for l <= 3");
    }
    if (m < 0 && am % 2 != 0)
        val = -val;  // Y_{l,-m} = (-1)^m conj(Y_{l,m}); conj handled by eip
    return val * eip;
}

} // namespace reference

namespace checks {

inline CheckResult ground_state_energy(const VerifyOptions&) {
    CheckResult r{"ground-state-energy"};
    r.threshold = 1e-14;
    const Hyperbolic<double> e = energy(1, 1, PhysicalParams::atomic_units());
    r.measured = std::max(std::abs(e.x + 0.5), std::abs(e.y));
    r.passed = r.measured <= r.threshold;
    r.detail = "energy(1,1), xi=(1,1): Re deviates from -1/2 and Hy from 0 by at most measured";
    return r;
}

inline CheckResult standard_limit(const VerifyOptions& opt) {
    CheckResult r{"standard-limit"};
    r.threshold = 1e-10;
    const PhysicalParams p = PhysicalParams::atomic_units();
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_n(1, 4);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = pick_n(rng);
        const int l = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int m = std::uniform_int_distribution<int>(-l, l)(rng);
        const double radius = std::exp(std::log(0.1) + u01(rng) * std::log(150.0));
        const double theta = 0.05 + u01(rng) * (std::numbers::pi - 0.1);
        const double phi = u01(rng) * 2.0 * std::numbers::pi;
        const Bicomplex<double> psi =
            wavefunction_eval({n, n, l, l, m, m}, p, radius, theta, phi);
        const std::complex<double> ref = reference::hydrogen_radial(n, l, radius) *
                                         reference::hydrogen_ylm(l, m, theta, phi);
        const double scale = std::max({std::abs(ref), std::abs(psi.c1), 1e-300});
        worst = std::max(worst, std::abs(psi.c1 - psi.c2) / scale);
        worst = std::max(worst, std::abs(psi.c1 - ref) / scale);
    }
    r.measured = worst;
    r.passed = r.measured <= r.threshold;
    r.detail = "100 random states n<=4: idempotent components equal and match textbook values";
    return r;
}

inline std::vector<QuantumNumbers> diagonal_states_up_to(int n_max) {
    std::vector<QuantumNumbers> states;
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l)
            for (int m = -l; m <= l; ++m)
                states.push_back({n, n, l, l, m, m});
    return states;
}

inline CheckResult orthonormality(const VerifyOptions&) {
    CheckResult r{"orthonormality"};
    r.threshold = 1e-8;
    const PhysicalParams p = PhysicalParams::atomic_units();
    const auto states = diagonal_states_up_to(3);  // 14 per sector
    const QuadratureGrid grid = QuadratureGrid::for_states(states, p);
    const BicomplexMatrix gram = orthonormality_matrix(states, p, grid);
    double worst = 0.0;
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) {
            const Bicomplex<double> expected = expected_gram_entry(states[i], states[j]);
            worst = std::max({worst, std::abs(gram(i, j).c1 - expected.c1),
                              std::abs(gram(i, j).c2 - expected.c2)});
        }
    r.measured = worst;
    r.passed = r.measured <= r.threshold;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d states (n_s <= 3), %d pairs per component vs the triple-delta pattern",
                  int(states.size()), int(states.size() * states.size()));
    r.detail = buf;
    return r;
}

inline std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / double(count - 1));
    return out;
}

inline CheckResult ode_residual(const VerifyOptions& opt) {
    CheckResult r{"ode-residual"};
    const PhysicalParams p = PhysicalParams::atomic_units();
    const double xi_s = 1.0;
    // Samples span the full support of u_{n l}; below r ~ 0.3 the fixed
    // 1e-3 stencil step is no longer small against the r^l power law and
    // truncation alone would dominate the residual.
    auto residual_for = [&](int n, int l) {
        const auto samples = log_spaced(0.3, 3.0 * n * n + 10.0, 48);
        return radial_ode_residual(n, l, xi_s, p, samples);
    };
    if (opt.ode_n) {
        const int n = *opt.ode_n;
        const int l = opt.ode_l.value_or(0);
        r.threshold = n <= 10 ? 1e-6 : 1e-4;
        r.measured = residual_for(n, l);
        r.passed = r.measured <= r.threshold;
        char buf[120];
        std::snprintf(buf, sizeof buf, "single pair (n,l)=(%d,%d), xi_s=1", n, l);
        r.detail = buf;
        return r;
    }
    double worst_small = 0.0;
    for (int n = 1; n <= 10; ++n)
        for (int l = 0; l < n; ++l)
            worst_small = std::max(worst_small, residual_for(n, l));
    const double big = residual_for(25, 12);
    r.threshold = 1e-6;
    r.measured = worst_small;
    r.passed = worst_small <= 1e-6 && big <= 1e-4;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "all n_s <= 10 (threshold 1e-06) and (25,12): %.3g (threshold 1e-04)", big);
    r.detail = buf;
    return r;
}

inline CheckResult degeneracy_count(const VerifyOptions&) {
    CheckResult r{"degeneracy"};
    r.threshold = 0.0;
    long long worst = 0;
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = 1; n2 <= 6; ++n2) {
            const long long enumerated = static_cast<long long>(enumerate_states(n1, n2).size());
            worst = std::max(worst, std::llabs(enumerated - degeneracy(n1, n2)));
        }
    r.measured = double(worst);
    r.passed = worst == 0;
    r.detail = "brute-force sextuplet enumeration equals n1^2*n2^2 for all n_s <= 6";
    return r;
}

inline CheckResult xi_sqrtj_symmetry(const VerifyOptions& opt) {
    CheckResult r{"xi-sqrtj-symmetry"};
    r.threshold = 1e-12;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_n(1, 12);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        PhysicalParams p = PhysicalParams::atomic_units(
            std::exp(std::log(0.1) + u01(rng) * std::log(100.0)),
            std::exp(std::log(0.1) + u01(rng) * std::log(100.0)));
        const QuantumNumbers q{pick_n(rng), pick_n(rng), 0, 0, 0, 0};
        worst = std::max(worst, energy_symmetry_deviation(q, p));
    }
    r.measured = worst;
    r.passed = r.measured <= r.threshold;
    r.detail = "Re{E,xi}=Hy{E,xi*sqrt(j)} and Re{E,xi*sqrt(j)}=Hy{E,xi}, 1000 random (n, xi in D+)";
    return r;
}

// Random bicomplex with log-uniform component magnitudes.
inline Bicomplex<double> random_bicomplex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto comp = [&]() {
        const double mag = std::exp(std::log(1e-3) + u01(rng) * std::log(1e6));
        return std::polar(mag, u01(rng) * 2.0 * std::numbers::pi);
    };
    return {comp(), comp()};
}

inline CheckResult ring_norm_axioms(const VerifyOptions& opt) {
    CheckResult r{"ring-norm-axioms"};
    r.threshold = 1e-8;  // scalar-product axiom tolerance; algebra is held to ~4 ulp
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::mt19937_64 rng(opt.seed);
    double worst_ulps = 0.0;   // ring-axiom deviation in units of eps * scale
    bool norm_ok = true;
    auto cnorm = [](const Bicomplex<double>& a) {
        return std::max(std::abs(a.c1), std::abs(a.c2));
    };
    for (int trial = 0; trial < 10000; ++trial) {
        const Bicomplex<double> a = random_bicomplex(rng);
        const Bicomplex<double> b = random_bicomplex(rng);
        const Bicomplex<double> c = random_bicomplex(rng);
        auto ulps = [&](const Bicomplex<double>& lhs, const Bicomplex<double>& rhs, double scale) {
            return cnorm(lhs - rhs) / (eps * std::max(scale, 1e-300));
        };
        worst_ulps = std::max({worst_ulps,
                               ulps(a + b, b + a, cnorm(a) + cnorm(b)),
                               ulps(a * b, b * a, cnorm(a) * cnorm(b)),
                               ulps((a + b) + c, a + (b + c), cnorm(a) + cnorm(b) + cnorm(c)),
                               ulps((a * b) * c, a * (b * c), cnorm(a) * cnorm(b) * cnorm(c)),
                               ulps(a * (b + c), a * b + a * c,
                                    cnorm(a) * (cnorm(b) + cnorm(c))),
                               ulps(a + Bicomplex<double>::zero(), a, cnorm(a)),
                               ulps(a * Bicomplex<double>::one(), a, cnorm(a)),
                               ulps(a + (-a), Bicomplex<double>::zero(), cnorm(a)),
                               ulps(dagger(dagger(a)), a, cnorm(a)),
                               ulps(dagger(a * b), dagger(a) * dagger(b),
                                    cnorm(a) * cnorm(b))});
        // norm properties
        const std::complex<double> z = random_bicomplex(rng).c1;
        norm_ok = norm_ok && real_norm(a) >= 0.0;
        norm_ok = norm_ok && std::abs(real_norm(z * a) - std::abs(z) * real_norm(a)) <=
                                 16.0 * eps * std::abs(z) * real_norm(a);
        norm_ok = norm_ok && real_norm(a + b) <=
                                 (real_norm(a) + real_norm(b)) * (1.0 + 16.0 * eps);
        norm_ok = norm_ok && real_norm(a * b) <= std::numbers::sqrt2 * real_norm(a) *
                                                     real_norm(b) * (1.0 + 16.0 * eps);
        const Bicomplex<double> ada = dagger(a) * a;
        norm_ok = norm_ok && ada.c1.real() >= 0.0 && ada.c2.real() >= 0.0 &&
                  std::abs(ada.c1.imag()) <= 4.0 * eps * std::norm(a.c1) &&
                  std::abs(ada.c2.imag()) <= 4.0 * eps * std::norm(a.c2);
    }
    const bool ring_ok = worst_ulps <= 4.0;

    // Scalar-product axioms on random kets over a small (but valid) grid;
    // the axioms are identities of the quadrature sum itself, so a coarse
    // grid exercises them fully.
    const PhysicalParams p = PhysicalParams::atomic_units();
    QuadratureOptions qopt;
    qopt.nodes_per_panel = 12;
    qopt.tail_nodes = 6;
    qopt.panel_growth = 3.0;
    const auto basis_states = diagonal_states_up_to(2);  // 5 states
    const QuadratureGrid grid = QuadratureGrid::for_states(basis_states, p, qopt);
    std::vector<detail::GriddedKet> basis;
    for (const auto& q : basis_states)
        basis.push_back(detail::evaluate_on_grid(make_state_ket(q, p), grid));
    const Eigen::ArrayXd w = detail::flat_weights(grid);
    const int nb = static_cast<int>(basis.size());
    auto random_ket = [&](std::vector<Bicomplex<double>>& coeffs) {
        detail::GriddedKet out;
        out.v1 = Eigen::ArrayXcd::Zero(w.size());
        out.v2 = Eigen::ArrayXcd::Zero(w.size());
        coeffs.resize(nb);
        for (int i = 0; i < nb; ++i) {
            coeffs[i] = random_bicomplex(rng);
            out.v1 += coeffs[i].c1 * basis[i].v1;
            out.v2 += coeffs[i].c2 * basis[i].v2;
        }
        return out;
    };
    // Basis Gram, precomputed once; used only for the comparison scales.
    BicomplexMatrix basis_gram(nb, nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            basis_gram(i, j) = detail::gram_entry(basis[i], basis[j], w);
    auto ket_norm = [&](const std::vector<Bicomplex<double>>& c) {
        Bicomplex<double> acc = Bicomplex<double>::zero();
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                acc += dagger(c[i]) * c[j] * basis_gram(i, j);
        return std::sqrt(cnorm(acc));
    };
    double worst_axiom = 0.0;
    std::vector<Bicomplex<double>> cf, cg, ch;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto f = random_ket(cf);
        const auto g = random_ket(cg);
        const auto h = random_ket(ch);
        const Bicomplex<double> alpha = random_bicomplex(rng);
        const Bicomplex<double> fg = detail::gram_entry(f, g, w);
        const Bicomplex<double> fh = detail::gram_entry(f, h, w);
        const Bicomplex<double> gf = detail::gram_entry(g, f, w);
        const Bicomplex<double> ff = detail::gram_entry(f, f, w);
        detail::GriddedKet gph{g.v1 + h.v1, g.v2 + h.v2};
        detail::GriddedKet ag{alpha.c1 * g.v1, alpha.c2 * g.v2};
        const Bicomplex<double> f_gph = detail::gram_entry(f, gph, w);
        const Bicomplex<double> f_ag = detail::gram_entry(f, ag, w);
        auto rel = [&](const Bicomplex<double>& x, const Bicomplex<double>& y, double scale) {
            return cnorm(x - y) / std::max(scale, 1e-300);
        };
        const double nf = ket_norm(cf);
        const double ng = ket_norm(cg);
        const double nh = ket_norm(ch);
        worst_axiom = std::max(
            {worst_axiom,
             rel(f_gph, fg + fh, nf * (ng + nh)),                      // axiom 1
             rel(f_ag, alpha * fg, cnorm(alpha) * nf * ng),            // axiom 2
             rel(fg, dagger(gf), nf * ng),                             // axiom 3
             std::max(0.0, -ff.c1.real()) / std::max(nf * nf, 1e-300), // axiom 4 (positivity)
             std::max(0.0, -ff.c2.real()) / std::max(nf * nf, 1e-300),
             std::abs(ff.c1.imag()) / std::max(nf * nf, 1e-300),       // (f,f) hyperbolic
             std::abs(ff.c2.imag()) / std::max(nf * nf, 1e-300)});
    }
    r.measured = worst_axiom;
    r.passed = ring_ok && norm_ok && worst_axiom <= r.threshold;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "10^4 samples: ring axioms <= %.2f ulp (bound 4), norm properties %s, "
                  "scalar-product axioms 1-4 (measured)",
                  worst_ulps, norm_ok ? "ok" : "VIOLATED");
    r.detail = buf;
    return r;
}

inline CheckResult commutator(const VerifyOptions& opt) {
    CheckResult r{"commutator"};
    r.threshold = 1e-6;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    std::vector<Eigen::Vector3d> probes;
    for (int t = 0; t < 12; ++t)
        probes.push_back({box(rng), box(rng), box(rng)});
    double worst = 0.0;
    for (const auto& [x1, x2] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
        const PhysicalParams p = PhysicalParams::atomic_units(x1, x2);
        auto gaussian = [](double x, double y, double z) {
            const double g1 = std::exp(-0.5 * (x * x + y * y + z * z));
            const double g2 = std::exp(-0.5 * ((x - 0.3) * (x - 0.3) + y * y + z * z) / 1.21);
            return Bicomplex<double>{Complex1<double>(g1), Complex1<double>(g2)};
        };
        for (int i = 1; i <= 3; ++i)
            for (int k = 1; k <= 3; ++k)
                worst = std::max(worst, commutator_residual(i, k, gaussian, p, probes));
    }
    r.measured = worst;
    r.passed = r.measured <= r.threshold;
    r.detail = "[X_i,P_k]f vs i1*eta*delta_ik*f over Gaussian kets, all 9 pairs, "
               "xi in {(1,1),(0.5,2)}";
    return r;
}

inline CheckResult surface_path_equivalence(const VerifyOptions&) {
    CheckResult r{"surface-path-equivalence"};
    r.threshold = 1e-9;
    const RadialPair nl{25, 25, 12, 12};
    const Hyperbolic<double> xi{1.0, 0.0};
    double worst = 0.0;
    for (int ix = 0; ix < 100; ++ix)
        for (int iy = 0; iy < 100; ++iy) {
            const double x = 120.0 * ix / 99.0;
            const double y = -40.0 + 80.0 * iy / 99.0;
            const SurfacePoint a = surface_eval_idempotent(nl, xi, x, y);
            const SurfacePoint b = surface_eval_polynomial(nl, xi, x, y);
            const double scale = std::sqrt(std::max(a.norm2, b.norm2));
            if (scale <= 1e-12)
                continue;
            worst = std::max({worst, std::abs(a.re - b.re) / scale,
                              std::abs(a.hy - b.hy) / scale});
        }
    double worst_cut = 0.0;
    for (int ix = 0; ix < 100; ++ix) {
        const double x = 120.0 * ix / 99.0;
        worst_cut = std::max({worst_cut, std::abs(surface_eval_idempotent(nl, xi, x, 0.0).hy),
                              std::abs(surface_eval_polynomial(nl, xi, x, 0.0).hy)});
    }
    r.measured = worst;
    r.passed = worst <= r.threshold && worst_cut <= 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "(n,l)=((25,25),(12,12)) on 100x100; Hy on y=0 cut: %.3g (bound 1e-12)",
                  worst_cut);
    r.detail = buf;
    return r;
}

inline CheckResult null_cone_normalize(const VerifyOptions&) {
    CheckResult r{"null-cone-normalize"};
    r.threshold = null_cone_tol;
    const PhysicalParams p = PhysicalParams::atomic_units();
    EigenfunctionSpec spec;
    spec.qnums = {2, 2, 0, 0, 0, 0};
    spec.coefficients[{1, 0, 0}] = {1.0, 0.0};   // e1 sector only
    spec.coefficients[{1, 1, 0}] = {0.0, 0.5};
    const SampledKet ket = make_general_ket(spec, p);
    const QuadratureGrid grid = QuadratureGrid::build(2, 1, p);
    const Bicomplex<double> ff = scalar_product(ket, ket, grid);
    bool raised = false;
    try {
        (void)normalize(ket, grid);
    } catch (const NullConeError&) {
        raised = true;
    }
    r.measured = std::abs(ff.c2);
    r.passed = is_null_cone(ff) && std::abs(ff.c1) > 0.1 && raised;
    r.detail = "one-sector eigenfunction: (f,f) in the null cone and normalize() raises "
               "NullConeError";
    return r;
}

} // namespace checks

inline const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names{
        "ground-state-energy", "standard-limit",    "orthonormality",
        "ode-residual",        "degeneracy",        "xi-sqrtj-symmetry",
        "ring-norm-axioms",    "commutator",        "surface-path-equivalence",
        "null-cone-normalize"};
    return names;
}

inline CheckResult run_verification_check(const std::string& name, const VerifyOptions& opt = {}) {
    using Runner = CheckResult (*)(const VerifyOptions&);
    static const std::pair<const char*, Runner> table[] = {
        {"ground-state-energy", checks::ground_state_energy},
        {"standard-limit", checks::standard_limit},
        {"orthonormality", checks::orthonormality},
        {"ode-residual", checks::ode_residual},
        {"degeneracy", checks::degeneracy_count},
        {"xi-sqrtj-symmetry", checks::xi_sqrtj_symmetry},
        {"ring-norm-axioms", checks::ring_norm_axioms},
        {"commutator", checks::commutator},
        {"surface-path-equivalence", checks::surface_path_equivalence},
        {"null-cone-normalize", checks::null_cone_normalize},
    };
    for (const auto& [key, fn] : table) {
        if (name == key) {
            const auto t0 = std::chrono::steady_clock::now();
            CheckResult result = fn(opt);
            result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                 .count();
            return result;
        }
    }
    throw DomainError("unknown verification check: " + name);
}

inline std::vector<CheckResult> run_all_verification_checks(const VerifyOptions& opt = {}) {
    std::vector<CheckResult> out;
    for (const auto& name : verification_check_names())
        out.push_back(run_verification_check(name, opt));
    return out;
}

} // namespace bicoulomb
