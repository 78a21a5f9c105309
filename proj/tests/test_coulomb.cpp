#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bicoulomb/coulomb.hpp"
#include "oracles.hpp"

using namespace bicoulomb;
using BC = Bicomplex<double>;
using C = Complex1<double>;

TEST_CASE("energy closed forms") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const Hyperbolic<double> ground = energy(1, 1, p);
    CHECK(ground.x == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(ground.y == 0.0);

    // E_1 = -1/2, E_2 = -1/8: x = -(1/2+1/8)/2, y = -(1/2-1/8)/2
    const Hyperbolic<double> e12 = energy(1, 2, p);
    CHECK(e12.x == doctest::Approx(-0.3125).epsilon(1e-15));
    CHECK(e12.y == doctest::Approx(-0.1875).epsilon(1e-15));

    for (int n = 1; n <= 8; ++n)
        CHECK(energy(n, n, p).y == 0.0);
}

TEST_CASE("eigenvalue separability and monotonicity") {
    const PhysicalParams p = PhysicalParams::atomic_units(0.8, 1.7);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 1; n2 <= 5; ++n2) {
            const auto e = energy(n1, n2, p);
            // equal up to the hyperbolic round trip (two roundings)
            const double scale = std::abs(e.comp1()) + std::abs(e.comp2());
            CHECK(std::abs(e.comp1() - energy(n1, n1, p).comp1()) <= 4 * eps * scale);
            CHECK(std::abs(e.comp2() - energy(n2, n2, p).comp2()) <= 4 * eps * scale);
        }
    double prev1 = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 12; ++n) {
        const double e1 = energy(n, n, p).comp1();
        CHECK(e1 < 0.0);
        CHECK(e1 > prev1);
        prev1 = e1;
    }
}

TEST_CASE("xi sqrt(j) energy symmetry") {
    CHECK(energy_symmetry_check({1, 1, 0, 0, 0, 0}, PhysicalParams::atomic_units()));
    CHECK(energy_symmetry_check({2, 3, 0, 0, 0, 0}, PhysicalParams::atomic_units(0.7, 1.3)));
    CHECK_THROWS_AS(
        energy_symmetry_check({1, 1, 0, 0, 0, 0}, PhysicalParams::atomic_units(0.0, 1.0)),
        NullConeError);
}

TEST_CASE("degeneracy formula equals brute-force enumeration") {
    CHECK(degeneracy(1, 1) == 1);
    CHECK(degeneracy(2, 3) == 36);
    CHECK(degeneracy(3, 3) == 81);
    long long sum_l = 0;
    for (int l = 0; l < 3; ++l)
        sum_l += 2 * l + 1;
    CHECK(degeneracy(3, 3) == sum_l * sum_l);
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = 1; n2 <= 6; ++n2)
            CHECK(long(enumerate_states(n1, n2).size()) == degeneracy(n1, n2));
    CHECK_THROWS_AS(degeneracy(0, 1), DomainError);
}

TEST_CASE("wavefunction evaluation") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const double y00 = 1.0 / std::sqrt(4.0 * std::numbers::pi);

    for (double r : {0.2, 1.0, 6.0}) {
        const BC psi = wavefunction_eval({1, 1, 0, 0, 0, 0}, p, r, 0.9, 2.1);
        CHECK(psi.c1 == psi.c2);
        CHECK(oracles::rel_err(psi.c1.real(), 2.0 * std::exp(-r) * y00) < 1e-13);
        CHECK(std::abs(psi.c1.imag()) < 1e-18);
    }

    const BC mixed = wavefunction_eval({1, 2, 0, 0, 0, 0}, p, 1.0, 0.0, 0.0);
    CHECK(oracles::rel_err(mixed.c1.real(), 2.0 * std::exp(-1.0) * y00) < 1e-13);
    const double u20 = (2.0 - 1.0) * std::exp(-0.5) / (2.0 * std::sqrt(2.0));
    CHECK(oracles::rel_err(mixed.c2.real(), u20 * y00) < 1e-13);

    // pointwise off the null cone wherever both radial factors are nonzero
    for (double r : {0.3, 1.4, 5.5})
        CHECK_FALSE(is_null_cone(wavefunction_eval({1, 2, 0, 0, 0, 0}, p, r, 1.0, 0.5), 1e-15));

    CHECK_THROWS_AS(wavefunction_eval({1, 1, 1, 0, 0, 0}, p, 1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(wavefunction_eval({2, 2, 1, 1, 2, 2}, p, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("general eigenfunction sums") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const double r = 1.7, th = 0.8, ph = 2.9;

    EigenfunctionSpec single;
    single.qnums = {3, 2, 1, 1, -1, 0};
    single.coefficients[{1, 1, -1}] = C(1.0);
    single.coefficients[{2, 1, 0}] = C(1.0);
    const BC direct = wavefunction_eval(single.qnums, p, r, th, ph);
    const BC summed = general_eigenfunction_eval(single, p, r, th, ph);
    CHECK(std::abs(summed.c1 - direct.c1) < 1e-15 * std::abs(direct.c1));
    CHECK(std::abs(summed.c2 - direct.c2) < 1e-15 * std::abs(direct.c2));

    // empty coefficient map falls back to the plain state
    EigenfunctionSpec empty;
    empty.qnums = single.qnums;
    CHECK(general_eigenfunction_eval(empty, p, r, th, ph) == direct);

    // linearity of a two-term equal-weight combination
    EigenfunctionSpec two;
    two.qnums = {3, 3, 0, 0, 0, 0};
    two.coefficients[{1, 0, 0}] = C(0.5, 0.25);
    two.coefficients[{1, 2, 1}] = C(0.5, 0.25);
    EigenfunctionSpec t1 = two, t2 = two;
    t1.coefficients.erase({1, 2, 1});
    t2.coefficients.erase({1, 0, 0});
    const BC whole = general_eigenfunction_eval(two, p, r, th, ph);
    const BC parts = general_eigenfunction_eval(t1, p, r, th, ph) +
                     general_eigenfunction_eval(t2, p, r, th, ph);
    CHECK(std::abs(whole.c1 - parts.c1) <= 4e-16 * std::abs(whole.c1) + 1e-300);
    CHECK(whole.c2 == parts.c2);  // e2 sector empty in both splits

    // coefficients confined to the e1 sector produce a null-cone value
    CHECK(is_null_cone(general_eigenfunction_eval(t1, p, r, th, ph), 0.0));

    EigenfunctionSpec bad;
    bad.qnums = {2, 2, 0, 0, 0, 0};
    bad.coefficients[{1, 2, 0}] = C(1.0);  // l = 2 >= n = 2
    CHECK_THROWS_AS(general_eigenfunction_eval(bad, p, r, th, ph), DomainError);
    EigenfunctionSpec bad_sector;
    bad_sector.qnums = {2, 2, 0, 0, 0, 0};
    bad_sector.coefficients[{3, 0, 0}] = C(1.0);
    CHECK_THROWS_AS(general_eigenfunction_eval(bad_sector, p, r, th, ph), DomainError);
}

namespace {
std::vector<double> log_samples(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / double(count - 1));
    return out;
}
} // namespace

TEST_CASE("radial ODE residual of exact solutions") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const auto r10 = log_samples(0.1, 20.0, 60);
    CHECK(radial_ode_residual(1, 0, 1.0, p, r10) < 1e-6);

    const auto r2512 = log_samples(1.0, 2000.0, 60);
    CHECK(radial_ode_residual(25, 12, 1.0, p, r2512) < 1e-4);

    // also holds away from xi = 1
    const auto r32 = log_samples(0.5, 60.0, 40);
    CHECK(radial_ode_residual(3, 2, 0.5, p, r32) < 1e-6);
    CHECK(radial_ode_residual(3, 2, 2.0, p, log_samples(0.5, 250.0, 40)) < 1e-6);
}

TEST_CASE("radial ODE residual rejects a non-solution") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const auto samples = log_samples(0.1, 20.0, 60);
    const double res = detail::radial_ode_residual_of(
        1, 0, 1.0, p, samples,
        [&](double r) { return (1.0 + 0.01 * r) * radial_u(1, 0, 1.0, p, r); });
    CHECK(res > 1e-2);
}

TEST_CASE("radial ODE residual domain errors") {
    const PhysicalParams p = PhysicalParams::atomic_units();
    const std::vector<double> ok{1.0};
    CHECK_THROWS_AS(radial_ode_residual(2, 2, 1.0, p, ok), DomainError);
    const std::vector<double> tiny{1e-4};
    CHECK_THROWS_AS(radial_ode_residual(1, 0, 1.0, p, tiny), DomainError);
}
