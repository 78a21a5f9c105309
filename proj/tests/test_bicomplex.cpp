#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "bicoulomb/bicomplex.hpp"
#include "oracles.hpp"

using namespace bicoulomb;
using BC = Bicomplex<double>;
using C = Complex1<double>;

namespace {
constexpr double eps = std::numeric_limits<double>::epsilon();

double ulps(const BC& lhs, const BC& rhs, double scale) {
    return oracles::comp_norm(lhs - rhs) / (eps * std::max(scale, 1e-300));
}
} // namespace

TEST_CASE("idempotent basis identities") {
    CHECK(BC::e1() * BC::e2() == BC::zero());
    CHECK(BC::e2() * BC::e1() == BC::zero());
    CHECK(BC::e1() * BC::e1() == BC::e1());
    CHECK(BC::e2() * BC::e2() == BC::e2());
    CHECK(BC::e1() + BC::e2() == BC::one());
    CHECK(BC::j() * BC::j() == BC::one());
    CHECK(BC::j() == BC::e1() - BC::e2());
}

TEST_CASE("componentwise multiplication") {
    const BC a{C(1), C(2)};
    const BC b{C(3), C(5)};
    CHECK(a * b == BC{C(3), C(10)});
}

TEST_CASE("i2 = -i1*j is an imaginary unit") {
    CHECK(BC::i2() == -(BC::i1() * BC::j()));
    CHECK(BC::i2() * BC::i2() == -BC::one());
    CHECK(BC::i1() * BC::i1() == -BC::one());
}

TEST_CASE("dagger examples") {
    const BC a{C(0, 1), C(2)};  // i1*e1 + 2*e2
    CHECK(dagger(a) == BC{C(0, -1), C(2)});

    const BC b{C(3, 4), C(2)};
    CHECK(dagger(b) * b == BC{C(25), C(4)});

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const BC x = oracles::random_bicomplex(rng);
        CHECK(dagger(dagger(x)) == x);
    }
}

TEST_CASE("real norm values") {
    CHECK(real_norm(BC::e1()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(real_norm(BC{C(3), C(4)}) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng), y = u(rng);
        const Hyperbolic<double> h{x, y};
        CHECK(oracles::rel_err(real_norm(h), std::hypot(x, y)) < 1e-15);
        CHECK(oracles::rel_err(real_norm(h.to_bicomplex()), std::hypot(x, y)) < 4e-15);
    }
}

TEST_CASE("null cone membership") {
    CHECK(is_null_cone(BC{C(5), C(0)}, 0.0));
    CHECK_FALSE(is_null_cone(BC::j(), 0.0));
    CHECK(is_null_cone(BC::zero(), 0.0));
    CHECK(is_null_cone(BC{C(1), C(1e-13)}));  // default 1e-12 tolerance
}

TEST_CASE("inverse") {
    CHECK(inverse(BC{C(2), C(4)}) == BC{C(0.5), C(0.25)});
    CHECK(inverse(BC::one()) == BC::one());
    CHECK_THROWS_AS(inverse(BC{C(5), C(0)}), NullConeError);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const BC a = oracles::random_bicomplex(rng);
        CHECK(ulps(a * inverse(a), BC::one(), 1.0) <= 4.0);
    }
}

TEST_CASE("sqrt of j") {
    const BC s = sqrt_j<double>();
    CHECK(s == BC{C(1), C(0, 1)});
    CHECK(s * s == BC::j());
    CHECK(real_norm(s) == doctest::Approx(1.0).epsilon(1e-15));

    const BC xi{C(2), C(3)};
    CHECK(xi * s == BC{C(2), C(0, 3)});
}

TEST_CASE("ring axioms on random samples hold to 4 ulp") {
    std::mt19937_64 rng(1234);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const BC a = oracles::random_bicomplex(rng);
        const BC b = oracles::random_bicomplex(rng);
        const BC c = oracles::random_bicomplex(rng);
        const double na = oracles::comp_norm(a), nb = oracles::comp_norm(b),
                     nc = oracles::comp_norm(c);
        worst = std::max({worst,
                          ulps(a + b, b + a, na + nb),
                          ulps(a * b, b * a, na * nb),
                          ulps((a + b) + c, a + (b + c), na + nb + nc),
                          ulps((a * b) * c, a * (b * c), na * nb * nc),
                          ulps(a * (b + c), a * b + a * c, na * (nb + nc)),
                          ulps(a + BC::zero(), a, na),
                          ulps(a * BC::one(), a, na),
                          ulps(a + (-a), BC::zero(), na),
                          ulps(dagger(a * b), dagger(a) * dagger(b), na * nb)});
    }
    CHECK(worst <= 4.0);
}

TEST_CASE("norm inequalities") {
    std::mt19937_64 rng(4321);
    for (int i = 0; i < 2000; ++i) {
        const BC a = oracles::random_bicomplex(rng);
        const BC b = oracles::random_bicomplex(rng);
        const C z = oracles::random_bicomplex(rng).c1;
        CHECK(real_norm(a) >= 0.0);
        CHECK(oracles::rel_err(real_norm(z * a), std::abs(z) * real_norm(a)) < 1e-14);
        CHECK(real_norm(a + b) <= (real_norm(a) + real_norm(b)) * (1.0 + 16.0 * eps));
        // T is not absolute-valued; only |ab| <= sqrt(2)|a||b| holds
        CHECK(real_norm(a * b) <=
              std::numbers::sqrt2 * real_norm(a) * real_norm(b) * (1.0 + 16.0 * eps));
    }
    // sqrt(2) bound is attained on the null cone: |e1*e1| = sqrt(2)|e1||e1|
    CHECK(oracles::rel_err(real_norm(BC::e1() * BC::e1()),
                           std::numbers::sqrt2 * real_norm(BC::e1()) * real_norm(BC::e1())) <
          1e-15);
}

TEST_CASE("dagger(a)*a has nonnegative real idempotent components") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const BC a = oracles::random_bicomplex(rng);
        const BC ada = dagger(a) * a;
        CHECK(ada.c1.real() >= 0.0);
        CHECK(ada.c2.real() >= 0.0);
        CHECK(std::abs(ada.c1.imag()) <= 4.0 * eps * std::norm(a.c1));
        CHECK(std::abs(ada.c2.imag()) <= 4.0 * eps * std::norm(a.c2));
    }
}

TEST_CASE("hyperbolic round trip is exact") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 500; ++i) {
        const Hyperbolic<double> h{u(rng), u(rng)};
        const BC lifted = BC::from_hyperbolic(h);
        CHECK(is_hyperbolic(lifted, 0.0));
        const Hyperbolic<double> back = to_hyperbolic(lifted);
        const double scale = std::abs(h.x) + std::abs(h.y);
        CHECK(std::abs(back.x - h.x) <= 4 * eps * scale);
        CHECK(std::abs(back.y - h.y) <= 4 * eps * scale);
    }
    // integer components round-trip bit-exactly
    const Hyperbolic<double> h{3.0, -2.0};
    CHECK(to_hyperbolic(BC::from_hyperbolic(h)) == h);
}

TEST_CASE("hyperbolic arithmetic matches the lifted bicomplex arithmetic") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const Hyperbolic<double> a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const BC lifted = a.to_bicomplex() * b.to_bicomplex();
        const Hyperbolic<double> prod = a * b;
        CHECK(oracles::comp_norm(lifted - prod.to_bicomplex()) <=
              32.0 * eps * real_norm(a) * real_norm(b) + 1e-300);
    }
}

TEST_CASE("idempotent pair rendering") {
    CHECK(to_string(BC{C(1, 2), C(3, -4)}) == "1+2i1 | 3-4i1");
    CHECK(to_string(BC::e1()) == "1+0i1 | 0+0i1");
}
