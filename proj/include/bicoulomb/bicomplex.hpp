#pragma once

// Arithmetic for the commutative ring T of bicomplex numbers and its
// hyperbolic subring D, stored in the idempotent representation
// a = a1*e1 + a2*e2 with a1, a2 in C(i1).  In this basis every ring
// operation is componentwise (e1*e2 = 0, e_s^2 = e_s), which is why the
// pair (a1, a2) is the storage format rather than the standard form.

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "bicoulomb/errors.hpp"

namespace bicoulomb {

template <typename Scalar>
using Complex1 = std::complex<Scalar>;

// Absolute per-component tolerance used to detect the null cone for
// floating-point inputs.  Pass 0 for exact (integer-built) values.
inline constexpr double null_cone_tol = 1e-12;

template <typename Scalar = double>
struct Hyperbolic;

template <typename Scalar = double>
struct Bicomplex {
    using C = Complex1<Scalar>;

    C c1{};  // coefficient of e1
    C c2{};  // coefficient of e2

    constexpr Bicomplex() = default;
    constexpr Bicomplex(const C& a1, const C& a2) : c1(a1), c2(a2) {}
    constexpr Bicomplex(Scalar real) : c1(real), c2(real) {}  // R embeds diagonally
    constexpr Bicomplex(int real) : c1(Scalar(real)), c2(Scalar(real)) {}

    static constexpr Bicomplex zero() { return {C(0), C(0)}; }
    static constexpr Bicomplex one() { return {C(1), C(1)}; }
    static constexpr Bicomplex e1() { return {C(1), C(0)}; }
    static constexpr Bicomplex e2() { return {C(0), C(1)}; }
    static constexpr Bicomplex j() { return {C(1), C(-1)}; }
    static constexpr Bicomplex i1() { return {C(0, 1), C(0, 1)}; }
    // i2 := -i1*j; squares to -1.  Exposed as a constant only.
    static constexpr Bicomplex i2() { return {C(0, -1), C(0, 1)}; }

    static constexpr Bicomplex from_hyperbolic(Scalar x, Scalar y) {
        return {C(x + y), C(x - y)};
    }
    static constexpr Bicomplex from_hyperbolic(const Hyperbolic<Scalar>& h);

    constexpr Bicomplex& operator+=(const Bicomplex& o) {
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    constexpr Bicomplex& operator-=(const Bicomplex& o) {
        c1 -= o.c1;
        c2 -= o.c2;
        return *this;
    }
    constexpr Bicomplex& operator*=(const Bicomplex& o) {
        c1 *= o.c1;
        c2 *= o.c2;
        return *this;
    }

    constexpr Bicomplex operator-() const { return {-c1, -c2}; }

    friend constexpr Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend constexpr Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend constexpr Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }

    // C(i1) acts as a scalar on both components.
    friend constexpr Bicomplex operator*(const C& z, const Bicomplex& a) {
        return {z * a.c1, z * a.c2};
    }
    friend constexpr Bicomplex operator*(const Bicomplex& a, const C& z) { return z * a; }
    friend constexpr Bicomplex operator*(Scalar s, const Bicomplex& a) {
        return {s * a.c1, s * a.c2};
    }
    friend constexpr Bicomplex operator*(const Bicomplex& a, Scalar s) { return s * a; }

    friend constexpr bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.c1 == b.c1 && a.c2 == b.c2;
    }
};

// Hyperbolic number x + y*j with real x, y; embeds into T exactly as
// (x+y)e1 + (x-y)e2.
template <typename Scalar>
struct Hyperbolic {
    Scalar x{};  // Re part
    Scalar y{};  // Hy part (coefficient of j)

    constexpr Hyperbolic() = default;
    constexpr Hyperbolic(Scalar re, Scalar hy) : x(re), y(hy) {}

    constexpr Scalar comp1() const { return x + y; }
    constexpr Scalar comp2() const { return x - y; }

    static constexpr Hyperbolic from_components(Scalar a1, Scalar a2) {
        return {(a1 + a2) / Scalar(2), (a1 - a2) / Scalar(2)};
    }

    constexpr Bicomplex<Scalar> to_bicomplex() const {
        return Bicomplex<Scalar>::from_hyperbolic(x, y);
    }

    friend constexpr Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend constexpr Hyperbolic operator-(const Hyperbolic& a, const Hyperbolic& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend constexpr Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
        return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};  // j^2 = 1
    }
    friend constexpr Hyperbolic operator*(Scalar s, const Hyperbolic& a) {
        return {s * a.x, s * a.y};
    }
    constexpr Hyperbolic operator-() const { return {-x, -y}; }
    friend constexpr bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return a.x == b.x && a.y == b.y;
    }
};

template <typename Scalar>
constexpr Bicomplex<Scalar> Bicomplex<Scalar>::from_hyperbolic(const Hyperbolic<Scalar>& h) {
    return from_hyperbolic(h.x, h.y);
}

// dagger-conjugation: componentwise complex conjugation.  A ring involution;
// dagger(a)*a has nonnegative real idempotent components.
template <typename Scalar>
constexpr Bicomplex<Scalar> dagger(const Bicomplex<Scalar>& a) {
    return {std::conj(a.c1), std::conj(a.c2)};
}

// Real norm |a| = sqrt((|a1|^2 + |a2|^2)/2).  For hyperbolic x + yj this
// equals sqrt(x^2 + y^2).
template <typename Scalar>
Scalar real_norm(const Bicomplex<Scalar>& a) {
    return std::sqrt((std::norm(a.c1) + std::norm(a.c2)) / Scalar(2));
}

template <typename Scalar>
Scalar real_norm(const Hyperbolic<Scalar>& h) {
    return std::hypot(h.x, h.y);
}

// Zero-divisor test: true iff either idempotent component has modulus <= tol.
template <typename Scalar>
bool is_null_cone(const Bicomplex<Scalar>& a, Scalar tol = Scalar(null_cone_tol)) {
    return std::abs(a.c1) <= tol || std::abs(a.c2) <= tol;
}

template <typename Scalar>
bool is_null_cone(const Hyperbolic<Scalar>& h, Scalar tol = Scalar(null_cone_tol)) {
    return std::abs(h.comp1()) <= tol || std::abs(h.comp2()) <= tol;
}

// Componentwise inverse, valid off the null cone.
template <typename Scalar>
Bicomplex<Scalar> inverse(const Bicomplex<Scalar>& a, Scalar tol = Scalar(null_cone_tol)) {
    if (is_null_cone(a, tol))
        throw NullConeError("inverse: operand is a zero divisor (null cone)");
    using C = Complex1<Scalar>;
    return {C(1) / a.c1, C(1) / a.c2};
}

// sqrt(j) = e1 + i1*e2; its square is j.
template <typename Scalar = double>
constexpr Bicomplex<Scalar> sqrt_j() {
    return {Complex1<Scalar>(1, 0), Complex1<Scalar>(0, 1)};
}

// Hyperbolic-representation parts of a general bicomplex number.  Both are
// complex; they are real precisely when a is hyperbolic.
template <typename Scalar>
constexpr Complex1<Scalar> re_part(const Bicomplex<Scalar>& a) {
    return (a.c1 + a.c2) / Scalar(2);
}

template <typename Scalar>
constexpr Complex1<Scalar> hy_part(const Bicomplex<Scalar>& a) {
    return (a.c1 - a.c2) / Scalar(2);
}

template <typename Scalar>
bool is_hyperbolic(const Bicomplex<Scalar>& a, Scalar tol = Scalar(null_cone_tol)) {
    return std::abs(a.c1.imag()) <= tol && std::abs(a.c2.imag()) <= tol;
}

// Projection onto D (drops imaginary parts; exact for hyperbolic inputs).
template <typename Scalar>
constexpr Hyperbolic<Scalar> to_hyperbolic(const Bicomplex<Scalar>& a) {
    return Hyperbolic<Scalar>::from_components(a.c1.real(), a.c2.real());
}

template <typename Scalar>
bool is_finite(const Bicomplex<Scalar>& a) {
    return std::isfinite(a.c1.real()) && std::isfinite(a.c1.imag()) &&
           std::isfinite(a.c2.real()) && std::isfinite(a.c2.imag());
}

namespace detail {

inline std::string format_complex1(const std::complex<double>& z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi1", z.real(), z.imag());
    return buf;
}

} // namespace detail

// Textual rendering of the idempotent pair: "a+bi1 | c+di1".
inline std::string to_string(const Bicomplex<double>& a) {
    return detail::format_complex1(a.c1) + " | " + detail::format_complex1(a.c2);
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Bicomplex<Scalar>& a) {
    return os << to_string(Bicomplex<double>(std::complex<double>(a.c1),
                                             std::complex<double>(a.c2)));
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Hyperbolic<Scalar>& h) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gj", double(h.x), double(h.y));
    return os << buf;
}

} // namespace bicoulomb

// Minimal NumTraits so Eigen dense containers can hold Bicomplex entries
// (used for orthonormality Gram matrices).
namespace Eigen {

template <typename Scalar>
struct NumTraits<bicoulomb::Bicomplex<Scalar>> : GenericNumTraits<bicoulomb::Bicomplex<Scalar>> {
    using Real = Scalar;
    using NonInteger = bicoulomb::Bicomplex<Scalar>;
    using Nested = bicoulomb::Bicomplex<Scalar>;
    using Literal = Scalar;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 4,
        MulCost = 12,
    };
    static inline Real epsilon() { return NumTraits<Scalar>::epsilon(); }
    static inline Real dummy_precision() { return NumTraits<Scalar>::dummy_precision(); }
    static inline int digits10() { return NumTraits<Scalar>::digits10(); }
};

} // namespace Eigen
