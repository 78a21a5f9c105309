#pragma once

// Radial eigenfunctions over the hyperbolic plane (x_zeta, y_zeta), emitted
// as Re/Hy/|.|^2 surfaces by two independent algebraic routes that must
// agree: (1) componentwise evaluation at zeta_1 = x+y, zeta_2 = x-y, and
// (2) the bivariate polynomial ell_nl(zeta) = zeta^l L_{n-l-1}^{2l+1}(zeta)
// expanded over D with exact rational coefficients, combined with the
// cosh/sinh split of exp(-zeta/2) and the xi^{-3} prefactor expansion.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <quadmath.h>

#include <Eigen/Dense>
#include <json.hpp>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/errors.hpp"
#include "bicoulomb/special_functions.hpp"

namespace bicoulomb {

namespace detail {

// Exact rational on __int128 with overflow-checked arithmetic.  Large enough
// for the ell_nl expansions up to n ~ 30; beyond that the build throws
// rather than silently losing exactness.
struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static __int128 checked_mul(__int128 a, __int128 b) {
        __int128 out;
        if (__builtin_mul_overflow(a, b, &out))
            throw DomainError("surface polynomial: exact coefficient exceeds 128-bit range");
        return out;
    }

    static __int128 checked_add(__int128 a, __int128 b) {
        __int128 out;
        if (__builtin_add_overflow(a, b, &out))
            throw DomainError("surface polynomial: exact coefficient exceeds 128-bit range");
        return out;
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational times(const Rational& o) const {
        Rational r{checked_mul(num, o.num), checked_mul(den, o.den)};
        r.reduce();
        return r;
    }

    Rational plus(const Rational& o) const {
        const __int128 g = gcd128(den, o.den);
        const __int128 da = den / g, db = o.den / g;
        Rational r{checked_add(checked_mul(num, db), checked_mul(o.num, da)),
                   checked_mul(den, db)};
        r.reduce();
        return r;
    }

    Rational minus(const Rational& o) const { return plus({-o.num, o.den}); }

    double to_double() const { return double(num) / double(den); }

    // Exact to quad precision: both num and den stay below 2^113.
    __float128 to_quad() const { return __float128(num) / __float128(den); }
};

inline __int128 binomial128(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = Rational::checked_mul(acc, n - k + i) / i;  // exact at each step
    return acc;
}

inline __int128 factorial128(int n) {
    __int128 acc = 1;
    for (int i = 2; i <= n; ++i)
        acc = Rational::checked_mul(acc, i);
    return acc;
}

inline double ipow(double x, int p) {
    double acc = 1.0;
    for (int i = 0; i < p; ++i)
        acc *= x;
    return acc;
}

} // namespace detail

// The (n, l) pairs indexing one radial surface; m plays no role here.
struct RadialPair {
    int n1 = 1, n2 = 1;
    int l1 = 0, l2 = 0;

    int n(int s) const { return s == 1 ? n1 : n2; }
    int l(int s) const { return s == 1 ? l1 : l2; }

    void validate() const {
        for (int s = 1; s <= 2; ++s)
            if (n(s) < 1 || l(s) < 0 || l(s) > n(s) - 1)
                throw DomainError("RadialPair: requires 1 <= n_s and 0 <= l_s <= n_s-1");
    }

    auto operator<=>(const RadialPair&) const = default;
};

// Bivariate monomial tables for the Re and Hy parts of a polynomial in
// zeta = x + y*j.  Entry (a, b) is the coefficient of x^a y^b.  On the
// y = 0 line the Hy table contributes nothing for sector-symmetric input
// (only odd powers of y are populated there).
//
// Coefficients are kept in quad precision (exact images of the rational
// expansion; num and den are below 2^113) and evaluation runs in quad as
// well.  In the oscillatory region the monomial-basis positive-term sum
// exceeds the polynomial value by up to ~10^25 for n = 25, so double
// coefficients or double Horner would lose the path-equivalence check.
struct BivariateHyperbolicPoly {
    Eigen::MatrixXd re;  // double views of the tables
    Eigen::MatrixXd hy;
    std::vector<__float128> re_q;  // row-major (a * (degree+1) + b)
    std::vector<__float128> hy_q;
    int degree = 0;

    // Nested Horner in quad precision: inner in y per x-power, outer in x.
    std::pair<__float128, __float128> eval_quad(__float128 x, __float128 y) const {
        const int dim = degree + 1;
        __float128 acc_re = 0, acc_hy = 0;
        for (int a = degree; a >= 0; --a) {
            __float128 row_re = 0, row_hy = 0;
            for (int b = degree - a; b >= 0; --b) {
                row_re = row_re * y + re_q[a * dim + b];
                row_hy = row_hy * y + hy_q[a * dim + b];
            }
            acc_re = acc_re * x + row_re;
            acc_hy = acc_hy * x + row_hy;
        }
        return {acc_re, acc_hy};
    }

    std::pair<double, double> eval(double x, double y) const {
        const auto [r, h] = eval_quad(x, y);
        return {double(r), double(h)};
    }
};

// Expands ell_nl(zeta) = zeta^l L_{n-l-1}^{2l+1}(zeta) over D.  Per sector,
// the coefficient of zeta^p (p = l_s + m) is (-1)^m binom(q+k, q-m)/m!  with
// q = n_s-l_s-1, k = 2l_s+1; the j-split comes from the binomial reduction of
// (x + y*j)^p with j^2 = 1.  All arithmetic exact until the final conversion.
inline BivariateHyperbolicPoly build_ell_polynomial(const RadialPair& nl) {
    nl.validate();
    using detail::Rational;
    const int degree = std::max(nl.n1, nl.n2) - 1;
    const int dim = degree + 1;

    std::array<std::vector<std::vector<Rational>>, 2> sector_tables;
    for (int s = 1; s <= 2; ++s) {
        auto& table = sector_tables[s - 1];
        table.assign(dim, std::vector<Rational>(dim, Rational{0, 1}));
        const int q = nl.n(s) - nl.l(s) - 1;
        const int k = 2 * nl.l(s) + 1;
        for (int m = 0; m <= q; ++m) {
            const int p = nl.l(s) + m;
            Rational c{detail::binomial128(q + k, q - m), detail::factorial128(m)};
            if (m % 2 != 0)
                c.num = -c.num;
            c.reduce();
            for (int b = 0; b <= p; ++b) {
                const int a = p - b;
                Rational term = c.times(Rational{detail::binomial128(p, b), 1});
                if (s == 2 && b % 2 != 0)
                    term.num = -term.num;  // (x - y)^p in sector 2
                table[a][b] = term;        // single contribution per (a, b) and sector
            }
        }
    }

    BivariateHyperbolicPoly poly;
    poly.degree = degree;
    poly.re = Eigen::MatrixXd::Zero(dim, dim);
    poly.hy = Eigen::MatrixXd::Zero(dim, dim);
    poly.re_q.assign(dim * dim, __float128(0));
    poly.hy_q.assign(dim * dim, __float128(0));
    const Rational half{1, 2};
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b + a < dim; ++b) {
            const Rational re_ab = sector_tables[0][a][b].plus(sector_tables[1][a][b]).times(half);
            const Rational hy_ab =
                sector_tables[0][a][b].minus(sector_tables[1][a][b]).times(half);
            poly.re(a, b) = re_ab.to_double();
            poly.hy(a, b) = hy_ab.to_double();
            poly.re_q[a * dim + b] = re_ab.to_quad();
            poly.hy_q[a * dim + b] = hy_ab.to_quad();
        }
    return poly;
}

namespace detail {

inline std::shared_ptr<const BivariateHyperbolicPoly> cached_ell_polynomial(
    const RadialPair& nl) {
    static std::mutex mtx;
    static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const BivariateHyperbolicPoly>>
        cache;
    const std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(nl.n1, nl.n2, nl.l1, nl.l2);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_shared<BivariateHyperbolicPoly>(build_ell_polynomial(nl)))
                 .first;
    return it->second;
}

} // namespace detail

struct SurfaceOptions {
    double a0 = 1.0;  // Bohr radius entering the normalization bracket
    double Z = 1.0;
    bool include_normalization = true;  // drop to plot the bare exp * ell form
    double prefactor = 1.0;             // extra caption-style scaling (a0^{3/2} etc.)
};

struct SurfacePoint {
    double re = 0.0;
    double hy = 0.0;
    double norm2 = 0.0;  // re^2 + hy^2, the squared hyperbolic norm
};

// xi^{-3} in the hyperbolic basis: ((x+y)^-3 +- (x-y)^-3)/2.
inline Hyperbolic<double> xi_inverse_cubed(const Hyperbolic<double>& xi) {
    if (is_null_cone(xi))
        throw NullConeError("xi_inverse_cubed: xi lies in the null cone");
    const double p1 = 1.0 / detail::ipow(xi.comp1(), 3);
    const double p2 = 1.0 / detail::ipow(xi.comp2(), 3);
    return Hyperbolic<double>::from_components(p1, p2);
}

namespace detail {

inline void check_xi_in_d_plus(const Hyperbolic<double>& xi) {
    if (is_null_cone(xi))
        throw NullConeError("surface evaluation: xi lies in the null cone");
    if (xi.comp1() < 0.0 || xi.comp2() < 0.0)
        throw DomainError("surface evaluation: xi must lie in D+");
}

// Sector prefactor sqrt(u0_{n l}) * xi_s^{-3}; u0 is the xi-independent part
// of the squared normalization bracket.
inline double sector_prefactor(int n, int l, double xi_s, const SurfaceOptions& opt) {
    double c = opt.prefactor / detail::ipow(xi_s, 3);
    if (opt.include_normalization) {
        const double scale = 2.0 * opt.Z / (n * opt.a0);
        const double log_u0 = 3.0 * std::log(scale) + std::lgamma(double(n - l)) -
                              std::log(2.0 * n) - std::lgamma(double(n + l + 1));
        c *= std::exp(0.5 * log_u0);
    }
    return c;
}

} // namespace detail

// Route 1: evaluate u_{n_s l_s} at zeta_s = x +- y and recombine into the
// hyperbolic basis.
inline SurfacePoint surface_eval_idempotent(const RadialPair& nl, const Hyperbolic<double>& xi,
                                            double x, double y, const SurfaceOptions& opt = {}) {
    nl.validate();
    detail::check_xi_in_d_plus(xi);
    double u[2];
    for (int s = 1; s <= 2; ++s) {
        const double zeta = (s == 1) ? x + y : x - y;
        const int n = nl.n(s), l = nl.l(s);
        const double c = detail::sector_prefactor(n, l, s == 1 ? xi.comp1() : xi.comp2(), opt);
        u[s - 1] = c * std::exp(-0.5 * zeta) * detail::ipow(zeta, l) *
                   laguerre(n - l - 1, 2 * l + 1, zeta);
    }
    SurfacePoint pt;
    pt.re = 0.5 * (u[0] + u[1]);
    pt.hy = 0.5 * (u[0] - u[1]);
    pt.norm2 = pt.re * pt.re + pt.hy * pt.hy;
    return pt;
}

// Route 2: the explicit Re/Hy formulas built from the exact ell_nl table,
// the exponential split exp(-zeta/2) = exp(-x/2)(cosh(y/2) - j sinh(y/2))
// and the hyperbolic prefactor expansion.  The whole combination runs in
// quad precision: the cosh/sinh mixing inflates intermediates by up to
// e^|y| over the result, which double cannot absorb on the figure domain.
inline SurfacePoint surface_eval_polynomial(const RadialPair& nl, const Hyperbolic<double>& xi,
                                            double x, double y, const SurfaceOptions& opt = {}) {
    nl.validate();
    detail::check_xi_in_d_plus(xi);
    const auto poly = detail::cached_ell_polynomial(nl);
    const auto [ell_re, ell_hy] = poly->eval_quad(x, y);
    const __float128 c1 = detail::sector_prefactor(nl.n1, nl.l1, xi.comp1(), opt);
    const __float128 c2 = detail::sector_prefactor(nl.n2, nl.l2, xi.comp2(), opt);
    const __float128 xc = (c1 + c2) / 2;
    const __float128 yc = (c1 - c2) / 2;
    const __float128 ch = coshq(__float128(0.5) * __float128(y));
    const __float128 sh = sinhq(__float128(0.5) * __float128(y));
    const __float128 ex = expq(__float128(-0.5) * __float128(x));
    const __float128 a = xc * ch - yc * sh;
    const __float128 b = yc * ch - xc * sh;
    SurfacePoint pt;
    pt.re = double(ex * (a * ell_re + b * ell_hy));
    pt.hy = double(ex * (a * ell_hy + b * ell_re));
    pt.norm2 = pt.re * pt.re + pt.hy * pt.hy;
    return pt;
}

struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    double at(int i) const {
        return count > 1 ? lo + (hi - lo) * double(i) / double(count - 1) : lo;
    }
};

enum class SurfacePath { idempotent, polynomial };

struct SurfaceGrid {
    AxisSpec x_axis, y_axis;
    Eigen::MatrixXd re, hy, norm2;  // indexed (ix, iy)
};

inline SurfaceGrid build_surface(const RadialPair& nl, const Hyperbolic<double>& xi,
                                 const AxisSpec& x_axis, const AxisSpec& y_axis,
                                 SurfacePath path = SurfacePath::idempotent,
                                 const SurfaceOptions& opt = {}) {
    if (x_axis.count < 1 || y_axis.count < 1)
        throw DomainError("build_surface: axis counts must be >= 1");
    SurfaceGrid g;
    g.x_axis = x_axis;
    g.y_axis = y_axis;
    g.re.resize(x_axis.count, y_axis.count);
    g.hy.resize(x_axis.count, y_axis.count);
    g.norm2.resize(x_axis.count, y_axis.count);
    for (int ix = 0; ix < x_axis.count; ++ix)
        for (int iy = 0; iy < y_axis.count; ++iy) {
            const double x = x_axis.at(ix), y = y_axis.at(iy);
            const SurfacePoint pt = path == SurfacePath::idempotent
                                        ? surface_eval_idempotent(nl, xi, x, y, opt)
                                        : surface_eval_polynomial(nl, xi, x, y, opt);
            g.re(ix, iy) = pt.re;
            g.hy(ix, iy) = pt.hy;
            g.norm2(ix, iy) = pt.norm2;
        }
    return g;
}

enum class SurfaceFormat { csv, json };

// Deterministic row-major serialization (x outer, y inner); 17 significant
// digits so doubles round-trip exactly.
inline std::string export_surface(const SurfaceGrid& g, SurfaceFormat format) {
    if (g.re.size() == 0)
        throw IOError("export_surface: empty grid");
    if (format == SurfaceFormat::csv) {
        std::string out = "x,y,re,hy,norm2\n";
        char buf[200];
        for (int ix = 0; ix < g.x_axis.count; ++ix)
            for (int iy = 0; iy < g.y_axis.count; ++iy) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", g.x_axis.at(ix),
                              g.y_axis.at(iy), g.re(ix, iy), g.hy(ix, iy), g.norm2(ix, iy));
                out += buf;
            }
        return out;
    }
    nlohmann::json doc;
    doc["x"] = {{"min", g.x_axis.lo}, {"max", g.x_axis.hi}, {"count", g.x_axis.count}};
    doc["y"] = {{"min", g.y_axis.lo}, {"max", g.y_axis.hi}, {"count", g.y_axis.count}};
    nlohmann::json points = nlohmann::json::array();
    for (int ix = 0; ix < g.x_axis.count; ++ix)
        for (int iy = 0; iy < g.y_axis.count; ++iy)
            points.push_back({g.x_axis.at(ix), g.y_axis.at(iy), g.re(ix, iy), g.hy(ix, iy),
                              g.norm2(ix, iy)});
    doc["points"] = std::move(points);
    return doc.dump();
}

// Parses the CSV form back to rows (x, y, re, hy, norm2).
inline std::vector<std::array<double, 5>> import_surface_csv(std::string_view text) {
    std::vector<std::array<double, 5>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "x,y,re,hy,norm2")
        throw IOError("import_surface_csv: missing or malformed header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::array<double, 5> row{};
        std::istringstream ls(line);
        std::string cell;
        for (int c = 0; c < 5; ++c) {
            if (!std::getline(ls, cell, ','))
                throw IOError("import_surface_csv: short row");
            row[c] = std::stod(cell);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace bicoulomb
