#ifndef SEL3_FORMS_HPP
#define SEL3_FORMS_HPP

/*
 * Integral binary cubic forms F(x,y) = a x^3 + b x^2 y + c x y^2 + d y^3,
 * the GL2(Z) substitution action, and a canonical representative per
 * equivalence class.
 *
 * Discriminant:
 *     D = b^2 c^2 + 18 a b c d - 27 a^2 d^2 - 4 b^3 d - 4 c^3 a,
 * invariant under unimodular substitutions.
 *
 * Reduction. The Hessian covariant of F is the quadratic form
 *     H_F = (P, Q, R),  P = b^2 - 3ac,  Q = bc - 9ad,  R = c^2 - 3bd,
 * with disc H_F = Q^2 - 4PR = -3D, and H_{F o N} = H_F o N for any
 * substitution N.
 *
 *  - D > 0: H_F is positive definite. Call F reduced when H_F is
 *    (weakly) reduced: |Q| <= P <= R.
 *  - D < 0: F has a single real root theta and factors over R as
 *    a (x - theta y) (x^2 + s x y + t y^2) with the quadratic factor
 *    positive definite. Call F reduced when a > 0, |s| < 1 and t > 1
 *    (the root z of x^2 + s x + t in the upper half plane lies in the
 *    standard fundamental domain). For a > 0 the sign of F(x0, y0)
 *    at y0 > 0 equals the sign of x0/y0 - theta, which turns the real
 *    conditions into exact integer tests:
 *        s < 1   <=>  F(a - b, a) > 0
 *        s > -1  <=>  F(-(a + b), a) < 0
 *        t > 1   <=>  d * F(-d, a) < 0
 *    (equalities cannot occur for irreducible F: they would force a
 *    rational root).
 *
 * Each class contains at least one and only finitely many reduced
 * forms; any two are related by a substitution with entries in
 * {-1, 0, 1} (transfers between reduced quadratics and fundamental-
 * domain boundary identifications, times the order-<=12 stabilizers).
 * canonicalize() reduces and then takes the lexicographically smallest
 * (a,b,c,d) over that finite neighborhood.
 */

#include "sel3/integers.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sel3 {

template <class Z>
struct Cubic {
    Z a{}, b{}, c{}, d{};

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Z eval(const Z& x, const Z& y) const {
        return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
    }

    friend bool operator==(const Cubic& f, const Cubic& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
    }
    friend bool operator<(const Cubic& f, const Cubic& g) {
        return std::tie(f.a, f.b, f.c, f.d) < std::tie(g.a, g.b, g.c, g.d);
    }
};

template <class Z>
struct Mat2 {
    Z e{}, f{}, g{}, h{};

    Z det() const { return e * h - f * g; }
    bool is_unimodular() const {
        Z d = det();
        return d == 1 || d == -1;
    }
    Mat2 operator*(const Mat2& o) const {
        return {e * o.e + f * o.g, e * o.f + f * o.h,
                g * o.e + h * o.g, g * o.f + h * o.h};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.e == n.e && m.f == n.f && m.g == n.g && m.h == n.h;
    }
};

using BinaryCubicForm = Cubic<Int>;
using Cubic64 = Cubic<i64>;
using UnimodularMatrix = Mat2<Int>;
using Mat64 = Mat2<i64>;

template <class Z>
Z discriminant(const Cubic<Z>& F) {
    const Z &a = F.a, &b = F.b, &c = F.c, &d = F.d;
    return b * b * c * c + 18 * a * b * c * d - 27 * a * a * d * d -
           4 * b * b * b * d - 4 * c * c * c * a;
}

// F(ex + fy, gx + hy), coefficient by coefficient.
template <class Z>
Cubic<Z> act(const Mat2<Z>& M, const Cubic<Z>& F) {
    const Z &a = F.a, &b = F.b, &c = F.c, &d = F.d;
    const Z &e = M.e, &f = M.f, &g = M.g, &h = M.h;
    Cubic<Z> r;
    r.a = F.eval(e, g);
    r.b = 3 * a * e * e * f + b * (e * e * h + 2 * e * f * g) +
          c * (g * g * f + 2 * e * g * h) + 3 * d * g * g * h;
    r.c = 3 * a * e * f * f + b * (f * f * g + 2 * e * f * h) +
          c * (e * h * h + 2 * f * g * h) + 3 * d * g * h * h;
    r.d = F.eval(f, h);
    return r;
}

template <class Z>
Cubic<Z> act_checked(const Mat2<Z>& M, const Cubic<Z>& F) {
    if (!M.is_unimodular())
        throw std::invalid_argument("act: matrix is not unimodular");
    return act(M, F);
}

template <class Z>
bool is_primitive(const Cubic<Z>& F) {
    using std::gcd;
    using boost::multiprecision::gcd;
    Z g = gcd(gcd(F.a, F.b), gcd(F.c, F.d));
    return g == 1 || g == -1;
}

/*
 * Irreducibility over Q. A cubic form is reducible iff it has a root in
 * P^1(Q); in lowest terms [p : q] such a root has q | a and p | d, and
 * a = 0 or d = 0 already exhibit the roots [1:0], [0:1].
 */
inline bool is_irreducible(const BinaryCubicForm& F) {
    if (F.is_zero()) throw std::invalid_argument("is_irreducible: zero form");
    if (F.a == 0 || F.d == 0) return false;
    i64 a = to_i64_checked(F.a, "is_irreducible");
    i64 d = to_i64_checked(F.d, "is_irreducible");
    for (i64 q : divisors64(a))
        for (i64 p : divisors64(d)) {
            if (std::gcd(p, q) != 1) continue;
            if (F.eval(Int(p), Int(q)) == 0 || F.eval(Int(-p), Int(q)) == 0)
                return false;
        }
    return true;
}

/*
 * int64 irreducibility for the enumeration kernels: locate the real
 * roots numerically, then verify candidate rational roots exactly.
 * Only denominators dividing a can occur, and a candidate is accepted
 * only on exact evaluation, so numeric error cannot produce a wrong
 * answer; the +-1 window around the rounded numerator absorbs it.
 */
inline bool is_irreducible_i64(const Cubic64& F) {
    if (F.a == 0 || F.d == 0) return false;
    double a = double(F.a), b = double(F.b), c = double(F.c), d = double(F.d);
    double roots[3];
    int nroots = 0;
    {
        // Newton from spread-out starts; dedupe close hits.
        double bound = 1.0;
        for (double co : {std::abs(b / a), std::abs(c / a), std::abs(d / a)})
            bound = std::max(bound, 2.0 * co);
        for (int k = -6; k <= 6; ++k) {
            double t = bound * k / 6.0;
            for (int it = 0; it < 60; ++it) {
                double ft = ((a * t + b) * t + c) * t + d;
                double dft = (3 * a * t + 2 * b) * t + c;
                if (dft == 0) break;
                double nt = t - ft / dft;
                if (std::abs(nt - t) < 1e-13 * (1 + std::abs(nt))) { t = nt; break; }
                t = nt;
            }
            bool dup = false;
            for (int i = 0; i < nroots; ++i)
                if (std::abs(roots[i] - t) < 1e-6 * (1 + std::abs(t))) dup = true;
            if (!dup && nroots < 3 && std::abs(((a * t + b) * t + c) * t + d) <
                                          1e-4 * (std::abs(a * t * t * t) + std::abs(d) + 1))
                roots[nroots++] = t;
        }
    }
    for (i64 q : divisors64(F.a))
        for (int i = 0; i < nroots; ++i) {
            i64 p0 = std::llround(roots[i] * double(q));
            for (i64 p = p0 - 1; p <= p0 + 1; ++p)
                if (std::gcd(p, q) == 1 && F.eval(p, q) == 0) return false;
        }
    return true;
}

// Hessian covariant (P, Q, R) with Q^2 - 4PR = -3 disc(F).
template <class Z>
std::array<Z, 3> hessian(const Cubic<Z>& F) {
    const Z &a = F.a, &b = F.b, &c = F.c, &d = F.d;
    return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

template <class Z>
bool is_reduced_positive(const Cubic<Z>& F) {
    auto [P, Q, R] = hessian(F);
    Z q = Q < 0 ? Z(-Q) : Q;
    return P > 0 && q <= P && P <= R;
}

template <class Z>
bool is_reduced_negative(const Cubic<Z>& F) {
    if (F.a <= 0) return false;
    const Z amb = F.a - F.b;
    const Z apb = F.a + F.b;
    if (!(F.eval(amb, F.a) > 0)) return false;         // s < 1
    if (!(F.eval(Z(-apb), F.a) < 0)) return false;     // s > -1
    return F.d * F.eval(Z(-F.d), F.a) < 0;             // t > 1
}

template <class Z>
bool is_reduced(const Cubic<Z>& F, const Z& disc) {
    return disc > 0 ? is_reduced_positive(F) : is_reduced_negative(F);
}

namespace detail {

// x -> x + k y  and  (x, y) -> (-y, x)
template <class Z>
Mat2<Z> shear(const Z& k) { return {Z(1), Z(k), Z(0), Z(1)}; }
template <class Z>
Mat2<Z> flip() { return {Z(0), Z(-1), Z(1), Z(0)}; }

// All 2x2 matrices over {-1,0,1} with determinant +-1; every pair of
// reduced forms in one class is related by one of these.
inline const std::vector<Mat64>& unimodular_radius1() {
    static const std::vector<Mat64> ms = [] {
        std::vector<Mat64> v;
        for (int e = -1; e <= 1; ++e)
            for (int f = -1; f <= 1; ++f)
                for (int g = -1; g <= 1; ++g)
                    for (int h = -1; h <= 1; ++h) {
                        int det = e * h - f * g;
                        if (det == 1 || det == -1)
                            v.push_back(Mat64{e, f, g, h});
                    }
        return v;
    }();
    return ms;
}

template <class Z>
Mat2<Z> to_mat(const Mat64& m) {
    return {Z(m.e), Z(m.f), Z(m.g), Z(m.h)};
}

// Real root of F(t,1) for sign/step estimates; exact tests decide.
template <class Z>
double real_root_estimate(const Cubic<Z>& F) {
    double a = double(F.a), b = double(F.b), c = double(F.c), d = double(F.d);
    double t = 0.0;
    double bound = 1.0;
    for (double co : {std::abs(b / a), std::abs(c / a), std::abs(d / a)})
        bound = std::max(bound, 2.0 * co);
    // bisect on sign change, then Newton polish
    double lo = -bound, hi = bound;
    auto ev = [&](double x) { return ((a * x + b) * x + c) * x + d; };
    if (ev(lo) > 0) lo = -3 * bound - 1;
    if (ev(hi) < 0) hi = 3 * bound + 1;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (ev(mid) < 0 ? lo : hi) = mid;
    }
    t = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        double ft = ev(t), dft = (3 * a * t + 2 * b) * t + c;
        if (dft != 0) t -= ft / dft;
    }
    return t;
}

}  // namespace detail

/*
 * Bring F to a reduced form, returning it. The positive-discriminant
 * branch is Gauss reduction on the Hessian; the negative branch walks
 * the real quadratic factor into the fundamental domain using only the
 * exact sign tests above (a numeric root estimate supplies long shear
 * jumps, then single exact steps finish).
 */
template <class Z>
Cubic<Z> reduce_form(Cubic<Z> F, const Z& disc) {
    if (disc == 0) throw std::invalid_argument("reduce_form: discriminant is zero");
    if (disc > 0) {
        for (int guard = 0; guard < 100000; ++guard) {
            auto [P, Q, R] = hessian(F);
            if (P <= 0) throw std::logic_error("reduce_form: Hessian not definite");
            // normalize Q into (-P, P]
            if (Q > P || Q <= -P) {
                Z k = (P - Q);
                // floor((P - Q) / (2P))
                Z twoP = 2 * P;
                Z q = k / twoP;
                if (k % twoP != 0 && ((k < 0) != (twoP < 0))) q -= 1;
                F = act(detail::shear(q), F);
                continue;
            }
            if (R < P) {
                F = act(detail::flip<Z>(), F);
                continue;
            }
            return F;
        }
        throw std::logic_error("reduce_form: positive-branch loop bound exceeded");
    }

    auto negate = [](const Cubic<Z>& G) { return Cubic<Z>{-G.a, -G.b, -G.c, -G.d}; };
    if (F.a == 0) {
        // a = 0 means [1:0] is a root: only possible for reducible input,
        // but make one shear attempt so error reporting happens upstream.
        F = act(detail::shear(Z(1)), F);
        if (F.a == 0) throw std::invalid_argument("reduce_form: leading coefficient stays zero");
    }
    if (F.a < 0) F = negate(F);
    for (int guard = 0; guard < 100000; ++guard) {
        // long jump: s ~ theta + b/a, shear by k maps s -> s + 2k
        double s = detail::real_root_estimate(F) + double(F.b) / double(F.a);
        if (std::isfinite(s) && std::abs(s) > 4) {
            i64 k = std::llround(s / 2);
            if (k >= 2 || k <= -2) {
                F = act(detail::shear(Z(-k)), F);
                if (F.a < 0) F = negate(F);
                continue;
            }
        }
        if (F.eval(Z(F.a - F.b), F.a) <= 0) {            // s >= 1
            F = act(detail::shear(Z(-1)), F);
            continue;
        }
        if (F.eval(Z(-(F.a + F.b)), F.a) >= 0) {         // s <= -1
            F = act(detail::shear(Z(1)), F);
            continue;
        }
        if (F.d * F.eval(Z(-F.d), F.a) >= 0) {           // t <= 1
            F = act(detail::flip<Z>(), F);
            if (F.a < 0) F = negate(F);
            continue;
        }
        return F;
    }
    throw std::logic_error("reduce_form: negative-branch loop bound exceeded");
}

/*
 * Canonical class representative: reduce, then take the lexicographic
 * minimum over every reduced, positive-leading-coefficient image under
 * the +-1-entry substitutions (the identity is among them).
 * canonicalize(act(M, F)) == canonicalize(F) for all unimodular M, and
 * canonicalize is idempotent.
 */
template <class Z>
Cubic<Z> canonicalize_unchecked(const Cubic<Z>& F) {
    Z disc = discriminant(F);
    if (disc == 0) throw std::invalid_argument("canonicalize: discriminant is zero");
    Cubic<Z> red = reduce_form(F, disc);
    Cubic<Z> best;
    bool have = false;
    for (const Mat64& m : detail::unimodular_radius1()) {
        Cubic<Z> g = act(detail::to_mat<Z>(m), red);
        if (g.a <= 0 || !is_reduced(g, disc)) continue;
        if (!have || g < best) { best = g; have = true; }
    }
    if (!have) throw std::logic_error("canonicalize: no reduced neighbour");
    return best;
}

inline BinaryCubicForm canonicalize(const BinaryCubicForm& F) {
    if (F.is_zero()) throw std::invalid_argument("canonicalize: zero form");
    if (discriminant(F) == 0) throw std::invalid_argument("canonicalize: discriminant is zero");
    if (!is_irreducible(F)) throw std::invalid_argument("canonicalize: reducible form");
    return canonicalize_unchecked(F);
}

inline Cubic64 canonicalize_i64(const Cubic64& F) { return canonicalize_unchecked(F); }

}  // namespace sel3

#endif
