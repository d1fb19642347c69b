#ifndef SEL3_LOCAL_CONDITIONS_HPP
#define SEL3_LOCAL_CONDITIONS_HPP

/*
 * Local classification of binary cubic forms at a prime p.
 *
 * The symbol of F at p records how F factors over F_p, by counting the
 * roots of F in P^1(F_p) with multiplicity:
 *   (111) three simple roots, (12) one simple root and an irreducible
 *   quadratic, (3) no roots, (1^2 1) a double and a simple root,
 *   (1^3) a triple root.
 *
 * V_p: for p > 2, p^2 does not divide D; for p = 2, D = 1 mod 4 or
 * D = 8, 12 mod 16. U_p: V_p, or the symbol is (1^3) and F represents
 * some e*p with p not dividing e modulo p^2. V'_p: for p = 2 it means
 * 2 does not divide D, for p = 3 it means V_3 together with 3 | D, and
 * for p >= 5 it equals V_p.
 *
 * Densities are exact rationals #S(p^r) / #Phi(p^r) obtained by full
 * enumeration of the coefficient quadruples modulo p^r that are
 * primitive at p; #Phi(p^r) = p^{4r} (1 - p^{-4}).
 *
 * For class-level membership in U = /\ U_p the per-prime test is only
 * nontrivial at p = 2 and at odd p with p^2 | D (V_p holds everywhere
 * else), and for a (1^3) form the represented-value condition reduces
 * to an evaluation at the triple root: normalizing the triple root of
 * F mod p to [1:0] leaves a form G with p | a,b,c, and the values of G
 * of valuation exactly 1 are the G(unit, p*anything) = a_G * unit;
 * such values exist iff p^2 does not divide a_G = F(x0, y0). The
 * gradient of F vanishes mod p at the triple root, so the value
 * F(x0, y0) mod p^2 does not depend on the chosen lift.
 */

#include "sel3/forms.hpp"
#include "sel3/integers.hpp"

#include <optional>

namespace sel3 {

enum class SplittingSymbol { S111, S12, S3, S121, S13 };

inline const char* to_string(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::S111: return "(111)";
        case SplittingSymbol::S12: return "(12)";
        case SplittingSymbol::S3: return "(3)";
        case SplittingSymbol::S121: return "(1^2 1)";
        case SplittingSymbol::S13: return "(1^3)";
    }
    return "?";
}

namespace detail {

struct SymbolData {
    SplittingSymbol symbol;
    // representative of the multiple root when the symbol is ramified,
    // as a coprime pair (x0, y0) with 0 <= x0, y0 < p
    i64 rx = 0, ry = 0;
};

// Roots of F in P^1(F_p) with multiplicities, by repeated division.
inline SymbolData symbol_data(const Cubic64& F, i64 p) {
    i64 a = ((F.a % p) + p) % p, b = ((F.b % p) + p) % p;
    i64 c = ((F.c % p) + p) % p, d = ((F.d % p) + p) % p;
    if (a == 0 && b == 0 && c == 0 && d == 0)
        throw std::invalid_argument("splitting_symbol: form vanishes mod p");

    int nroots = 0;
    int mults[3];
    i64 rootx[3], rooty[3];

    // affine roots t of F(t, 1)
    for (i64 t = 0; t < p; ++t) {
        i64 v = (((a * t + b) % p * t + c) % p * t + d) % p;
        if (v != 0) continue;
        // multiplicity: divide coefficient vector by (x - t) repeatedly
        i64 q[4] = {a, b, c, d};
        int deg = 3, mult = 0;
        while (deg >= 1) {
            // synthetic division by (x - t): remainder is the value
            i64 r = 0;
            i64 out[4] = {0, 0, 0, 0};
            for (int i = 0; i <= deg; ++i) {
                out[i] = r;
                r = (r * t + q[i]) % p;
            }
            if (r != 0) break;
            ++mult;
            --deg;
            for (int i = 0; i <= deg; ++i) q[i] = out[i + 1];
        }
        rootx[nroots] = t;
        rooty[nroots] = 1;
        mults[nroots++] = mult;
    }
    // root at infinity [1:0], multiplicity = trailing zeros of (a,b,c)
    if (a == 0) {
        int mult = 1;
        if (b == 0) {
            mult = 2;
            if (c == 0) mult = 3;
        }
        rootx[nroots] = 1;
        rooty[nroots] = 0;
        mults[nroots++] = mult;
    }

    int total = 0, maxm = 0, arg = -1;
    for (int i = 0; i < nroots; ++i) {
        total += mults[i];
        if (mults[i] > maxm) { maxm = mults[i]; arg = i; }
    }
    SymbolData out;
    if (nroots == 0) {
        out.symbol = SplittingSymbol::S3;
    } else if (maxm == 3) {
        out.symbol = SplittingSymbol::S13;
    } else if (maxm == 2) {
        out.symbol = SplittingSymbol::S121;
    } else if (total == 3) {
        out.symbol = SplittingSymbol::S111;
    } else {
        out.symbol = SplittingSymbol::S12;
    }
    if (arg >= 0 && maxm >= 2) { out.rx = rootx[arg]; out.ry = rooty[arg]; }
    return out;
}

}  // namespace detail

inline SplittingSymbol splitting_symbol(const Cubic64& F, i64 p) {
    return detail::symbol_data(F, p).symbol;
}
inline SplittingSymbol splitting_symbol(const BinaryCubicForm& F, i64 p) {
    Cubic64 f{to_i64_checked(F.a % p, "symbol"), to_i64_checked(F.b % p, "symbol"),
              to_i64_checked(F.c % p, "symbol"), to_i64_checked(F.d % p, "symbol")};
    return splitting_symbol(f, p);
}

template <class Z>
bool in_vp(const Cubic<Z>& F, i64 p) {
    Z D = discriminant(F);
    if (p == 2) {
        i64 m = static_cast<i64>(((D % 16) + 16) % 16);
        return m % 4 == 1 || m == 8 || m == 12;
    }
    return D % (Z(p) * p) != 0;
}

/*
 * The represented-value condition for U_p, decided exactly as stated:
 * search all (x, y) modulo p^2 for a value of valuation exactly one.
 */
template <class Z>
bool up_lift_exhaustive(const Cubic<Z>& F, i64 p) {
    i64 p2 = p * p;
    i64 a = static_cast<i64>(((F.a % p2) + p2) % p2);
    i64 b = static_cast<i64>(((F.b % p2) + p2) % p2);
    i64 c = static_cast<i64>(((F.c % p2) + p2) % p2);
    i64 d = static_cast<i64>(((F.d % p2) + p2) % p2);
    for (i64 x = 0; x < p2; ++x)
        for (i64 y = 0; y < p2; ++y) {
            i64 v = (((a * x % p2) * x % p2) * x + ((b * x % p2) * x % p2) * y +
                     ((c * y % p2) * y % p2) * x + ((d * y % p2) * y % p2) * y) % p2;
            if (v % p == 0 && v != 0) return true;
        }
    return false;
}

// Same condition via the triple-root evaluation; valid for every p.
template <class Z>
bool up_lift_at_root(const Cubic<Z>& F, i64 p) {
    Cubic64 f{static_cast<i64>(((F.a % p) + p) % p), static_cast<i64>(((F.b % p) + p) % p),
              static_cast<i64>(((F.c % p) + p) % p), static_cast<i64>(((F.d % p) + p) % p)};
    auto sd = detail::symbol_data(f, p);
    if (sd.symbol != SplittingSymbol::S13) return false;
    Z val = F.eval(Z(sd.rx), Z(sd.ry));
    return val % (Z(p) * p) != 0;
}

template <class Z>
bool in_up(const Cubic<Z>& F, i64 p) {
    if (in_vp(F, p)) return true;
    if (splitting_symbol(Cubic64{static_cast<i64>(((F.a % p) + p) % p),
                                 static_cast<i64>(((F.b % p) + p) % p),
                                 static_cast<i64>(((F.c % p) + p) % p),
                                 static_cast<i64>(((F.d % p) + p) % p)},
                         p) != SplittingSymbol::S13)
        return false;
    // the quadratic search is the definition; beyond its budget the
    // triple-root evaluation gives the same answer in O(p)
    if (p <= 31) return up_lift_exhaustive(F, p);
    return up_lift_at_root(F, p);
}

template <class Z>
bool in_vp_prime(const Cubic<Z>& F, i64 p) {
    Z D = discriminant(F);
    if (p == 2) return D % 2 != 0;
    if (p == 3) return in_vp(F, 3) && D % 3 == 0;
    return in_vp(F, p);
}

/*
 * Class-level membership in V, V' and U for a form of discriminant D,
 * given the factorization of |D|. V and V' are conditions on D alone;
 * U additionally needs per-prime checks exactly where V_p fails.
 */
struct DiscFactors {
    std::vector<std::pair<i64, int>> fs;
    explicit DiscFactors(i64 D) : fs(factor64(D)) {}
    int v(i64 p) const {
        for (auto& [q, e] : fs)
            if (q == p) return e;
        return 0;
    }
};

inline bool class_in_V(i64 D, const DiscFactors& df) {
    i64 m = ((D % 16) + 16) % 16;
    if (!(m % 4 == 1 || m == 8 || m == 12)) return false;
    for (auto& [p, e] : df.fs)
        if (p > 2 && e >= 2) return false;
    return true;
}

inline bool class_in_Vprime(i64 D, const DiscFactors& df) {
    if (D % 2 == 0) return false;
    if (df.v(3) != 1) return false;
    for (auto& [p, e] : df.fs)
        if (p >= 5 && e >= 2) return false;
    return true;
}

inline bool class_in_U(const Cubic64& F, i64 D, const DiscFactors& df) {
    if (!in_up(F, i64(2))) return false;
    for (auto& [p, e] : df.fs)
        if (p > 2 && e >= 2 && !in_up(F, p)) return false;
    return true;
}

/*
 * Exact local densities over Phi(p^r).
 */
struct LocalSetId {
    enum class Kind { T111, T12, T3, T121, T13, V, U, VPrime };
    Kind kind;
    i64 p;
};

inline int density_modulus_exponent(const LocalSetId& id) {
    using K = LocalSetId::Kind;
    switch (id.kind) {
        case K::T111: case K::T12: case K::T3: case K::T121: case K::T13:
            return 1;
        case K::V: case K::U:
            return id.p == 2 ? 4 : 2;
        case K::VPrime:
            return 2;
    }
    return 2;
}

inline Int phi_count(i64 p, int r) {
    // p^{4r} (1 - p^{-4})
    return int_pow(Int(p), 4 * r) - int_pow(Int(p), 4 * r - 4);
}

inline Rat local_density(const LocalSetId& id, i64 iteration_budget = 400'000'000) {
    using K = LocalSetId::Kind;
    const i64 p = id.p;
    const int r = density_modulus_exponent(id);
    i64 m = pow_i64(p, r);
    double total_d = std::pow(double(m), 4.0);
    if (total_d > double(iteration_budget))
        throw std::length_error("local_density: p^{4r} exceeds the iteration budget");

    i64 members = 0, primitive = 0;
    Cubic64 F;
    for (i64 a = 0; a < m; ++a)
        for (i64 b = 0; b < m; ++b)
            for (i64 c = 0; c < m; ++c)
                for (i64 d = 0; d < m; ++d) {
                    if (a % p == 0 && b % p == 0 && c % p == 0 && d % p == 0) continue;
                    ++primitive;
                    F = Cubic64{a, b, c, d};
                    bool in = false;
                    switch (id.kind) {
                        case K::T111: in = splitting_symbol(F, p) == SplittingSymbol::S111; break;
                        case K::T12: in = splitting_symbol(F, p) == SplittingSymbol::S12; break;
                        case K::T3: in = splitting_symbol(F, p) == SplittingSymbol::S3; break;
                        case K::T121: in = splitting_symbol(F, p) == SplittingSymbol::S121; break;
                        case K::T13: in = splitting_symbol(F, p) == SplittingSymbol::S13; break;
                        case K::V: in = in_vp(F, p); break;
                        case K::U:
                            in = in_vp(F, p) ||
                                 (splitting_symbol(F, p) == SplittingSymbol::S13 &&
                                  up_lift_exhaustive(F, p));
                            break;
                        case K::VPrime: in = in_vp_prime(F, p); break;
                    }
                    if (in) ++members;
                }
    Int expected = phi_count(p, r);
    if (Int(primitive) != expected)
        throw std::logic_error("local_density: primitive count disagrees with p^{4r}(1-p^-4)");
    return Rat(Int(members), expected);
}

}  // namespace sel3

#endif
