#ifndef SEL3_TESTS_BRUTE_FORCE_HPP
#define SEL3_TESTS_BRUTE_FORCE_HPP

/*
 * Independent class-enumeration oracle: scan a coefficient box that
 * provably contains, for every class with 0 < |D| <= X, at least one
 * reduced representative with a > 0 (the per-a extents are the reduced-
 * form bounds documented in class_enumeration.hpp, widened by 25% plus
 * a constant); canonicalize every irreducible primitive form in the box
 * whose discriminant lands in the window and collect the distinct
 * canonical quadruples. No reduced-form test and no class-minimum logic
 * is used, so this exercises a different path than the scan kernels.
 */

#include "sel3/forms.hpp"

#include <array>
#include <cmath>
#include <set>

namespace sel3::testing {

inline std::set<std::array<i64, 4>> oracle_classes(i64 X) {
    std::set<std::array<i64, 4>> out;
    const double x14_3 = std::pow(double(X) / 3.0, 0.25);
    const double x13_4 = std::cbrt(double(X) / 4.0);
    const double sqx = std::sqrt(double(X));
    const i64 amax = i64(1.25 * std::pow(16.0 * X / 27.0, 0.25)) + 5;
    for (i64 a = 1; a <= amax; ++a) {
        const double acbrt = std::cbrt(double(a));
        const i64 bneg = i64(1.5 * a + x14_3);
        const i64 bpos = i64(1.5 * a + 3.0 * std::sqrt(2.0 * sqx));
        const i64 bmax = i64(1.25 * std::max(bneg, bpos)) + 5;
        for (i64 b = -bmax; b <= bmax; ++b) {
            const i64 cneg = i64(0.75 * a + x13_4 / acbrt + x14_3);
            const i64 cpos = i64(std::max(double(b * b), sqx) / (3.0 * a)) + 1;
            const i64 cmax = i64(1.25 * std::max(cneg, cpos)) + 5;
            for (i64 c = -cmax; c <= cmax; ++c) {
                const i64 dneg =
                    i64(a * (0.5 + x14_3 / a) * (0.25 + x13_4 / (a * acbrt)));
                const i64 dpos = i64((std::abs(double(b * c)) + sqx) / (9.0 * a)) + 1;
                const i64 dmax = i64(1.25 * std::max(dneg, dpos)) + 5;
                for (i64 d = -dmax; d <= dmax; ++d) {
                    Cubic64 F{a, b, c, d};
                    i64 D = discriminant(F);
                    if (D == 0 || D > X || D < -X) continue;
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
                    BinaryCubicForm FF{Int(a), Int(b), Int(c), Int(d)};
                    if (!is_irreducible(FF)) continue;
                    Cubic64 canon = canonicalize_i64(F);
                    out.insert({canon.a, canon.b, canon.c, canon.d});
                }
            }
        }
    }
    return out;
}

}  // namespace sel3::testing

#endif
