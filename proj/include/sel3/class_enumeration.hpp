#ifndef SEL3_CLASS_ENUMERATION_HPP
#define SEL3_CLASS_ENUMERATION_HPP

/*
 * Enumeration of GL2(Z)-classes of irreducible primitive binary cubic
 * forms with discriminant in a window (xi, eta), one representative per
 * class.
 *
 * The scan visits every reduced form with positive leading coefficient
 * inside the window and keeps exactly those that are the lexicographic
 * minimum of their class (computable locally from the +-1 substitution
 * neighbourhood, see forms.hpp). Coefficient bounds for the scan:
 *
 * D < 0, |D| <= X, reduced (a > 0, |s| < 1 < t). Writing
 * F = a (x - theta y)(x^2 + s x y + t y^2), the factorization gives
 *   |D| = 4 a^4 q(theta)^2 (t - s^2/4),  q(theta) = (theta+s/2)^2 + (t - s^2/4),
 * and q(theta) >= t - s^2/4 >= 3/4, hence
 *   a <= (16 X / 27)^{1/4}
 *   t <= 1/4 + (X/4)^{1/3} a^{-4/3}
 *   |theta| <= 1/2 + (X/3)^{1/4} / a
 *   |b| = a|s - theta|      <= 3a/2 + (X/3)^{1/4}
 *   |c| = a|t - theta s|    <= 3a/4 + (X/4)^{1/3} a^{-1/3} + (X/3)^{1/4}
 *   |d| = a|theta| t        <= a (1/2 + (X/3)^{1/4}/a)(1/4 + (X/4)^{1/3} a^{-4/3}).
 *
 * D > 0, D <= X, Hessian (P, Q, R) reduced. Then 3P^2 <= 4PR - Q^2 = 3D
 * so P <= sqrt(D). With the real roots theta_k of F and weights
 * w_k = (theta_i - theta_j)^2 (complementary pair), the Hessian is
 * (a^2/2) sum_k w_k (x - theta_k y)^2, so |Q| <= P bounds the weighted
 * root mean by 1/2 and P bounds the spread: |theta_k| <= 1/2 + sqrt(2P)/a.
 * Combined with P >= (3/2) a^{2/3} D^{1/3} (arithmetic-geometric mean on
 * the w_k, using D = a^4 w_1 w_2 w_3):
 *   a <= (2/3)^{3/2} X^{1/4}
 *   |b| <= 3a/2 + 3 sqrt(2 P)            (P <= sqrt(X))
 *   c in [(b^2 - sqrt(X))/(3a), (b^2 - 1)/(3a)]   (1 <= P = b^2 - 3ac)
 *   d in [(bc - P)/(9a), (bc + P)/(9a)]           (|Q| = |bc - 9ad| <= P).
 *
 * All loop bounds carry a +2 safety margin; membership of every
 * candidate is decided by the exact reduction tests, so the margins
 * only cost time. Everything fits int64 for |D| <= 10^8, which is the
 * enforced window budget.
 */

#include "sel3/forms.hpp"
#include "sel3/integers.hpp"
#include "sel3/local_conditions.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

namespace sel3 {

enum class FormFilter { All, U, V, VPrime };

struct ClassEnumerationRequest {
    Int disc_min;                       // open window (disc_min, disc_max)
    Int disc_max;
    FormFilter filter = FormFilter::All;
    i64 window_budget = 100'000'000;    // max |D| the int64 kernels accept
    int jobs = 1;
};

namespace detail {

inline bool passes_filter(const Cubic64& F, i64 D, FormFilter filter) {
    if (filter == FormFilter::All) return true;
    DiscFactors df(D);
    switch (filter) {
        case FormFilter::V: return class_in_V(D, df);
        case FormFilter::VPrime: return class_in_Vprime(D, df);
        case FormFilter::U: return class_in_U(F, D, df);
        default: return true;
    }
}

// Lexicographic minimum over the reduced, positive-leading-coefficient
// members of the class of a reduced form F. early_reject: stop as soon
// as some member is smaller than F itself.
inline bool is_class_minimum(const Cubic64& F, i64 D) {
    for (const Mat64& m : unimodular_radius1()) {
        Cubic64 g = act(m, F);
        if (g.a <= 0) continue;
        if (!(g < F)) continue;
        if (D > 0 ? is_reduced_positive(g) : is_reduced_negative(g)) return false;
    }
    return true;
}

template <class Fn>
void scan_negative(i64 lo, i64 hi, i64 a_from, i64 a_to, Fn&& emit) {
    // window (lo, hi) with hi <= 0; X = |lo|
    if (lo >= -1) return;
    const double X = double(-lo);
    const double x14_3 = std::pow(X / 3.0, 0.25);
    const double x13_4 = std::cbrt(X / 4.0);
    const i64 amax = i64(std::pow(16.0 * X / 27.0, 0.25)) + 2;
    for (i64 a = std::max<i64>(1, a_from); a < std::min(a_to, amax + 1); ++a) {
        const i64 bmax = i64(1.5 * a + x14_3) + 2;
        const double acbrt = std::cbrt(double(a));
        const i64 cmax = i64(0.75 * a + x13_4 / acbrt + x14_3) + 2;
        const i64 dmax = i64(a * (0.5 + x14_3 / a) * (0.25 + x13_4 / (a * acbrt))) + 2;
        for (i64 b = -bmax; b <= bmax; ++b) {
            for (i64 c = -cmax; c <= cmax; ++c) {
                // D(d) = -27 a^2 d^2 + L d + M0 >= lo+1 restricts d to a segment
                const i64 L = 18 * a * b * c - 4 * b * b * b;
                const i64 M0 = b * b * c * c - 4 * c * c * c * a;
                i64 dlo = -dmax, dhi = dmax;
                {
                    // D(d) >= lo+1 <=> 27 a^2 d^2 - L d + (lo+1-M0) <= 0;
                    // prune d to a slightly widened root segment (the
                    // per-d window test below remains authoritative).
                    const i128 k = i128(27) * a * a;
                    const i128 disc_q = i128(L) * L + 4 * k * (i128(M0) - (lo + 1));
                    if (disc_q < 0) continue;
                    const i128 s = isqrt128(disc_q);
                    dlo = std::max<i64>(dlo, i64(floor_div128(i128(L) - s, 2 * k)) - 1);
                    dhi = std::min<i64>(dhi, i64(floor_div128(i128(L) + s, 2 * k)) + 1);
                }
                Cubic64 F{a, b, c, 0};
                for (i64 d = dlo; d <= dhi; ++d) {
                    const i64 D = -27 * a * a * d * d + L * d + M0;
                    if (D <= lo || D >= hi || D >= 0) continue;
                    F.d = d;
                    if (!is_reduced_negative(F)) continue;
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
                    if (!is_class_minimum(F, D)) continue;
                    if (!is_irreducible_i64(F)) continue;
                    emit(F, D);
                }
            }
        }
    }
}

template <class Fn>
void scan_positive(i64 lo, i64 hi, i64 a_from, i64 a_to, Fn&& emit) {
    // window (lo, hi) with lo >= 0; X = hi - 1
    if (hi <= 1) return;
    const i64 X = hi - 1;
    const i64 Pmax = isqrt64(X);
    const i64 amax = i64(std::pow(2.0 / 3.0, 1.5) * std::pow(double(X), 0.25)) + 2;
    for (i64 a = std::max<i64>(1, a_from); a < std::min(a_to, amax + 1); ++a) {
        const i64 bmax = i64(1.5 * a + 3.0 * std::sqrt(2.0 * Pmax)) + 2;
        for (i64 b = -bmax; b <= bmax; ++b) {
            const i64 clo = ceil_div(b * b - Pmax, 3 * a);
            const i64 chi = floor_div(b * b - 1, 3 * a);
            for (i64 c = clo; c <= chi; ++c) {
                const i64 P = b * b - 3 * a * c;
                if (P < 1 || P > Pmax) continue;
                const i64 dlo = ceil_div(b * c - P, 9 * a);
                const i64 dhi = floor_div(b * c + P, 9 * a);
                Cubic64 F{a, b, c, 0};
                for (i64 d = dlo; d <= dhi; ++d) {
                    const i64 Q = b * c - 9 * a * d;
                    if (Q > P || Q < -P) continue;
                    const i64 R = c * c - 3 * b * d;
                    if (R < P) continue;
                    const i64 D = -27 * a * a * d * d + (18 * a * b * c - 4 * b * b * b) * d +
                                  (b * b * c * c - 4 * c * c * c * a);
                    if (D <= lo || D >= hi || D <= 0) continue;
                    F.d = d;
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
                    if (!is_class_minimum(F, D)) continue;
                    if (!is_irreducible_i64(F)) continue;
                    emit(F, D);
                }
            }
        }
    }
}

template <class Fn>
void scan_window(i64 lo, i64 hi, i64 a_from, i64 a_to, Fn&& emit) {
    if (lo < 0) scan_negative(lo, std::min<i64>(hi, 0), a_from, a_to, emit);
    if (hi > 0) scan_positive(std::max<i64>(lo, 0), hi, a_from, a_to, emit);
}

struct WindowI64 {
    i64 lo, hi;
};

inline WindowI64 checked_window(const ClassEnumerationRequest& req) {
    if (req.disc_min >= req.disc_max)
        throw std::invalid_argument("enumeration window is empty");
    if (req.disc_min < -Int(req.window_budget) || req.disc_max > Int(req.window_budget))
        throw std::length_error("enumeration window exceeds the coefficient-bound budget");
    return {to_i64_checked(req.disc_min, "window"), to_i64_checked(req.disc_max, "window")};
}

// Deterministic partition by leading coefficient; the class minima do
// not depend on the partition, so neither does the union of outputs.
template <class Fn>
void run_partitioned(const WindowI64& w, int jobs, Fn&& worker) {
    const i64 amax =
        std::max(i64(std::pow(16.0 * double(std::max<i64>(-w.lo, 1)) / 27.0, 0.25)),
                 i64(std::pow(2.0 / 3.0, 1.5) * std::pow(double(std::max<i64>(w.hi, 1)), 0.25))) +
        3;
    if (jobs <= 1) {
        worker(0, i64(1), amax + 1);
        return;
    }
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs; ++j) {
        i64 a0 = 1 + (amax * j) / jobs;
        i64 a1 = 1 + (amax * (j + 1)) / jobs;
        if (j == jobs - 1) a1 = amax + 1;
        ts.emplace_back([&worker, j, a0, a1] { worker(j, a0, a1); });
    }
    for (auto& t : ts) t.join();
}

}  // namespace detail

/*
 * One canonical representative per class with D in (disc_min, disc_max)
 * satisfying the filter, sorted by (D, a, b, c, d).
 */
inline std::vector<BinaryCubicForm> enumerate_classes(const ClassEnumerationRequest& req) {
    auto w = detail::checked_window(req);
    const int jobs = std::max(1, req.jobs);
    std::vector<std::vector<std::pair<Cubic64, i64>>> found(jobs);
    detail::run_partitioned(w, jobs, [&](int j, i64 a0, i64 a1) {
        detail::scan_window(w.lo, w.hi, a0, a1, [&](const Cubic64& F, i64 D) {
            if (detail::passes_filter(F, D, req.filter)) found[j].emplace_back(F, D);
        });
    });
    std::vector<std::pair<Cubic64, i64>> all;
    for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        return std::tie(x.second, x.first) < std::tie(y.second, y.first);
    });
    std::vector<BinaryCubicForm> out;
    out.reserve(all.size());
    for (auto& [F, D] : all)
        out.push_back(BinaryCubicForm{Int(F.a), Int(F.b), Int(F.c), Int(F.d)});
    return out;
}

// N(xi, eta, S): number of classes in the window satisfying the filter.
inline u64 count_classes(const Int& xi, const Int& eta, FormFilter filter, int jobs = 1) {
    ClassEnumerationRequest req{xi, eta, filter, 100'000'000, jobs};
    auto w = detail::checked_window(req);
    std::vector<u64> counts(std::max(1, jobs), 0);
    detail::run_partitioned(w, req.jobs, [&](int j, i64 a0, i64 a1) {
        detail::scan_window(w.lo, w.hi, a0, a1, [&](const Cubic64& F, i64 D) {
            if (detail::passes_filter(F, D, filter)) ++counts[j];
        });
    });
    u64 total = 0;
    for (u64 c : counts) total += c;
    return total;
}

// Per-discriminant class counts over the window (for batch queries).
inline std::unordered_map<i64, u32> count_classes_by_disc(const Int& xi, const Int& eta,
                                                          FormFilter filter, int jobs = 1) {
    ClassEnumerationRequest req{xi, eta, filter, 100'000'000, jobs};
    auto w = detail::checked_window(req);
    std::vector<std::unordered_map<i64, u32>> maps(std::max(1, jobs));
    detail::run_partitioned(w, req.jobs, [&](int j, i64 a0, i64 a1) {
        detail::scan_window(w.lo, w.hi, a0, a1, [&](const Cubic64& F, i64 D) {
            if (detail::passes_filter(F, D, filter)) ++maps[j][D];
        });
    });
    std::unordered_map<i64, u32> out;
    for (auto& m : maps)
        for (auto& [D, n] : m) out[D] += n;
    return out;
}

}  // namespace sel3

#endif
