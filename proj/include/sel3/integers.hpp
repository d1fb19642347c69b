#ifndef SEL3_INTEGERS_HPP
#define SEL3_INTEGERS_HPP

/*
 * Shared integer machinery: arbitrary-precision aliases, exact square
 * roots, factorization by trial division, valuations, power-free tests
 * and a couple of sieves used by the counting code.
 *
 * Arbitrary precision is mandatory for form discriminants (quartic in
 * the coefficients); the enumeration kernels work in int64 with proven
 * coefficient bounds and convert at the API boundary.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sel3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i128 = __int128_t;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(i64 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Floor division / ceil division for possibly negative operands.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

inline i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 isqrt64(i64 n) {
    if (n < 0) throw std::domain_error("isqrt64: negative argument");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline i128 isqrt128(i128 n) {
    if (n < 0) throw std::domain_error("isqrt128: negative argument");
    if (n == 0) return 0;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}
inline bool is_square(i64 n) { return n >= 0 && isqrt64(n) * isqrt64(n) == n; }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline i64 pow_i64(i64 base, unsigned e) {
    i64 r = 1;
    while (e--) r *= base;
    return r;
}

// p-adic valuation of n != 0.
inline int valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of 0");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}
inline int valuation(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("valuation of 0");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline std::vector<u64> primes_up_to(u64 n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<u64> ps;
    for (u64 i = 2; i <= n; ++i) {
        if (!composite[i]) {
            ps.push_back(i);
            for (u64 j = i * i; j <= n; j += i) composite[j] = true;
        }
    }
    return ps;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial-division factorization; adequate for the desk-scale inputs here.
inline std::vector<std::pair<i64, int>> factor64(i64 n) {
    if (n == 0) throw std::domain_error("factor64(0)");
    std::vector<std::pair<i64, int>> fs;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fs.emplace_back(p, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

inline std::vector<i64> divisors64(i64 n) {
    auto fs = factor64(n);
    std::vector<i64> ds{1};
    for (auto [p, e] : fs) {
        size_t m = ds.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

inline bool is_squarefree64(i64 n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    if (n % 4 == 0) return false;
    for (i64 p = 3; p * p <= n; p += 2)
        if (n % (p * p) == 0) return false;
    return true;
}

// n free of k-th prime powers (n != 0).
inline bool is_kth_power_free(i64 n, int k) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (auto [p, e] : factor64(n))
        if (e >= k) return false;
    return true;
}

inline i64 squarefree_kernel64(i64 n) {
    if (n == 0) throw std::domain_error("squarefree_kernel64(0)");
    i64 s = sign(n);
    i64 k = 1;
    for (auto [p, e] : factor64(n))
        if (e & 1) k *= p;
    return s * k;
}

// flags[m] == 1 iff m is squarefree, for 0 <= m <= n (flags[0] = 0).
inline std::vector<std::uint8_t> squarefree_flags(i64 n) {
    std::vector<std::uint8_t> f(n + 1, 1);
    f[0] = 0;
    for (i64 p = 2; p * p <= n; ++p)
        for (i64 m = p * p; m <= n; m += p * p) f[m] = 0;
    return f;
}

inline i64 to_i64_checked(const Int& n, const char* what) {
    if (n > std::numeric_limits<i64>::max() || n < std::numeric_limits<i64>::min())
        throw std::length_error(std::string(what) + ": value exceeds 64-bit working range");
    return static_cast<i64>(n);
}

}  // namespace sel3

#endif
