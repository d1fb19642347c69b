#include <catch2/catch_amalgamated.hpp>

#include "sel3/local_conditions.hpp"

#include <random>

using namespace sel3;
using K = LocalSetId::Kind;

namespace {

std::mt19937_64 rng(0xFEED);

Cubic64 random_primitive_mod(i64 p) {
    std::uniform_int_distribution<i64> co(-50, 50);
    while (true) {
        Cubic64 F{co(rng), co(rng), co(rng), co(rng)};
        if (F.a % p || F.b % p || F.c % p || F.d % p) return F;
    }
}

}  // namespace

TEST_CASE("splitting symbols on fixed forms") {
    CHECK(splitting_symbol(Cubic64{0, 1, 1, 0}, 5) == SplittingSymbol::S111);
    CHECK(splitting_symbol(Cubic64{1, 0, -1, 1}, 2) == SplittingSymbol::S3);
    CHECK(splitting_symbol(Cubic64{1, 0, 0, 0}, 7) == SplittingSymbol::S13);
    CHECK(splitting_symbol(Cubic64{0, 1, 0, 0}, 5) == SplittingSymbol::S121);
    // x (x^2 + xy + y^2): -3 is not a square mod 5
    CHECK(splitting_symbol(Cubic64{1, 1, 1, 0}, 5) == SplittingSymbol::S12);
    // (x + y)(x^2 + y^2): -1 is a square mod 5, so this splits fully
    CHECK(splitting_symbol(Cubic64{1, 1, 1, 1}, 5) == SplittingSymbol::S111);
    CHECK(splitting_symbol(Cubic64{1, 1, 1, 1}, 3) == SplittingSymbol::S12);
    CHECK_THROWS_AS(splitting_symbol(Cubic64{5, 10, 0, 5}, 5), std::invalid_argument);
}

TEST_CASE("V_p membership") {
    CHECK(in_vp(Cubic64{1, -1, 0, 1}, 5));        // 25 does not divide -23
    CHECK_FALSE(in_vp(Cubic64{1, 0, 0, 1}, 3));   // 9 | -27
    CHECK(in_vp(Cubic64{1, -1, 0, 1}, 2));        // -23 = 1 mod 4
}

TEST_CASE("U_p membership") {
    CHECK(in_up(Cubic64{1, 0, 0, 5}, 5));
    CHECK_FALSE(in_up(Cubic64{1, 0, 0, 25}, 5));
    // V_p implies U_p
    for (int i = 0; i < 50; ++i) {
        for (i64 p : {2, 3, 5}) {
            Cubic64 F = random_primitive_mod(p);
            if (in_vp(F, p)) CHECK(in_up(F, p));
        }
    }
}

TEST_CASE("exhaustive and root-based U_p lift tests agree") {
    for (i64 p : {2, 3, 5, 7}) {
        int seen = 0;
        while (seen < 40) {
            Cubic64 F = random_primitive_mod(p);
            if (splitting_symbol(F, p) != SplittingSymbol::S13) continue;
            ++seen;
            CAPTURE(p, F.a, F.b, F.c, F.d);
            CHECK(up_lift_exhaustive(F, p) == up_lift_at_root(F, p));
        }
    }
}

TEST_CASE("V'_p membership") {
    CHECK(in_vp_prime(Cubic64{1, -1, 0, 1}, 2));        // D = -23 odd
    CHECK_FALSE(in_vp_prime(Cubic64{1, -1, 0, 1}, 3));  // 3 does not divide -23
    for (int i = 0; i < 200; ++i) {
        Cubic64 F = random_primitive_mod(5);
        CHECK(in_vp_prime(F, 5) == in_vp(F, 5));
        if (F.a % 7 || F.b % 7 || F.c % 7 || F.d % 7)
            CHECK(in_vp_prime(F, 7) == in_vp(F, 7));
    }
}

TEST_CASE("densities of the five symbols") {
    for (i64 p : {2, 3, 5}) {
        CHECK(local_density({K::T111, p}) == Rat(Int(p) * (p - 1), 6 * (Int(p) * p + 1)));
        CHECK(local_density({K::T12, p}) == Rat(Int(p) * (p - 1), 2 * (Int(p) * p + 1)));
        CHECK(local_density({K::T3, p}) == Rat(Int(p) * (p - 1), 3 * (Int(p) * p + 1)));
        CHECK(local_density({K::T121, p}) == Rat(Int(p), Int(p) * p + 1));
        CHECK(local_density({K::T13, p}) == Rat(Int(1), Int(p) * p + 1));
    }
}

TEST_CASE("symbol densities partition the space") {
    for (i64 p : {2, 3, 5}) {
        Rat sum = local_density({K::T111, p}) + local_density({K::T12, p}) +
                  local_density({K::T3, p}) + local_density({K::T121, p}) +
                  local_density({K::T13, p});
        CHECK(sum == Rat(1));
    }
}

TEST_CASE("densities of V and U") {
    CHECK(local_density({K::V, 2}) == Rat(3, 5));
    CHECK(local_density({K::U, 2}) == Rat(7, 10));
    CHECK(local_density({K::V, 3}) == Rat(4, 5));
    CHECK(local_density({K::V, 5}) == Rat(12, 13));
    CHECK(local_density({K::U, 5}) == Rat(62, 65));
}

TEST_CASE("densities of V' at 2 and 3") {
    CHECK(local_density({K::VPrime, 2}) == Rat(2, 5));
    CHECK(local_density({K::VPrime, 3}) == Rat(1, 5));
}

TEST_CASE("density budget") {
    CHECK_THROWS_AS(local_density({K::V, 101}), std::length_error);
}

TEST_CASE("local predicates are class invariants") {
    std::uniform_int_distribution<i64> ks(-3, 3);
    for (int i = 0; i < 100; ++i) {
        Cubic64 F = random_primitive_mod(2);
        Mat64 M{1, ks(rng), 0, 1};
        if (i % 2) M = M * Mat64{0, -1, 1, 0};
        Cubic64 G = act(M, F);
        for (i64 p : {2, 3, 5}) {
            bool okF = (F.a % p) || (F.b % p) || (F.c % p) || (F.d % p);
            bool okG = (G.a % p) || (G.b % p) || (G.c % p) || (G.d % p);
            if (!okF || !okG) continue;
            CHECK(splitting_symbol(F, p) == splitting_symbol(G, p));
            CHECK(in_vp(F, p) == in_vp(G, p));
            CHECK(in_up(F, p) == in_up(G, p));
            CHECK(in_vp_prime(F, p) == in_vp_prime(G, p));
        }
    }
}

TEST_CASE("Phi counts are multiplicative") {
    // direct counts modulo 4, 36, 100; inclusion-exclusion modulo 216
    auto direct = [](i64 m, std::vector<i64> ps) {
        i64 n = 0;
        for (i64 a = 0; a < m; ++a)
            for (i64 b = 0; b < m; ++b)
                for (i64 c = 0; c < m; ++c)
                    for (i64 d = 0; d < m; ++d) {
                        bool prim = true;
                        for (i64 p : ps)
                            if (a % p == 0 && b % p == 0 && c % p == 0 && d % p == 0)
                                prim = false;
                        if (prim) ++n;
                    }
        return Int(n);
    };
    CHECK(direct(4, {2}) == phi_count(2, 2));
    CHECK(direct(36, {2, 3}) == phi_count(2, 2) * phi_count(3, 2));
    CHECK(direct(100, {2, 5}) == phi_count(2, 2) * phi_count(5, 2));
    // #Phi(216) = 216^4 - 108^4 - 72^4 + 36^4
    Int ie = int_pow(Int(216), 4) - int_pow(Int(108), 4) - int_pow(Int(72), 4) +
             int_pow(Int(36), 4);
    CHECK(ie == phi_count(2, 3) * phi_count(3, 3));
}
