#include <doctest.h>

#include "psl2jac/polyfp.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("polyfp");

TEST_CASE("degree patterns of x^2 + 1") {
    PolyQ f({BigRat(1), BigRat(0), BigRat(1)});
    CHECK(factor_degrees_mod_p(f, 5).degs == std::vector<int>{1, 1});  // 2^2 = -1 mod 5
    CHECK(factor_degrees_mod_p(f, 3).degs == std::vector<int>{2});     // -1 non-residue
    CHECK_THROWS_AS(factor_degrees_mod_p(f, 2), BadPrimeError);        // (x+1)^2 mod 2
}

TEST_CASE("bad primes") {
    // denominator and leading-coefficient handling go through the primitive
    // integer form: 263/270 x + 1 clears to 263 x + 270
    PolyQ f({BigRat(1), make_rat(263, 270)});
    CHECK_THROWS_AS(reduce_mod_p(f, 263), BadPrimeError);
    CHECK_NOTHROW(reduce_mod_p(f, 2));  // 270 is divisible by 2, the lc is not
    CHECK_THROWS_AS(reduce_mod_p(f, 4), std::invalid_argument);
}

TEST_CASE("full factorization multiplies back") {
    Rng seed_rng(11);
    for (uint64_t p : {3ULL, 5ULL, 13ULL, 2ULL}) {
        PrimeField F(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<uint64_t> c(1 + seed_rng.below(9));
            for (auto& v : c) v = seed_rng.below(p);
            c.push_back(1 + seed_rng.below(p - 1));
            PolyFp f(F, c);
            if (f.degree() < 1) continue;
            if (polyfp_gcd(f, f.derivative()).degree() != 0) continue;  // squarefree only
            Rng rng(trial);
            auto factors = factor_squarefree(f, rng);
            PolyFp prod = PolyFp::constant(F, f.lc());
            int degsum = 0;
            for (const auto& g : factors) {
                prod = prod * g;
                degsum += g.degree();
            }
            CHECK(prod == f);
            CHECK(degsum == f.degree());
        }
    }
}

TEST_CASE("equal-degree split is seed independent in its pattern") {
    // x^4 + 1 factors into quadratics mod 3
    PolyQ f({BigRat(1), BigRat(0), BigRat(0), BigRat(0), BigRat(1)});
    auto p1 = factor_degrees_mod_p(f, 3, 1);
    auto p2 = factor_degrees_mod_p(f, 3, 999);
    CHECK(p1 == p2);
    CHECK(p1.degs == std::vector<int>{2, 2});
}

TEST_CASE("irreducibility certificates") {
    PolyQ x2p1({BigRat(1), BigRat(0), BigRat(1)});
    auto r = irreducible_over_Q(x2p1);
    CHECK(r.kind == IrreducibilityResult::Kind::Certified);
    CHECK(r.certified_prime == 3);

    PolyQ x2m1({BigRat(-1), BigRat(0), BigRat(1)});
    auto r2 = irreducible_over_Q(x2m1);
    CHECK(r2.kind == IrreducibilityResult::Kind::Reducible);
    REQUIRE(r2.rational_root.has_value());
    CHECK(x2m1.eval(*r2.rational_root) == 0);

    // rational root with denominator: 2x - 1 times x^2 + x + 1
    PolyQ g = PolyQ({BigRat(-1), BigRat(2)}) * PolyQ({BigRat(1), BigRat(1), BigRat(1)});
    auto r3 = irreducible_over_Q(g);
    CHECK(r3.kind == IrreducibilityResult::Kind::Reducible);
    CHECK(*r3.rational_root == make_rat(1, 2));

    PolyQ cubic({BigRat(1), BigRat(-3), BigRat(0), BigRat(1)});  // x^3 - 3x + 1
    auto r4 = irreducible_over_Q(cubic);
    CHECK(r4.kind == IrreducibilityResult::Kind::Certified);
    CHECK(r4.certified_prime == 2);  // irreducible mod 2

    CHECK_THROWS_AS(irreducible_over_Q(PolyQ({BigRat(1), BigRat(1)})), std::invalid_argument);
}

TEST_CASE("shape sieve") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(12).size() == 77);
    CHECK(pattern_refines_shape({6, 6}, {12}));
    CHECK(pattern_refines_shape({6, 6}, {6, 6}));
    CHECK_FALSE(pattern_refines_shape({6, 6}, {11, 1}));
    CHECK_FALSE(pattern_refines_shape({11, 1}, {6, 6}));
    CHECK(pattern_refines_shape({3, 2, 2, 1}, {5, 3}));
    CHECK_FALSE(pattern_refines_shape({3, 3}, {1, 1, 1, 1, 1, 1}));
}

TEST_CASE("powmod") {
    PrimeField F(7);
    PolyFp mod(F, {1, 0, 1});  // x^2 + 1
    PolyFp x = PolyFp::x(F);
    PolyFp r = polyfp_powmod(x, BigInt(49), mod);
    // x^49 = x^(48) * x = ((x^2)^24) x = (-1)^24 x = x mod (x^2+1)
    CHECK(r == x % mod);
}

TEST_SUITE_END();
