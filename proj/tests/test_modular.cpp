#include <doctest.h>

#include "psl2jac/modular.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("modular");

TEST_CASE("j invariant knowns") {
    RatFun a(BigRat(-1)), zero(BigRat(0)), one(BigRat(1));
    CHECK(j_invariant(a, zero) == RatFun(BigRat(1728)));
    CHECK(j_invariant(zero, one) == RatFun(BigRat(0)));
    CHECK_THROWS_AS(j_invariant(zero, zero), std::domain_error);
    // curve with both coefficients equal to the CM cubic coefficient has
    // j-invariant exactly alpha
    RatFun c = hp_shared_coefficient();
    CHECK(j_invariant(c, c) == RatFun::alpha());
}

TEST_CASE("twist invariance of j") {
    Rng rng(31);
    RatFun a(PolyQ({BigRat(1), BigRat(2)}));  // 2x + 1 as a rational function
    RatFun b(PolyQ({BigRat(3), BigRat(0), BigRat(1)}));
    for (int i = 0; i < 20; ++i) {
        BigRat lam = make_rat(BigInt(rng.below(9)) + 1, BigInt(rng.below(4)) + 1);
        RatFun l4(lam * lam * lam * lam), l6(lam * lam * lam * lam * lam * lam);
        CHECK(j_invariant(a * l4, b * l6) == j_invariant(a, b));
    }
}

TEST_CASE("hp construction") {
    PolyQ h3 = build_h3();
    CHECK(h3 == PolyQ({BigRat(-2), BigRat(0), BigRat(0), BigRat(1)}));
    // golden: alpha = -32768 gives coefficient -3456/539
    PolyQ hp11 = build_hp(BigRat(-32768));
    CHECK(hp11.coeff(0) == make_rat(-3456, 539));
    CHECK(hp11.coeff(1) == make_rat(-3456, 539));
    CHECK(hp11.coeff(2) == 0);
    CHECK(hp11.coeff(3) == 1);
    CHECK_THROWS_AS(build_hp(BigRat(1728)), std::domain_error);
}

TEST_CASE("discriminant identity symbolically and at random points") {
    CHECK(hp_discriminant_identity());
    Rng rng(6);
    BigRat k(1458);
    int done = 0;
    while (done < 50) {
        BigRat aval = make_rat(BigInt(rng.below(100000)) - 50000, BigInt(rng.below(50)) + 1);
        if (aval == 1728) continue;
        BigRat closed = k * k * aval * aval / ((aval - 1728) * (aval - 1728) * (aval - 1728));
        CHECK(discriminant(build_hp(aval)) == closed);
        ++done;
    }
    // the two displayed sample points
    CHECK(discriminant(build_hp(BigRat(-32768))) ==
          make_rat(BigInt(-8707129344L), BigInt(156590819L)));
    BigRat at1 = k * k / BigRat((1 - 1728)) / BigRat((1 - 1728)) / BigRat((1 - 1728));
    CHECK(discriminant(build_hp(BigRat(1))) == at1);
}

TEST_CASE("s3 verdicts") {
    CHECK(gal_s3_verdict(build_h3()) == S3Verdict::S3);
    CHECK(gal_s3_verdict(PolyQ({BigRat(1), BigRat(-3), BigRat(0), BigRat(1)})) == S3Verdict::C3);
    CHECK(gal_s3_verdict(PolyQ({BigRat(0), BigRat(-1), BigRat(0), BigRat(1)})) == S3Verdict::Reducible);
    CHECK_THROWS_AS(gal_s3_verdict(PolyQ({BigRat(1), BigRat(0), BigRat(1)})), std::invalid_argument);
    // squarefree precondition
    CHECK_THROWS_AS(gal_s3_verdict(PolyQ({BigRat(0), BigRat(0), BigRat(0), BigRat(1)})),
                    std::invalid_argument);
}

TEST_CASE("hp cubics at the integral j values are S3") {
    // the verdict chain behind the CM exclusion
    for (long alpha : {-32768L, -884736L, -884736000L}) {
        PolyQ hp = build_hp(BigRat(alpha));
        CHECK(gal_s3_verdict(hp) == S3Verdict::S3);
        CHECK_FALSE(is_rational_square(discriminant(hp)));
    }
}

TEST_CASE("q-expansion coefficients") {
    auto ser = j_q_expansion(6);
    CHECK(ser[0] == 1);
    CHECK(ser[1] == 744);
    CHECK(ser[2] == 196884);
    CHECK(ser[3] == 21493760);
    CHECK(ser[4] == BigInt("864299970"));
    CHECK(ser[5] == BigInt("20245856256"));
}

TEST_CASE("j at CM points certifies the known integers") {
    struct Known {
        long p;
        const char* j;
    };
    for (auto [p, js] : {Known{3, "0"}, Known{11, "-32768"}, Known{19, "-884736"},
                         Known{43, "-884736000"}, Known{67, "-147197952000"},
                         Known{163, "-262537412640768000"}}) {
        auto jn = j_from_tau(BigInt(p), 256);
        CHECK(jn.radius_log2 < -16.0);
        REQUIRE(jn.integer_candidate.has_value());
        CHECK(*jn.integer_candidate == BigInt(js));
        CHECK(jn.value.contains(BigRat(BigInt(js))));
    }
}

TEST_CASE("candidate stable under precision doubling") {
    auto a = j_from_tau(BigInt(43), 128);
    auto b = j_from_tau(BigInt(43), 256);
    auto c = j_from_tau(BigInt(43), 512);
    REQUIRE(a.integer_candidate.has_value());
    CHECK(*a.integer_candidate == *b.integer_candidate);
    CHECK(*b.integer_candidate == *c.integer_candidate);
}

TEST_CASE("j is real and negative at these points") {
    for (long p : {11, 19, 43}) {
        auto jn = j_from_tau(BigInt(p), 128);
        CHECK(jn.value.is_negative());
    }
}

TEST_CASE("j_from_tau validation") {
    CHECK_THROWS_AS(j_from_tau(BigInt(13), 128), std::invalid_argument);  // 1 mod 4
    CHECK_THROWS_AS(j_from_tau(BigInt(15), 128), std::invalid_argument);  // composite
    CHECK_THROWS_AS(j_from_tau(BigInt(11), 32), std::invalid_argument);   // precision too low
}

TEST_SUITE_END();
