#include <doctest.h>

#include "psl2jac/numeric.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("primality basics") {
    CHECK(is_prime(BigInt(2)));
    CHECK_FALSE(is_prime(BigInt(91)));  // 7 * 13
    CHECK(is_prime(BigInt(163)));
    CHECK_FALSE(is_prime(BigInt(0)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(18446744073709551555ULL));
}

TEST_CASE("large inputs rejected") {
    BigInt big = BigInt(1) << 64;
    CHECK_THROWS_AS(is_prime(big), std::domain_error);
    CHECK_THROWS_AS(is_prime(big + 1), std::domain_error);
    CHECK_NOTHROW(is_prime(big - 1));
    CHECK_THROWS_AS(is_prime(BigInt(-5)), std::invalid_argument);
}

TEST_CASE("prime powers") {
    uint64_t p;
    unsigned k;
    CHECK(is_prime_power_u64(27, &p, &k));
    CHECK(p == 3);
    CHECK(k == 3);
    CHECK(is_prime_power_u64(2));
    CHECK(is_prime_power_u64(1024));
    CHECK_FALSE(is_prime_power_u64(1));
    CHECK_FALSE(is_prime_power_u64(15));
    CHECK_FALSE(is_prime_power_u64(21));
    CHECK_FALSE(is_prime_power_u64(0));
}

TEST_CASE("rational inverse product is one") {
    Rng rng(42);
    for (int i = 0; i < 2000; ++i) {
        BigInt n = BigInt(rng.below(1000000)) - 500000;
        BigInt d = BigInt(rng.below(1000000)) + 1;
        if (n == 0) continue;
        BigRat r = make_rat(n, d);
        BigRat inv = make_rat(d, n);
        CHECK(r * inv == 1);
    }
}

TEST_CASE("canonical form is idempotent") {
    BigRat r = make_rat(BigInt(-44), BigInt(-121));
    CHECK(r.get_num() == 4);
    CHECK(r.get_den() == 11);
    BigRat again = make_rat(numerator(r), denominator(r));
    CHECK(again == r);
    CHECK(denominator(parse_rat("6/-4")) > 0);
}

TEST_CASE("squares") {
    CHECK(is_perfect_square(BigInt(0)));
    CHECK(is_perfect_square(BigInt(144)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
    CHECK(is_rational_square(make_rat(4, 9)));
    CHECK_FALSE(is_rational_square(make_rat(-4, 9)));
    CHECK_FALSE(is_rational_square(make_rat(4, 7)));
}

TEST_CASE("rng determinism") {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    CHECK(c.below(10) < 10);
}

TEST_SUITE_END();
