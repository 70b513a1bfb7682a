#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace psl2jac {

// Exact scalar types. GMP canonical forms match our invariants: integers are
// sign+magnitude with no leading zero limbs, rationals are always reduced
// with positive denominator.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt numerator(const BigRat& r) { return r.get_num(); }
inline BigInt denominator(const BigRat& r) { return r.get_den(); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat parse_rat(const std::string& s) {
    BigRat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

bool is_perfect_square(const BigInt& n);
// true iff r is the square of a rational
bool is_rational_square(const BigRat& r);

// Deterministic Miller-Rabin for 0 <= n < 2^64.
bool is_prime_u64(uint64_t n);

// Deterministic primality for n < 2^64 via a fixed Miller-Rabin witness set.
// Larger inputs are rejected: nothing in this toolkit needs them and we do
// not give probabilistic answers.
bool is_prime(const BigInt& n);

uint64_t next_prime_u64(uint64_t n);  // smallest prime > n

// q = p^k with p prime, k >= 1. Returns false for 0, 1 and non-prime-powers.
bool is_prime_power_u64(uint64_t q, uint64_t* p_out = nullptr, unsigned* k_out = nullptr);

uint64_t pow_u64_checked(uint64_t base, unsigned exp);  // throws on overflow

// Deterministic seedable generator (splitmix64): bit-identical sequences on
// every platform, unlike std:: distributions.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n), n > 0
    uint64_t below(uint64_t n) {
        uint64_t threshold = -n % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

  private:
    uint64_t state_;
};

}  // namespace psl2jac
