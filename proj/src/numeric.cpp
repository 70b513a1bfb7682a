#include "psl2jac/numeric.hpp"

namespace psl2jac {

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const BigRat& r) {
    if (r < 0) return false;
    return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Witness set deterministic for all n < 2^64 (Sinclair/Jaeschke-style set).
constexpr uint64_t kMrWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : kMrWitnesses) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("is_prime: negative input");
    if (!n.fits_ulong_p() && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::domain_error("is_prime: input >= 2^64 rejected (deterministic range only)");
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
}

uint64_t next_prime_u64(uint64_t n) {
    uint64_t c = n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

bool is_prime_power_u64(uint64_t q, uint64_t* p_out, unsigned* k_out) {
    if (q < 2) return false;
    // smallest prime factor by trial division; q in this toolkit is small
    uint64_t p = 0;
    if (q % 2 == 0) {
        p = 2;
    } else {
        for (uint64_t d = 3; d * d <= q; d += 2) {
            if (q % d == 0) { p = d; break; }
        }
        if (p == 0) p = q;  // q itself prime
    }
    unsigned k = 0;
    uint64_t m = q;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

uint64_t pow_u64_checked(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("pow_u64 overflow");
        r *= base;
    }
    return r;
}

}  // namespace psl2jac
