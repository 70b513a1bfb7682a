#pragma once

#include <optional>

#include "psl2jac/interval.hpp"
#include "psl2jac/polyfp.hpp"
#include "psl2jac/ratfun.hpp"

namespace psl2jac {

// y^2 = x^3 + a x + b with coefficients in Q(alpha); nonsingular
struct ShortWeierstrass {
    RatFun a, b;
    ShortWeierstrass(RatFun a_, RatFun b_);
};

// 1728 * 4a^3 / (4a^3 + 27b^2); throws on singular curves
RatFun j_invariant(const RatFun& a, const RatFun& b);

// the coefficient -27*alpha / (4*(alpha - 1728)) shared by both non-leading
// terms of the CM cubic
RatFun hp_shared_coefficient();

// x^3 + c x + c for c = -27*alpha/(4*(alpha - 1728)) evaluated at a rational
// alpha != 1728
PolyQ build_hp(const BigRat& alpha);

// the p = 3 branch: x^3 - 2
PolyQ build_h3();

// Symbolic check in Q(alpha) that disc(x^3 + c x + c) = -4c^3 - 27c^2 equals
// 1458^2 alpha^2 / (alpha - 1728)^3.
bool hp_discriminant_identity();

enum class S3Verdict { S3, C3, Reducible, Inconclusive };

std::string to_string(S3Verdict v);

// Galois group of a squarefree cubic: S3 when certified irreducible with
// non-square discriminant, C3 when irreducible with square discriminant.
S3Verdict gal_s3_verdict(const PolyQ& h, int prime_budget = 120, uint64_t seed = 1);

// Certified evaluation of the modular j-function at (-1 + sqrt(-p))/2, the
// branch with positive imaginary part, via the q-expansion at the real
// point -exp(-pi sqrt(p)).
struct JNumeric {
    Interval value;
    unsigned precision_bits;
    double radius_log2;                      // certified: < -16
    std::optional<BigInt> integer_candidate; // midpoint within 1e-6 of an integer
    int terms_used;
};

// p prime with p = 3 mod 4, precision_bits >= 64; throws when the requested
// precision cannot certify the error bound
JNumeric j_from_tau(const BigInt& p, unsigned precision_bits);

// exact q-expansion coefficients of j: ser[0] = 1 (the 1/q term), ser[1] =
// 744, ser[k+1] = c_k; computed from the E4^3 / Delta formal series
std::vector<BigInt> j_q_expansion(int nterms);

}  // namespace psl2jac
