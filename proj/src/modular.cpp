#include "psl2jac/modular.hpp"

#include <cmath>

namespace psl2jac {

ShortWeierstrass::ShortWeierstrass(RatFun a_, RatFun b_) : a(std::move(a_)), b(std::move(b_)) {
    RatFun disc = RatFun(BigRat(4)) * a.pow(3) + RatFun(BigRat(27)) * b.pow(2);
    if (disc.is_zero()) throw std::domain_error("singular curve: 4a^3 + 27b^2 = 0");
}

RatFun j_invariant(const RatFun& a, const RatFun& b) {
    RatFun four_a3 = RatFun(BigRat(4)) * a.pow(3);
    RatFun denom = four_a3 + RatFun(BigRat(27)) * b.pow(2);
    if (denom.is_zero()) throw std::domain_error("singular curve: 4a^3 + 27b^2 = 0");
    return RatFun(BigRat(1728)) * four_a3 / denom;
}

RatFun hp_shared_coefficient() {
    RatFun alpha = RatFun::alpha();
    return RatFun(BigRat(-27)) * alpha / (RatFun(BigRat(4)) * (alpha - RatFun(BigRat(1728))));
}

PolyQ build_hp(const BigRat& alpha) {
    if (alpha == 1728) throw std::domain_error("build_hp: alpha = 1728 is a pole");
    BigRat c = BigRat(-27) * alpha / (BigRat(4) * (alpha - 1728));
    return PolyQ({c, c, BigRat(0), BigRat(1)});
}

PolyQ build_h3() { return PolyQ({BigRat(-2), BigRat(0), BigRat(0), BigRat(1)}); }

bool hp_discriminant_identity() {
    RatFun c = hp_shared_coefficient();
    RatFun disc = RatFun(BigRat(-4)) * c.pow(3) - RatFun(BigRat(27)) * c.pow(2);
    RatFun alpha = RatFun::alpha();
    BigRat k(1458);
    RatFun rhs = RatFun(k * k) * alpha.pow(2) / (alpha - RatFun(BigRat(1728))).pow(3);
    return disc == rhs;
}

std::string to_string(S3Verdict v) {
    switch (v) {
        case S3Verdict::S3: return "S3";
        case S3Verdict::C3: return "C3";
        case S3Verdict::Reducible: return "reducible";
        case S3Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

S3Verdict gal_s3_verdict(const PolyQ& h, int prime_budget, uint64_t seed) {
    if (h.degree() != 3) throw std::invalid_argument("gal_s3_verdict: cubic required");
    if (!is_squarefree(h)) throw std::invalid_argument("gal_s3_verdict: squarefree cubic required");
    auto irr = irreducible_over_Q(h, prime_budget, seed);
    switch (irr.kind) {
        case IrreducibilityResult::Kind::Reducible:
            return S3Verdict::Reducible;
        case IrreducibilityResult::Kind::Inconclusive:
            return S3Verdict::Inconclusive;
        case IrreducibilityResult::Kind::Certified:
            return is_rational_square(discriminant(h)) ? S3Verdict::C3 : S3Verdict::S3;
    }
    return S3Verdict::Inconclusive;
}

namespace {

BigInt sigma3(int n) {
    BigInt s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += BigInt(d) * d * d;
    return s;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, size_t n) {
    std::vector<BigInt> out(n, BigInt(0));
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> e4_series(int nterms) {
    std::vector<BigInt> e4(nterms, BigInt(0));
    e4[0] = 1;
    for (int n = 1; n < nterms; ++n) e4[n] = BigInt(240) * sigma3(n);
    return e4;
}

// coefficients of prod_{n>=1} (1 - q^n)^24, truncated
std::vector<BigInt> delta_product_series(int nterms) {
    std::vector<BigInt> prod(nterms, BigInt(0));
    prod[0] = 1;
    for (int n = 1; n < nterms; ++n) {
        // multiply by (1 - q^n)^24
        std::vector<BigInt> factor(nterms, BigInt(0));
        BigInt binom = 1;
        for (int i = 0; i * n < nterms && i <= 24; ++i) {
            factor[i * n] = (i % 2 == 0) ? binom : -binom;
            binom = binom * (24 - i) / (i + 1);
        }
        prod = convolve(prod, factor, nterms);
    }
    return prod;
}

}  // namespace

std::vector<BigInt> j_q_expansion(int nterms) {
    if (nterms < 1) throw std::invalid_argument("j_q_expansion: need at least one term");
    auto e4 = e4_series(nterms);
    auto e4sq = convolve(e4, e4, nterms);
    auto e4cube = convolve(e4sq, e4, nterms);
    auto prod = delta_product_series(nterms);
    // series division by prod (leading coefficient 1)
    std::vector<BigInt> ser(nterms, BigInt(0));
    for (int n = 0; n < nterms; ++n) {
        BigInt acc = e4cube[n];
        for (int i = 1; i <= n; ++i) acc -= prod[i] * ser[n - i];
        ser[n] = acc;
    }
    return ser;
}

namespace {

// rigorous enclosure of j at a real point x with |x| <= exp(-pi) via
// E4(x)^3 / Delta(x); series tails are bounded by sigma3(n) <= n^4 and the
// logarithm of the remaining Delta product factors
Interval j_direct_interval(const Interval& x, mpfr_prec_t prec) {
    constexpr int N = 48;
    double xmag = x.mag_upper();
    if (!(xmag < 0.0625)) throw std::domain_error("j_direct_interval: |x| must be < 1/16");
    Interval e4 = Interval::from_int(1, prec);
    Interval xn = Interval::from_int(1, prec);
    for (int n = 1; n <= N; ++n) {
        xn = xn * x;
        e4 = e4 + Interval::from_bigint(BigInt(240) * sigma3(n), prec) * xn;
    }
    // E4 tail: 240 sum_{n>N} n^4 |x|^n <= 240 (N+1)^4 |x|^{N+1} / (1 - 16|x|);
    // double rounding is absorbed by the extra binary order below
    double tail_e4 =
        240.0 * std::pow(N + 1.0, 4.0) * std::pow(xmag, N + 1.0) / (1.0 - 16.0 * xmag);
    Interval sym = Interval::from_endpoints_2exp(-1, 1, 0, prec);
    int te;
    std::frexp(tail_e4, &te);
    e4 = e4 + sym * Interval::from_endpoints_2exp(1, 1, te + 1, prec);

    Interval p = Interval::from_int(1, prec);
    xn = Interval::from_int(1, prec);
    Interval one = Interval::from_int(1, prec);
    for (int n = 1; n <= N; ++n) {
        xn = xn * x;
        p = p * (one - xn).pow_int(24);
    }
    // remaining factors: exp(24 * sum_{n>N} log(1 - x^n)), |log(1-y)| <= 2|y|
    double eps = 48.0 * std::pow(xmag, N + 1.0) / (1.0 - xmag);
    int ee;
    std::frexp(eps, &ee);
    Interval log_corr = sym * Interval::from_endpoints_2exp(1, 1, ee + 1, prec);
    Interval delta = x * p * log_corr.exp();
    return e4.pow_int(3) / delta;
}

}  // namespace

JNumeric j_from_tau(const BigInt& p, unsigned precision_bits) {
    if (!is_prime(p)) throw std::invalid_argument("j_from_tau: p must be prime");
    if (p % 4 != 3) throw std::invalid_argument("j_from_tau: p must be 3 mod 4");
    if (precision_bits < 64) throw std::invalid_argument("j_from_tau: precision_bits >= 64 required");
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 64;

    Interval pi = Interval::pi(prec);
    Interval sqrt_p = Interval::from_bigint(p, prec).sqrt();
    Interval t = (-(pi * sqrt_p)).exp();          // exp(-pi sqrt(p))
    Interval qv = -t;                             // the real q-expansion argument
    Interval r = (-pi).exp();                     // comparison radius exp(-pi)

    // tail bound constant: every coefficient is positive, so
    // c_k <= F(r) / r^k with F(r) = j(r) - 1/r - 744
    Interval one = Interval::from_int(1, prec);
    Interval f_r = j_direct_interval(r, prec) - one / r - Interval::from_int(744, prec);
    double f_upper = f_r.mag_upper();
    double ratio = (t / r).mag_upper();
    if (!(ratio < 0.2)) throw std::logic_error("j_from_tau: unexpected tail ratio");

    // tail(K) = F(r) sum_{k>K} (t/r)^k <= 2 F(r) ratio^{K+1}; the log2
    // arithmetic below is double precision, compensated by a margin of 2
    // binary orders when the bound is materialized
    double target_log2 = -static_cast<double>(precision_bits);
    int kmax = 1;
    double log2_ratio = std::log2(ratio);
    double log2_f = std::log2(f_upper + 1.0);
    while (kmax < 500) {
        double tail_log2 = log2_f + (kmax + 1) * log2_ratio + 1.0;
        if (tail_log2 < target_log2) break;
        ++kmax;
    }

    auto ser = j_q_expansion(kmax + 2);
    for (size_t i = 2; i < ser.size(); ++i)
        if (ser[i] <= 0) throw std::logic_error("j_from_tau: nonpositive expansion coefficient");

    // Horner over c_k q^k, then 1/q + 744 + ...
    Interval sum = Interval::from_int(0, prec);
    for (int k = kmax; k >= 1; --k) sum = sum * qv + Interval::from_bigint(ser[k + 1], prec);
    sum = sum * qv;
    Interval value = one / qv + Interval::from_int(744, prec) + sum;

    // add the certified truncation tail
    double tail_log2 = log2_f + (kmax + 1) * log2_ratio + 1.0;
    long tail_exp = static_cast<long>(std::ceil(tail_log2)) + 2;
    value = value + Interval::from_endpoints_2exp(-1, 1, tail_exp, prec);

    // independent route: direct evaluation of E4^3/Delta at qv
    Interval direct = j_direct_interval(qv, prec);
    if (!value.intersects(direct)) throw std::logic_error("j_from_tau: enclosure routes disagree");
    value = value.intersect(direct);

    JNumeric out{value, precision_bits, value.radius_log2(), std::nullopt, kmax};
    if (!(out.radius_log2 < -16.0))
        throw std::domain_error("j_from_tau: precision too low to certify the error bound");
    BigInt cand = value.midpoint_round();
    if (value.midpoint_within(cand, make_rat(1, 1000000))) out.integer_candidate = cand;
    return out;
}

}  // namespace psl2jac
