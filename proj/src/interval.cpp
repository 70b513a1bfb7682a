#include "psl2jac/interval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace psl2jac {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_int(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_bigint(const BigInt& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const BigRat& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints_2exp(long lo_num, long hi_num, long exp2, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si_2exp(r.lo_, lo_num, exp2, MPFR_RNDD);
    mpfr_set_si_2exp(r.hi_, hi_num, exp2, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    // four corner products with outward rounding
    mpfr_t cand;
    mpfr_init2(cand, r.prec_);
    bool first = true;
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(cand, *xs[i], *ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.lo_) < 0) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_mul(cand, *xs[i], *ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.hi_) > 0) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw std::domain_error("interval division by interval containing zero");
    Interval r(std::max(prec_, o.prec_));
    mpfr_t cand;
    mpfr_init2(cand, r.prec_);
    bool first = true;
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(cand, *xs[i], *ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.lo_) < 0) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_div(cand, *xs[i], *ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.hi_) > 0) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative range");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(unsigned k) const {
    Interval r = from_int(1, prec_);
    Interval base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Interval Interval::widened_2exp(long e) const {
    Interval eps(prec_);
    mpfr_set_si_2exp(eps.lo_, -1, e, MPFR_RNDD);
    mpfr_set_si_2exp(eps.hi_, 1, e, MPFR_RNDU);
    return *this + eps;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const BigRat& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::intersects(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

Interval Interval::intersect(const Interval& o) const {
    if (!intersects(o)) throw std::logic_error("disjoint interval intersection");
    Interval r(std::max(prec_, o.prec_));
    mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) >= 0 ? lo_ : o.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) <= 0 ? hi_ : o.hi_, MPFR_RNDU);
    return r;
}

bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

double Interval::mag_upper() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, lo_, MPFR_RNDU);
    double a = mpfr_get_d(t, MPFR_RNDU);
    mpfr_abs(t, hi_, MPFR_RNDU);
    double b = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return std::max(a, b);
}

double Interval::radius_log2() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div_2si(w, w, 1, MPFR_RNDU);
    double out;
    if (mpfr_zero_p(w)) {
        out = -std::numeric_limits<double>::infinity();
    } else {
        mpfr_log2(w, w, MPFR_RNDU);
        out = mpfr_get_d(w, MPFR_RNDU);
    }
    mpfr_clear(w);
    return out;
}

BigInt Interval::midpoint_round() const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
    mpfr_round(mid, mid);
    BigInt out;
    mpfr_get_z(out.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return out;
}

bool Interval::midpoint_within(const BigInt& n, const BigRat& bound) const {
    mpfr_t mid, dist;
    mpfr_init2(mid, prec_);
    mpfr_init2(dist, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
    mpfr_sub_z(dist, mid, n.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(dist, dist, MPFR_RNDU);
    bool ok = mpfr_cmp_q(dist, bound.get_mpq_t()) <= 0;
    mpfr_clear(mid);
    mpfr_clear(dist);
    return ok;
}

std::string Interval::to_string(size_t digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

}  // namespace psl2jac
