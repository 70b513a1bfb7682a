#pragma once

#include <string>

#include <mpfr.h>

#include "psl2jac/numeric.hpp"

namespace psl2jac {

// Real interval [lo, hi] with MPFR endpoints and outward directed rounding.
// Every operation encloses the exact result.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    static Interval from_int(long v, mpfr_prec_t prec);
    static Interval from_bigint(const BigInt& v, mpfr_prec_t prec);
    static Interval from_rat(const BigRat& v, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    // [-|r|, |r|] style explicit construction
    static Interval from_endpoints_2exp(long lo_num, long hi_num, long exp2, mpfr_prec_t prec);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // requires 0 outside divisor
    Interval sqrt() const;                        // requires lo >= 0
    Interval exp() const;
    Interval pow_int(unsigned k) const;

    // widen by [-eps, eps] where eps = 2^e
    Interval widened_2exp(long e) const;

    bool contains_zero() const;
    bool contains(const BigRat& v) const;
    bool intersects(const Interval& o) const;
    Interval intersect(const Interval& o) const;  // throws if disjoint
    bool is_negative() const;  // hi < 0

    // upper bound for |x| over the interval, rounded up, as double (may be inf)
    double mag_upper() const;
    // radius (hi-lo)/2 rounded up; log2 of it, -inf when exact
    double radius_log2() const;
    // nearest integer to the midpoint
    BigInt midpoint_round() const;
    // |midpoint - n| <= bound?
    bool midpoint_within(const BigInt& n, const BigRat& bound) const;

    std::string to_string(size_t digits = 20) const;

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    friend Interval make_interval(mpfr_prec_t);
};

}  // namespace psl2jac
