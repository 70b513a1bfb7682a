#pragma once

#include "psl2jac/polyq.hpp"

namespace psl2jac {

// Element of Q(alpha) for a formal transcendental alpha: a reduced fraction
// of polynomials with monic denominator.
class RatFun {
  public:
    RatFun() : num_(), den_(PolyQ::constant(1)) {}
    RatFun(const BigRat& v) : num_(PolyQ::constant(v)), den_(PolyQ::constant(1)) {}
    RatFun(PolyQ num, PolyQ den);
    explicit RatFun(const PolyQ& p) : num_(p), den_(PolyQ::constant(1)) {}

    static RatFun alpha() { return RatFun(PolyQ::variable()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun pow(unsigned e) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // exact substitution; throws std::domain_error at a pole
    BigRat eval(const BigRat& x) const;

    std::string to_string(const std::string& var = "a") const;

  private:
    void reduce();
    PolyQ num_, den_;
};

}  // namespace psl2jac
