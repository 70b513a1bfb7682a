#include "psl2jac/ratfun.hpp"

namespace psl2jac {

RatFun::RatFun(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    PolyQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (den_.lc() != 1) {
        BigRat inv = BigRat(1) / den_.lc();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(unsigned e) const {
    RatFun r(BigRat(1));
    RatFun base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigRat RatFun::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole: denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::string RatFun::to_string(const std::string& var) const {
    if (den_ == PolyQ::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace psl2jac
