#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "psl2jac/numeric.hpp"

namespace psl2jac {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list; otherwise the list has
// no trailing zeros.
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    PolyQ(std::initializer_list<BigRat> coeffs) : c_(coeffs) { normalize(); }

    static PolyQ constant(const BigRat& v) { return PolyQ({v}); }
    static PolyQ monomial(const BigRat& coeff, int degree);
    static PolyQ variable() { return monomial(1, 1); }
    // parse coefficient strings "num/den", lowest degree first
    static PolyQ from_strings(const std::vector<std::string>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const BigRat& coeff(int i) const;  // 0 outside range
    const BigRat& lc() const;          // leading coefficient, throws on zero poly
    const std::vector<BigRat>& coeffs() const { return c_; }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const BigRat& s) const;
    PolyQ pow(unsigned e) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

    // exact Euclidean division; divisor must be nonzero
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
    PolyQ operator/(const PolyQ& o) const;
    PolyQ operator%(const PolyQ& o) const;

    PolyQ derivative() const;
    BigRat eval(const BigRat& x) const;

    PolyQ monic() const;  // divide by lc, zero stays zero

    // content c > 0 and primitive integer coefficient list such that
    // poly = c * primitive (sign carried by the primitive part's lc)
    struct PrimitiveForm {
        BigRat content;
        std::vector<BigInt> coeffs;  // lowest degree first
    };
    PrimitiveForm primitive_form() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<BigRat> c_;
};

// monic gcd (Euclid); gcd(0,0) = 0
PolyQ poly_gcd(PolyQ a, PolyQ b);

// res(f, g), with conventions res(c, g) = c^{deg g} for constants and
// res(f, g) = 0 when a common root exists
BigRat resultant(const PolyQ& f, const PolyQ& g);

// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f), deg f >= 1
BigRat discriminant(const PolyQ& f);

// true iff gcd(f, f') is constant; deg f >= 1 required
bool is_squarefree(const PolyQ& f);

}  // namespace psl2jac
