#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psl2jac/numeric.hpp"

namespace psl2jac {

// Arithmetic in K = Q(sqrt(-p)) for a prime p = 3 mod 4, written in the
// integral basis {1, w} with w = (-1 + sqrt(-p))/2, so w^2 = -w - (p+1)/4.
struct QuadElem {
    BigRat u, v;  // u + v*w
    bool is_zero() const { return u == 0 && v == 0; }
};

class QuadField {
  public:
    explicit QuadField(const BigInt& p);

    const BigInt& p() const { return p_; }
    const BigInt& m() const { return m_; }  // (p+1)/4

    QuadElem add(const QuadElem& a, const QuadElem& b) const { return {a.u + b.u, a.v + b.v}; }
    QuadElem sub(const QuadElem& a, const QuadElem& b) const { return {a.u - b.u, a.v - b.v}; }
    QuadElem neg(const QuadElem& a) const { return {-a.u, -a.v}; }
    QuadElem mul(const QuadElem& a, const QuadElem& b) const;
    QuadElem conj(const QuadElem& a) const { return {a.u - a.v, -a.v}; }
    BigRat norm(const QuadElem& a) const;  // u^2 - uv + m v^2, positive definite

  private:
    BigInt p_, m_;
};

struct QuadOrder {
    BigInt p;
    int conductor;  // 1 for the maximal order, 2 for Z + 2O
};

// Fractional ideal (rank-2 lattice) in Q(sqrt(-p)), stored as
// (1/den) * (Z*(a, 0) + Z*(b, c)) in {1, w} coordinates with the Hermite
// normal form a, c > 0, 0 <= b < a and gcd(den, a, b, c) = 1; this form is
// unique, so equality is componentwise.
class QuadIdeal {
  public:
    QuadIdeal(const QuadField& K, const BigInt& den, const BigInt& a, const BigInt& b, const BigInt& c);

    static QuadIdeal from_basis(const QuadField& K, const QuadElem& g1, const QuadElem& g2);
    static QuadIdeal from_generators(const QuadField& K, const std::vector<QuadElem>& gens);
    static QuadIdeal maximal_order(const QuadField& K);   // Z + Zw
    static QuadIdeal order2(const QuadField& K);          // Z + 2wZ
    static QuadIdeal principal(const QuadField& K, const QuadElem& g);

    const QuadField& field() const { return *K_; }
    const BigInt& den() const { return den_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    QuadElem basis1() const;  // a/den
    QuadElem basis2() const;  // (b + c w)/den

    bool contains(const QuadElem& z) const;
    bool contains(const QuadIdeal& other) const;
    bool operator==(const QuadIdeal& o) const;

    QuadIdeal sum(const QuadIdeal& o) const;
    QuadIdeal product(const QuadIdeal& o) const;
    QuadIdeal scaled(const QuadElem& z) const;   // z * I
    QuadIdeal scaled(const BigRat& r) const;
    QuadIdeal conjugate() const;

    // index [this : other] for other contained in this
    BigInt index_of(const QuadIdeal& other) const;
    BigRat norm() const;  // covolume relative to the maximal order

    std::string to_string() const;

  private:
    const QuadField* K_;
    BigInt den_, a_, b_, c_;
    void normalize();
};

// true iff 2 is inert in the maximal order, i.e. x^2 + x + (p+1)/4 is
// irreducible mod 2, i.e. p = 3 mod 8; requires p prime, p = 3 mod 4
bool two_is_inert(const BigInt& p);

// multiplier ring {z : z I <= I} of a nonzero ideal, reported by conductor;
// conductors above 2 signal a caller bug and throw
QuadOrder multiplier_ring(const QuadIdeal& ideal);

// The three index-2 subgroups of an ideal of the maximal order (p = 3 mod 8).
// Each returned lattice is verified: index 2, multiplier ring of conductor 2,
// regenerates the input under the maximal order, and pairwise non-isomorphic.
std::array<QuadIdeal, 3> index2_subgroups(const QuadIdeal& a);

// lambda with lambda*b1 = b2 if the ideals are isomorphic as modules over
// their common multiplier ring; search is exact (colon ideal + norm ellipse)
std::optional<QuadElem> ideal_isomorphic(const QuadIdeal& b1, const QuadIdeal& b2);

// Number of classes of primitive reduced binary quadratic forms of
// discriminant D < 0, D = 0 or 1 mod 4.
long class_number(long long D);

struct ThreeHCheck {
    long h;   // class number of discriminant -p
    long h2;  // class number of discriminant -4p (conductor-2 order)
    bool ok;  // h2 == 3h
};

// p prime, p = 3 mod 8, p > 3
ThreeHCheck verify_3h(const BigInt& p);

}  // namespace psl2jac
