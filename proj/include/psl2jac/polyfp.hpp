#pragma once

#include <optional>
#include <vector>

#include "psl2jac/finitefield.hpp"
#include "psl2jac/polyq.hpp"

namespace psl2jac {

// Dense polynomial over F_p, coefficients lowest degree first, reduced and
// trailing-zero free.
class PolyFp {
  public:
    explicit PolyFp(PrimeField f) : F_(f) {}
    PolyFp(PrimeField f, std::vector<uint64_t> coeffs) : F_(f), c_(std::move(coeffs)) { normalize(); }

    const PrimeField& field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i]; }
    uint64_t lc() const;
    const std::vector<uint64_t>& coeffs() const { return c_; }

    static PolyFp x(PrimeField f) { return PolyFp(f, {0, 1}); }
    static PolyFp constant(PrimeField f, uint64_t v) { return PolyFp(f, {v}); }

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    bool operator==(const PolyFp& o) const { return F_.p() == o.F_.p() && c_ == o.c_; }

    static void divmod(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r);
    PolyFp operator%(const PolyFp& o) const;
    PolyFp operator/(const PolyFp& o) const;

    PolyFp derivative() const;
    PolyFp monic() const;
    uint64_t eval(uint64_t x) const;

  private:
    void normalize();
    PrimeField F_;
    std::vector<uint64_t> c_;
};

PolyFp polyfp_gcd(PolyFp a, PolyFp b);
PolyFp polyfp_powmod(const PolyFp& base, const BigInt& e, const PolyFp& mod);

// Reduction of a rational polynomial mod p fails for the listed reasons;
// callers sampling primes skip these.
class BadPrimeError : public std::runtime_error {
  public:
    explicit BadPrimeError(const std::string& what) : std::runtime_error(what) {}
};

// Clears content to a primitive integer polynomial, then reduces mod p.
// Throws BadPrimeError if p divides the primitive leading coefficient or the
// reduction is not squarefree.
PolyFp reduce_mod_p(const PolyQ& f, uint64_t p);

// Multiset of irreducible-factor degrees, nonincreasing; entries sum to the
// polynomial degree.
struct DegreePattern {
    std::vector<int> degs;
    bool operator==(const DegreePattern& o) const { return degs == o.degs; }
    bool operator<(const DegreePattern& o) const { return degs < o.degs; }
    std::string to_string() const;
};

// Full factorization of a squarefree monic polynomial over F_p
// (distinct-degree then Cantor-Zassenhaus equal-degree splitting).
std::vector<PolyFp> factor_squarefree(const PolyFp& f, Rng& rng);

// Degree pattern of f mod p via the full factorization; throws
// BadPrimeError when p is unusable.
DegreePattern factor_degrees_mod_p(const PolyQ& f, uint64_t p, uint64_t seed = 1);

// Certificate-based irreducibility over Q from mod-p degree patterns.
//  * Certified: the surviving Q-factorisation shapes, after sieving against
//    every sampled pattern, reduce to {deg f} alone (a proof). The witness
//    prime is the one that completed the sieve.
//  * Reducible: an exact rational root was found (a proof).
//  * Inconclusive: prime budget exhausted without either certificate.
struct IrreducibilityResult {
    enum class Kind { Certified, Reducible, Inconclusive } kind;
    uint64_t certified_prime = 0;        // for Certified
    std::optional<BigRat> rational_root; // for Reducible
    int primes_used = 0;
};

IrreducibilityResult irreducible_over_Q(const PolyQ& f, int prime_budget = 120, uint64_t seed = 1);

// all partitions of n, each nonincreasing
std::vector<std::vector<int>> partitions_of(int n);

// true iff the parts of pattern can be grouped into blocks whose sums are
// exactly the parts of shape
bool pattern_refines_shape(const std::vector<int>& pattern, const std::vector<int>& shape);

}  // namespace psl2jac
