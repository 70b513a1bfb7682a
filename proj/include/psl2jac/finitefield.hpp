#pragma once

#include <cstdint>
#include <vector>

#include "psl2jac/numeric.hpp"

namespace psl2jac {

// F_p for a machine-word prime p; elements are uint64_t reduced to [0, p).
class PrimeField {
  public:
    explicit PrimeField(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t reduce_int(const BigInt& v) const;

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ || s < a ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    uint64_t p_;
};

// F_q = F_p[x]/(defining poly), q = p^k <= 2^32. Elements are encoded as
// uint32_t indices: sum of c_i p^i over the coefficients c_0..c_{k-1}.
// The defining polynomial is the lexicographically smallest monic
// irreducible of degree k (coefficient tuple read high index first, i.e.
// smallest encoded index), so fields are reproducible across builds.
class ExtField {
  public:
    ExtField(uint64_t p, unsigned k);

    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& defining_poly() const { return def_; }  // c_0..c_{k-1}

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t from_int(uint64_t n) const { return static_cast<uint32_t>(n % p_); }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frobenius(uint32_t a) const { return pow(a, p_); }

    void decode(uint32_t a, uint32_t* digits) const;  // digits[0..k-1]
    uint32_t encode(const uint32_t* digits) const;

  private:
    uint64_t p_;
    unsigned k_;
    uint64_t q_;
    std::vector<uint32_t> def_;
    bool small_tables_ = false;
    std::vector<uint32_t> mul_table_;  // q*q table when q is small
    uint32_t mul_generic(uint32_t a, uint32_t b) const;
};

// Factory with the spec'd validation: p prime, k >= 1, p^k <= 2^32.
ExtField ext_field(uint64_t p, unsigned k);

}  // namespace psl2jac
