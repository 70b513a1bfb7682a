#include "psl2jac/finitefield.hpp"

#include <stdexcept>

namespace psl2jac {

PrimeField::PrimeField(uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

uint64_t PrimeField::reduce_int(const BigInt& v) const {
    BigInt m = v % BigInt(static_cast<unsigned long>(p_));
    if (m < 0) m += static_cast<unsigned long>(p_);
    return mpz_get_ui(m.get_mpz_t());
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t PrimeField::inv(uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

namespace {

// polynomial helpers over F_p with vectors of uint32 coefficients, used only
// for the defining-polynomial search at field construction
using FpPoly = std::vector<uint32_t>;

int deg(const FpPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, const PrimeField& F) {
    size_t k = mod.size() - 1;  // mod is monic of degree k
    std::vector<uint64_t> res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % F.p();
    }
    for (int i = static_cast<int>(res.size()) - 1; i >= static_cast<int>(k); --i) {
        uint64_t top = res[i] % F.p();
        if (!top) continue;
        res[i] = 0;
        for (size_t j = 0; j < k; ++j)
            res[i - k + j] = (res[i - k + j] + static_cast<uint64_t>(F.p() - top % F.p()) * mod[j]) % F.p();
    }
    FpPoly out(k, 0);
    for (size_t i = 0; i < k && i < res.size(); ++i) out[i] = static_cast<uint32_t>(res[i] % F.p());
    return out;
}

FpPoly powmod(FpPoly base, uint64_t e, const FpPoly& mod, const PrimeField& F) {
    FpPoly r(mod.size() - 1, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = mulmod(r, base, mod, F);
        base = mulmod(base, base, mod, F);
        e >>= 1;
    }
    return r;
}

FpPoly gcd_fp(FpPoly a, FpPoly b, const PrimeField& F) {
    while (deg(b) >= 0) {
        // a mod b
        int db = deg(b);
        uint64_t inv = F.inv(b[db]);
        while (deg(a) >= db) {
            int da = deg(a);
            uint64_t c = F.mul(a[da] % F.p(), inv);
            for (int j = 0; j <= db; ++j)
                a[da - db + j] = static_cast<uint32_t>(F.sub(a[da - db + j], F.mul(c, b[j])));
        }
        std::swap(a, b);
    }
    return a;
}

// f monic of degree k (coefficients c_0..c_{k-1}, implicit leading 1):
// irreducible iff x^{p^k} = x mod f and gcd(x^{p^{k/t}} - x, f) = 1 for
// every prime t | k
bool is_irreducible_monic(const std::vector<uint32_t>& low, const PrimeField& F) {
    unsigned k = static_cast<unsigned>(low.size());
    FpPoly mod(low.begin(), low.end());
    mod.push_back(1);
    FpPoly x(k, 0);
    if (k == 1) {
        return true;  // any monic linear
    }
    x[1] = 1;
    auto frob_power = [&](unsigned e) {
        // x^{p^e} mod f
        FpPoly r = x;
        for (unsigned i = 0; i < e; ++i) r = powmod(r, F.p(), mod, F);
        return r;
    };
    if (frob_power(k) != x) return false;
    std::vector<unsigned> prime_divs;
    unsigned kk = k;
    for (unsigned t = 2; t * t <= kk; ++t) {
        if (kk % t == 0) {
            prime_divs.push_back(t);
            while (kk % t == 0) kk /= t;
        }
    }
    if (kk > 1) prime_divs.push_back(kk);
    for (unsigned t : prime_divs) {
        FpPoly d = frob_power(k / t);
        d[1] = static_cast<uint32_t>(F.sub(d[1], 1));
        FpPoly g = gcd_fp(mod, d, F);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace

ExtField::ExtField(uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("ext_field: p is not prime");
    if (k < 1) throw std::invalid_argument("ext_field: k must be >= 1");
    uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > (1ULL << 32)) throw std::invalid_argument("ext_field: q = p^k exceeds 2^32");
    }
    q_ = q;
    PrimeField F(p);
    if (k == 1) {
        def_ = {0};  // formal: x - 0 plays no role for k = 1
    } else {
        // scan encoded indices upward; index m encodes c_i = digit i of m
        for (uint64_t m = 0;; ++m) {
            if (m >= q_) throw std::logic_error("no irreducible polynomial found");
            std::vector<uint32_t> low(k);
            uint64_t mm = m;
            for (unsigned i = 0; i < k; ++i) {
                low[i] = static_cast<uint32_t>(mm % p);
                mm /= p;
            }
            if (is_irreducible_monic(low, F)) {
                def_ = low;
                break;
            }
        }
    }
    if (q_ <= 64) {
        mul_table_.resize(q_ * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_generic(a, b);
        small_tables_ = true;
    }
}

ExtField ext_field(uint64_t p, unsigned k) { return ExtField(p, k); }

void ExtField::decode(uint32_t a, uint32_t* digits) const {
    for (unsigned i = 0; i < k_; ++i) {
        digits[i] = static_cast<uint32_t>(a % p_);
        a = static_cast<uint32_t>(a / p_);
    }
}

uint32_t ExtField::encode(const uint32_t* digits) const {
    uint64_t v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * p_ + digits[i];
    return static_cast<uint32_t>(v);
}

uint32_t ExtField::add(uint32_t a, uint32_t b) const {
    uint32_t da[33], db[33];
    decode(a, da);
    decode(b, db);
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t s = static_cast<uint64_t>(da[i]) + db[i];
        da[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    }
    return encode(da);
}

uint32_t ExtField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t ExtField::neg(uint32_t a) const {
    uint32_t da[33];
    decode(a, da);
    for (unsigned i = 0; i < k_; ++i) da[i] = da[i] ? static_cast<uint32_t>(p_ - da[i]) : 0;
    return encode(da);
}

uint32_t ExtField::mul_generic(uint32_t a, uint32_t b) const {
    uint32_t da[33], db[33];
    decode(a, da);
    decode(b, db);
    uint64_t prod[65] = {0};
    for (unsigned i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_;
    }
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
        uint64_t top = prod[i];
        if (!top) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - top) * def_[j]) % p_;
    }
    uint32_t dr[33];
    for (unsigned i = 0; i < k_; ++i) dr[i] = static_cast<uint32_t>(prod[i]);
    return encode(dr);
}

uint32_t ExtField::mul(uint32_t a, uint32_t b) const {
    if (small_tables_) return mul_table_[static_cast<uint64_t>(a) * q_ + b];
    return mul_generic(a, b);
}

uint32_t ExtField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t ExtField::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

}  // namespace psl2jac
