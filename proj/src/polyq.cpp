#include "psl2jac/polyq.hpp"

#include <sstream>

namespace psl2jac {

namespace {
const BigRat kZero = 0;
}

void PolyQ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::monomial(const BigRat& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigRat> v(degree + 1, BigRat(0));
    v[degree] = coeff;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<BigRat> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(parse_rat(s));
    return PolyQ(std::move(v));
}

const BigRat& PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigRat& PolyQ::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

PolyQ PolyQ::operator-() const {
    std::vector<BigRat> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<BigRat> v(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<BigRat> v(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const BigRat& s) const {
    std::vector<BigRat> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ r = constant(1);
    PolyQ base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRat> rem = a.c_;
    int db = b.degree();
    std::vector<BigRat> quo;
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, BigRat(0));
    BigRat inv_lc = BigRat(1) / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        BigRat f = rem[i] * inv_lc;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = PolyQ(std::move(quo));
    r = PolyQ(std::move(rem));
}

PolyQ PolyQ::operator/(const PolyQ& o) const {
    PolyQ q, r;
    divmod(*this, o, q, r);
    return q;
}

PolyQ PolyQ::operator%(const PolyQ& o) const {
    PolyQ q, r;
    divmod(*this, o, q, r);
    return r;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<BigRat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return PolyQ(std::move(v));
}

BigRat PolyQ::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return *this * (BigRat(1) / lc());
}

PolyQ::PrimitiveForm PolyQ::primitive_form() const {
    if (is_zero()) return {BigRat(0), {}};
    BigInt den_lcm = 1;
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> ints(c_.size());
    BigInt num_gcd = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        ints[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_mpz_t());
    }
    for (auto& v : ints) v /= num_gcd;
    return {make_rat(num_gcd, den_lcm), std::move(ints)};
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& c = c_[i];
        if (c == 0) continue;
        BigRat a = c;
        if (!first) {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1 || a == -1);
        if (i == 0 || !unit) {
            if (a == -1 && i != 0) out << "-";
            else out << a.get_str();
            if (i != 0) out << "*";
        } else if (a == -1) {
            out << "-";
        }
        if (i > 1) out << var << "^" << i;
        else if (i == 1) out << var;
    }
    return out.str();
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

BigRat resultant(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0 && g.degree() == 0) return 1;
    PolyQ a = f, b = g;
    BigRat acc = 1;
    // res(a,b) with deg a >= deg b via res(a,b) = (-1)^{da db} lc(b)^{da-dr} res(b, a mod b)
    for (;;) {
        if (a.degree() == 0) {
            BigRat p = acc;
            BigRat base = a.lc();
            for (int i = 0; i < b.degree(); ++i) p *= base;
            return p;
        }
        if (b.degree() == 0) {
            BigRat p = acc;
            BigRat base = b.lc();
            for (int i = 0; i < a.degree(); ++i) p *= base;
            return p;
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
            std::swap(a, b);
        }
        PolyQ r = a % b;
        if (r.is_zero()) return 0;
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        BigRat lcb = b.lc();
        for (int i = 0; i < a.degree() - r.degree(); ++i) acc *= lcb;
        a = std::move(b);
        b = std::move(r);
    }
}

BigRat discriminant(const PolyQ& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    BigRat r = resultant(f, f.derivative());
    r /= f.lc();
    if (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

bool is_squarefree(const PolyQ& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_squarefree requires degree >= 1");
    return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace psl2jac
