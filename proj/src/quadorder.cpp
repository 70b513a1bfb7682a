#include "psl2jac/quadorder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace psl2jac {

QuadField::QuadField(const BigInt& p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("QuadField: p must be prime");
    if (p % 4 != 3) throw std::invalid_argument("QuadField: p must be 3 mod 4");
    if (p == 3) throw std::invalid_argument("QuadField: p = 3 excluded (extra units)");
    m_ = (p + 1) / 4;
}

QuadElem QuadField::mul(const QuadElem& a, const QuadElem& b) const {
    // (u1 + v1 w)(u2 + v2 w) with w^2 = -w - m
    BigRat vv = a.v * b.v;
    return {a.u * b.u - vv * BigRat(m_), a.u * b.v + a.v * b.u - vv};
}

BigRat QuadField::norm(const QuadElem& a) const { return a.u * a.u - a.u * a.v + BigRat(m_) * a.v * a.v; }

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// extended gcd: g = s*a + t*b
BigInt gcdext(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
    BigInt g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}


BigInt mod_positive(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// HNF of the lattice spanned by integer vectors (x_i, y_i): returns (a, b, c)
// with lattice = Z(a,0) + Z(b,c), a, c > 0, 0 <= b < a
void lattice_hnf(std::vector<std::pair<BigInt, BigInt>> vecs, BigInt& a, BigInt& b, BigInt& c) {
    // c = gcd of y components with tracked combination; then reduce to y = 0
    c = 0;
    BigInt bx = 0;
    for (auto& [x, y] : vecs) {
        if (y == 0) continue;
        if (c == 0) {
            c = y;
            bx = x;
        } else {
            BigInt s, t;
            BigInt g = gcdext(c, y, s, t);
            BigInt nbx = s * bx + t * x;
            // the pair (bx, c), (x, y) is replaced by (nbx, g), ((x*c - bx*y)/g, 0)
            BigInt zero_x = (x * c - bx * y) / g;
            x = zero_x;
            y = 0;
            bx = nbx;
            c = g;
        }
    }
    if (c < 0) { c = -c; bx = -bx; }
    a = 0;
    for (auto& [x, y] : vecs) {
        if (y == 0 && x != 0) a = a == 0 ? BigInt(abs(x)) : gcd(a, BigInt(abs(x)));
    }
    if (c == 0 || a == 0) throw std::invalid_argument("lattice of rank < 2");
    b = mod_positive(bx, a);
}

}  // namespace

QuadIdeal::QuadIdeal(const QuadField& K, const BigInt& den, const BigInt& a, const BigInt& b, const BigInt& c)
    : K_(&K), den_(den), a_(a), b_(b), c_(c) {
    if (den_ <= 0 || a_ <= 0 || c_ <= 0) throw std::invalid_argument("QuadIdeal: invalid HNF data");
    normalize();
}

void QuadIdeal::normalize() {
    b_ = mod_positive(b_, a_);
    BigInt g = gcd(gcd(gcd(den_, a_), b_), c_);
    if (g > 1) {
        den_ /= g;
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadIdeal QuadIdeal::from_basis(const QuadField& K, const QuadElem& g1, const QuadElem& g2) {
    return from_generators(K, {g1, g2});
}

QuadIdeal QuadIdeal::from_generators(const QuadField& K, const std::vector<QuadElem>& gens) {
    BigInt den = 1;
    for (const auto& g : gens) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator(g.u).get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator(g.v).get_mpz_t());
    }
    std::vector<std::pair<BigInt, BigInt>> vecs;
    for (const auto& g : gens) {
        BigRat x = g.u * BigRat(den), y = g.v * BigRat(den);
        vecs.emplace_back(numerator(x), numerator(y));
    }
    BigInt a, b, c;
    lattice_hnf(std::move(vecs), a, b, c);
    return QuadIdeal(K, den, a, b, c);
}

QuadIdeal QuadIdeal::maximal_order(const QuadField& K) { return QuadIdeal(K, 1, 1, 0, 1); }

QuadIdeal QuadIdeal::order2(const QuadField& K) { return QuadIdeal(K, 1, 1, 0, 2); }

QuadIdeal QuadIdeal::principal(const QuadField& K, const QuadElem& g) {
    if (g.is_zero()) throw std::invalid_argument("principal ideal of zero");
    QuadElem w{BigRat(0), BigRat(1)};
    return from_generators(K, {g, K.mul(g, w)});
}

QuadElem QuadIdeal::basis1() const { return {make_rat(a_, den_), BigRat(0)}; }

QuadElem QuadIdeal::basis2() const { return {make_rat(b_, den_), make_rat(c_, den_)}; }

bool QuadIdeal::contains(const QuadElem& z) const {
    BigRat x = z.u * BigRat(den_), y = z.v * BigRat(den_);
    if (denominator(x) != 1 || denominator(y) != 1) return false;
    BigInt xi = numerator(x), yi = numerator(y);
    if (yi % c_ != 0) return false;
    BigInt t = yi / c_;
    return (xi - t * b_) % a_ == 0;
}

bool QuadIdeal::contains(const QuadIdeal& other) const {
    return contains(other.basis1()) && contains(other.basis2());
}

bool QuadIdeal::operator==(const QuadIdeal& o) const {
    return den_ == o.den_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

QuadIdeal QuadIdeal::sum(const QuadIdeal& o) const {
    return from_generators(*K_, {basis1(), basis2(), o.basis1(), o.basis2()});
}

QuadIdeal QuadIdeal::product(const QuadIdeal& o) const {
    std::vector<QuadElem> gens;
    for (const auto& x : {basis1(), basis2()})
        for (const auto& y : {o.basis1(), o.basis2()}) gens.push_back(K_->mul(x, y));
    return from_generators(*K_, gens);
}

QuadIdeal QuadIdeal::scaled(const QuadElem& z) const {
    if (z.is_zero()) throw std::invalid_argument("scaling ideal by zero");
    return from_generators(*K_, {K_->mul(z, basis1()), K_->mul(z, basis2())});
}

QuadIdeal QuadIdeal::scaled(const BigRat& r) const {
    return scaled(QuadElem{r, BigRat(0)});
}

QuadIdeal QuadIdeal::conjugate() const {
    return from_generators(*K_, {K_->conj(basis1()), K_->conj(basis2())});
}

BigInt QuadIdeal::index_of(const QuadIdeal& other) const {
    if (!contains(other)) throw std::invalid_argument("index_of: not a sublattice");
    // ratio of covolumes: det(other)/det(this)
    BigRat mine = make_rat(a_ * c_, den_ * den_);
    BigRat theirs = make_rat(other.a_ * other.c_, other.den_ * other.den_);
    BigRat idx = theirs / mine;
    if (denominator(idx) != 1) throw std::logic_error("index_of: non-integral index");
    return numerator(idx);
}

BigRat QuadIdeal::norm() const { return make_rat(a_ * c_, den_ * den_); }

std::string QuadIdeal::to_string() const {
    std::ostringstream out;
    out << "(1/" << den_.get_str() << ")<" << a_.get_str() << ", " << b_.get_str() << " + "
        << c_.get_str() << "w>";
    return out.str();
}

bool two_is_inert(const BigInt& p) {
    if (!is_prime(p) || p % 4 != 3) throw std::invalid_argument("two_is_inert: p must be prime, 3 mod 4");
    BigInt m = (p + 1) / 4;
    // x^2 + x + m mod 2: irreducible iff m odd (x^2 + x + 1)
    return m % 2 == 1;
}

QuadOrder multiplier_ring(const QuadIdeal& ideal) {
    const QuadField& K = ideal.field();
    QuadElem w{BigRat(0), BigRat(1)};
    auto stable_under = [&](const QuadElem& z) {
        return ideal.contains(K.mul(z, ideal.basis1())) && ideal.contains(K.mul(z, ideal.basis2()));
    };
    if (stable_under(w)) return {K.p(), 1};
    QuadElem w2{BigRat(0), BigRat(2)};
    if (stable_under(w2)) return {K.p(), 2};
    throw std::domain_error("multiplier ring has conductor > 2");
}

std::array<QuadIdeal, 3> index2_subgroups(const QuadIdeal& a) {
    const QuadField& K = a.field();
    if (multiplier_ring(a).conductor != 1)
        throw std::invalid_argument("index2_subgroups: input is not an ideal of the maximal order");
    if (!two_is_inert(K.p()))
        throw std::invalid_argument("index2_subgroups: requires p = 3 mod 8");
    QuadElem u = a.basis1(), v = a.basis2();
    BigRat two(2);
    std::array<QuadIdeal, 3> subs = {
        QuadIdeal::from_basis(K, K.mul({two, BigRat(0)}, u), v),
        QuadIdeal::from_basis(K, u, K.mul({two, BigRat(0)}, v)),
        QuadIdeal::from_basis(K, K.add(u, v), K.mul({two, BigRat(0)}, v)),
    };
    std::sort(subs.begin(), subs.end(), [](const QuadIdeal& x, const QuadIdeal& y) {
        return std::tie(x.den(), x.a(), x.b(), x.c()) < std::tie(y.den(), y.a(), y.b(), y.c());
    });
    QuadIdeal O = QuadIdeal::maximal_order(K);
    for (int i = 0; i < 3; ++i) {
        if (a.index_of(subs[i]) != 2) throw std::logic_error("index-2 subgroup has wrong index");
        if (multiplier_ring(subs[i]).conductor != 2)
            throw std::logic_error("index-2 subgroup is not a proper conductor-2 ideal");
        if (!(O.product(subs[i]) == a)) throw std::logic_error("index-2 subgroup does not regenerate the ideal");
        for (int j = 0; j < i; ++j)
            if (ideal_isomorphic(subs[j], subs[i]))
                throw std::logic_error("index-2 subgroups unexpectedly isomorphic");
    }
    return subs;
}

std::optional<QuadElem> ideal_isomorphic(const QuadIdeal& b1, const QuadIdeal& b2) {
    const QuadField& K = b1.field();
    if (K.p() == 3) throw std::invalid_argument("ideal_isomorphic: p = 3 has extra units and is excluded");
    QuadOrder o1 = multiplier_ring(b1), o2 = multiplier_ring(b2);
    if (o1.conductor != o2.conductor)
        throw std::invalid_argument("ideal_isomorphic: multiplier rings differ");
    // lambda must lie in (b2 : b1) = b2 * conj(b1) / N(b1) and have norm
    // N(b2)/N(b1); enumerate the finitely many lattice points on that norm
    // ellipse (units are +-1 for p > 3, so the match is exact)
    BigRat target = b2.norm() / b1.norm();
    QuadIdeal colon = b2.product(b1.conjugate()).scaled(BigRat(1) / b1.norm());
    // points (x + y w)/den of the colon lattice with norm = target:
    // x^2 - x y + m y^2 = target * den^2 =: R
    BigRat Rr = target * BigRat(colon.den() * colon.den());
    if (denominator(Rr) != 1) return std::nullopt;
    BigInt R = numerator(Rr);
    const BigInt& m = K.m();
    // (x - y/2)^2 + (m - 1/4) y^2 = R  =>  y^2 <= 4R / (4m - 1)
    BigInt y_bound_sq = (4 * R) / (4 * m - 1);
    BigInt ymax;
    mpz_sqrt(ymax.get_mpz_t(), y_bound_sq.get_mpz_t());
    for (BigInt y = -ymax; y <= ymax; ++y) {
        // x^2 - xy + (m y^2 - R) = 0 => x = (y +- sqrt(y^2 - 4(m y^2 - R)))/2
        BigInt disc = y * y - 4 * (m * y * y - R);
        if (disc < 0) continue;
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        if (s * s != disc) continue;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            BigInt num = sign == 0 ? BigInt(y + s) : BigInt(y - s);
            if (num % 2 != 0) continue;
            BigInt x = num / 2;
            QuadElem lambda{make_rat(x, colon.den()), make_rat(y, colon.den())};
            if (lambda.is_zero()) continue;
            if (!colon.contains(lambda)) continue;
            if (b1.scaled(lambda) == b2) {
                // canonical sign: prefer v > 0, then u > 0
                if (lambda.v < 0 || (lambda.v == 0 && lambda.u < 0)) lambda = K.neg(lambda);
                return lambda;
            }
        }
    }
    return std::nullopt;
}

long class_number(long long D) {
    if (D >= 0) throw std::invalid_argument("class_number: D must be negative");
    long long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("class_number: D must be 0 or 1 mod 4");
    if (D < -4000000000LL) throw std::invalid_argument("class_number: |D| too large");
    long h = 0;
    for (long long b = (r == 0 ? 0 : 1); 3 * b * b <= -D; b += 2) {
        long long ac4 = b * b - D;
        if (ac4 % 4 != 0) continue;
        long long ac = ac4 / 4;
        for (long long a = std::max(b, 1LL); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            long long c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            ++h;                                   // (a, b, c)
            if (b != 0 && b != a && a != c) ++h;   // (a, -b, c)
        }
    }
    return h;
}

ThreeHCheck verify_3h(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("verify_3h: p must be prime");
    if (p % 8 != 3) throw std::invalid_argument("verify_3h: p must be 3 mod 8");
    if (p <= 3) throw std::invalid_argument("verify_3h: p must exceed 3");
    if (!p.fits_slong_p()) throw std::invalid_argument("verify_3h: p too large");
    long long pl = mpz_get_si(p.get_mpz_t());
    long h = class_number(-pl);
    long h2 = class_number(-4 * pl);
    return {h, h2, h2 == 3 * h};
}

}  // namespace psl2jac
