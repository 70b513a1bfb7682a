#include <doctest.h>

#include "psl2jac/polyq.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("polyq");

namespace {

PolyQ random_poly(Rng& rng, int maxdeg) {
    std::vector<BigRat> c(rng.below(maxdeg + 1) + 1);
    for (auto& v : c) v = make_rat(BigInt(rng.below(21)) - 10, BigInt(rng.below(5)) + 1);
    return PolyQ(std::move(c));
}

// Sylvester-matrix determinant by exact fraction-free-ish rational
// elimination: an independent route for cross-checking the Euclidean
// resultant.
BigRat sylvester_resultant(const PolyQ& f, const PolyQ& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    std::vector<std::vector<BigRat>> a(size, std::vector<BigRat>(size, BigRat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
    BigRat det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        BigRat inv = BigRat(1) / a[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (a[r][col] == 0) continue;
            BigRat factor = a[r][col] * inv;
            for (int c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("basic arithmetic and division") {
    PolyQ f({BigRat(-2), BigRat(0), BigRat(0), BigRat(1)});  // x^3 - 2
    PolyQ g({BigRat(1), BigRat(1)});                         // x + 1
    PolyQ q, r;
    PolyQ::divmod(f, g, q, r);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(f.eval(BigRat(2)) == 6);
    CHECK(PolyQ().degree() == -1);
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(f / PolyQ(), std::domain_error);
}

TEST_CASE("discriminant knowns") {
    PolyQ x2m1({BigRat(-1), BigRat(0), BigRat(1)});
    CHECK(discriminant(x2m1) == 4);
    PolyQ x3m2({BigRat(-2), BigRat(0), BigRat(0), BigRat(1)});
    CHECK(discriminant(x3m2) == -108);
    // depressed cubic x^3 + px + q has disc -4p^3 - 27q^2
    PolyQ c({BigRat(5), BigRat(-7), BigRat(0), BigRat(1)});
    CHECK(discriminant(c) == BigRat(-4) * (-343) - BigRat(27) * 25);
}

TEST_CASE("squarefree detection") {
    PolyQ sq({BigRat(1), BigRat(-2), BigRat(1)});  // (x-1)^2
    CHECK_FALSE(is_squarefree(sq));
    PolyQ x3m2({BigRat(-2), BigRat(0), BigRat(0), BigRat(1)});
    CHECK(is_squarefree(x3m2));
    CHECK_THROWS_AS(is_squarefree(PolyQ::constant(3)), std::invalid_argument);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    Rng rng(2024);
    int done = 0;
    while (done < 60) {
        PolyQ f = random_poly(rng, 5), g = random_poly(rng, 5);
        if (f.degree() < 0 || g.degree() < 0) continue;
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
        ++done;
    }
}

TEST_CASE("resultant multiplicativity") {
    Rng rng(99);
    int done = 0;
    while (done < 40) {
        PolyQ f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 3);
        if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
        ++done;
    }
}

TEST_CASE("discriminant of a product") {
    Rng rng(7);
    int done = 0;
    while (done < 25) {
        PolyQ f = random_poly(rng, 3), g = random_poly(rng, 3);
        if (f.degree() < 1 || g.degree() < 1) continue;
        if (!is_squarefree(f) || !is_squarefree(g)) continue;
        if (poly_gcd(f, g).degree() != 0) continue;
        BigRat res = resultant(f, g);
        CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * res * res);
        ++done;
    }
}

TEST_CASE("gcd and primitive form") {
    PolyQ a({BigRat(-1), BigRat(0), BigRat(1)});  // (x-1)(x+1)
    PolyQ b({BigRat(-1), BigRat(1)});
    CHECK(poly_gcd(a, b) == b);
    PolyQ f = PolyQ({make_rat(263, 270), make_rat(-539, 135)});
    auto prim = f.primitive_form();
    CHECK(prim.coeffs.size() == 2);
    CHECK(gcd(prim.coeffs[0], prim.coeffs[1]) == 1);
    // content * primitive reproduces the polynomial
    std::vector<BigRat> back;
    for (const auto& c : prim.coeffs) back.push_back(prim.content * BigRat(c));
    CHECK(PolyQ(back) == f);
}

TEST_CASE("string round trip") {
    PolyQ f = PolyQ::from_strings({"-308", "-66", "0", "1"});
    CHECK(f.degree() == 3);
    CHECK(f.coeff(0) == -308);
    CHECK(f.to_string() == "x^3 - 66*x - 308");
}

TEST_SUITE_END();
