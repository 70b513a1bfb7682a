#include <doctest.h>

#include <set>

#include "psl2jac/smallgroup.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("smallgroup");

TEST_CASE("group construction") {
    CHECK(SmallGroup::alternating(5).order() == 60);
    CHECK(SmallGroup::alternating(4).order() == 12);
    CHECK(SmallGroup::alternating(6).order() == 360);
    CHECK(SmallGroup::symmetric(3).order() == 6);
    CHECK(SmallGroup::symmetric(4).order() == 24);
    CHECK(SmallGroup::cyclic(6).order() == 6);
    CHECK(SmallGroup::dihedral(4).order() == 8);
    CHECK(SmallGroup::klein4().order() == 4);
    CHECK(SmallGroup::named("A5").order() == 60);
    CHECK_THROWS(SmallGroup::named("Q8"));
}

TEST_CASE("normal subgroup lattices") {
    auto s3 = SmallGroup::symmetric(3);
    CHECK(s3.normal_subgroups().size() == 3);  // 1, A3, S3
    auto a5 = SmallGroup::alternating(5);
    CHECK(a5.normal_subgroups().size() == 2);  // simple
    auto s4 = SmallGroup::symmetric(4);
    CHECK(s4.normal_subgroups().size() == 4);  // 1, V4, A4, S4
    auto z6 = SmallGroup::cyclic(6);
    CHECK(z6.normal_subgroups().size() == 4);  // divisors of 6
}

namespace {

// brute-force subgroup scan: every subgroup of g1 x g2 via closure
// extension, then filter for surjective projections
std::set<std::vector<std::pair<int, int>>> brute_force_subdirect(const SmallGroup& g1,
                                                                 const SmallGroup& g2) {
    int n1 = g1.order(), n2 = g2.order();
    int n = n1 * n2;
    auto mul = [&](int a, int b) {
        int a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
        return g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
    };
    auto close = [&](std::vector<int> seed) {
        std::set<int> have{0};
        for (int s : seed) have.insert(s);
        std::vector<int> stack(have.begin(), have.end());
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int s : seed) {
                int nx = mul(cur, s);
                if (have.insert(nx).second) stack.push_back(nx);
            }
        }
        return std::vector<int>(have.begin(), have.end());
    };
    std::set<std::vector<int>> subs;
    subs.insert({0});
    for (;;) {
        bool grew = false;
        auto snapshot = subs;
        for (const auto& h : snapshot) {
            for (int g = 1; g < n; ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<int> seed = h;
                seed.push_back(g);
                auto k = close(seed);
                if (subs.insert(k).second) grew = true;
            }
        }
        if (!grew) break;
    }
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& h : subs) {
        std::set<int> p1, p2;
        std::vector<std::pair<int, int>> pairs;
        for (int e : h) {
            p1.insert(e / n2);
            p2.insert(e % n2);
            pairs.emplace_back(e / n2, e % n2);
        }
        if (static_cast<int>(p1.size()) == n1 && static_cast<int>(p2.size()) == n2)
            out.insert(pairs);
    }
    return out;
}

}  // namespace

TEST_CASE("subdirect products of Z2 x Z2") {
    auto z2 = SmallGroup::cyclic(2);
    auto subs = subdirect_products(z2, z2);
    CHECK(subs.size() == 2);  // diagonal and full
    std::set<size_t> sizes;
    for (const auto& s : subs) sizes.insert(s.pairs.size());
    CHECK(sizes == std::set<size_t>{2, 4});
}

TEST_CASE("subdirect products of S3 x S3 match the brute-force oracle") {
    auto s3 = SmallGroup::symmetric(3);
    auto subs = subdirect_products(s3, s3);
    CHECK(subs.size() == 8);  // 6 graphs + index-2 graph + full
    auto oracle = brute_force_subdirect(s3, s3);
    CHECK(oracle.size() == 8);
    std::set<std::vector<std::pair<int, int>>> mine;
    for (const auto& s : subs) mine.insert(s.pairs);
    CHECK(mine == oracle);
}

TEST_CASE("simple factor with no matching quotient forces the full product") {
    auto a5 = SmallGroup::alternating(5);
    for (const auto& other : {SmallGroup::symmetric(3), SmallGroup::cyclic(4), SmallGroup::dihedral(4)}) {
        auto subs = subdirect_products(a5, other);
        REQUIRE(subs.size() == 1);
        CHECK(subs[0].pairs.size() == static_cast<size_t>(60 * other.order()));
    }
}

TEST_CASE("returned subgroups are closed with surjective projections") {
    auto s3 = SmallGroup::symmetric(3);
    auto z6 = SmallGroup::cyclic(6);
    for (const auto& h : subdirect_products(s3, z6)) {
        std::set<std::pair<int, int>> set(h.pairs.begin(), h.pairs.end());
        std::set<int> p1, p2;
        for (auto [a, b] : h.pairs) {
            p1.insert(a);
            p2.insert(b);
            for (auto [c, d] : h.pairs) CHECK(set.count({s3.mul(a, c), z6.mul(b, d)}));
        }
        CHECK(static_cast<int>(p1.size()) == s3.order());
        CHECK(static_cast<int>(p2.size()) == z6.order());
    }
    // |S3 x Z6| = 36 is within oracle reach as well
    auto oracle = brute_force_subdirect(s3, z6);
    auto subs = subdirect_products(s3, z6);
    std::set<std::vector<std::pair<int, int>>> mine;
    for (const auto& s : subs) mine.insert(s.pairs);
    CHECK(mine == oracle);
}

TEST_CASE("size guard") {
    auto a5 = SmallGroup::alternating(5);
    auto a6 = SmallGroup::alternating(6);
    (void)a5;
    CHECK_THROWS_AS(subdirect_products(a6, a6), std::invalid_argument);  // 360^2 > 1e5
}

TEST_SUITE_END();
