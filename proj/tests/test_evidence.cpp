#include <doctest.h>

#include "psl2jac/evidence.hpp"
#include "psl2jac/families.hpp"

using namespace psl2jac;

TEST_SUITE_BEGIN("evidence");

TEST_CASE("chebotarev expectations for q=5") {
    auto exp5 = chebotarev_expected(5);
    CHECK(exp5.at(CycleType{{5, 1}}) == make_rat(24, 60));
    CHECK(exp5.at(CycleType{{1, 1, 1, 1, 1, 1}}) == make_rat(1, 60));
    BigRat total = 0;
    for (const auto& [t, p] : exp5) total += p;
    CHECK(total == 1);
}

TEST_CASE("f11 family evidence is consistent, goldens frozen") {
    EvidenceConfig cfg;
    cfg.sample_size = 500;
    cfg.seed = 7;
    auto rep = galois_evidence(build_f11(BigRat(1)), 11, cfg, "f11,s=1");
    CHECK(rep.verdict == EvidenceVerdict::Consistent);
    CHECK(rep.primes_sampled == 500);
    // bad primes at the head of the scan: 2, 3, 11 (non-squarefree), then
    // the discriminant primes 307 and 439
    REQUIRE(rep.skipped_primes.size() >= 5);
    CHECK(rep.skipped_primes[0] == 2);
    CHECK(rep.skipped_primes[1] == 3);
    CHECK(rep.skipped_primes[2] == 11);
    CHECK(rep.skipped_primes[3] == 307);
    CHECK(rep.skipped_primes[4] == 439);
    // frozen pattern frequencies over the first 500 good primes
    CHECK(rep.pattern_counts.at(CycleType{{6, 6}}) == 95);
    CHECK(rep.pattern_counts.at(CycleType{{3, 3, 3, 3}}) == 72);
    CHECK(rep.pattern_counts.at(CycleType{{11, 1}}) == 98);
    CHECK(rep.pattern_counts.at(CycleType{{5, 5, 1, 1}}) == 190);
    CHECK(rep.pattern_counts.at(CycleType{{2, 2, 2, 2, 2, 2}}) == 45);
    CHECK(rep.tv_distance == make_rat(243, 5500));
    CHECK(rep.tv_distance <= cfg.tv_threshold);
    // the totally split class (density 1/660) cannot show up this early;
    // it is exempt, not required
    CHECK_FALSE(rep.all_types_observed);
    CHECK(rep.required_types_observed);
    REQUIRE(rep.exempt_rare_types.size() == 1);
    CHECK(rep.exempt_rare_types[0] == CycleType{std::vector<int>(12, 1)});
    CHECK(rep.transitivity_evidence);
}

TEST_CASE("f13 family evidence is consistent, goldens frozen") {
    EvidenceConfig cfg;
    cfg.sample_size = 500;
    cfg.seed = 7;
    auto rep = galois_evidence(build_f13(BigRat(-1)), 13, cfg, "f13,s=-1");
    CHECK(rep.verdict == EvidenceVerdict::Consistent);
    CHECK(rep.pattern_counts.at(CycleType{{7, 7}}) == 185);
    CHECK(rep.pattern_counts.at(CycleType{{13, 1}}) == 91);
    CHECK(rep.pattern_counts.at(CycleType{{6, 6, 1, 1}}) == 90);
    CHECK(rep.pattern_counts.at(CycleType{{3, 3, 3, 3, 1, 1}}) == 87);
    CHECK(rep.pattern_counts.at(CycleType{{2, 2, 2, 2, 2, 2, 1, 1}}) == 47);
    CHECK(rep.tv_distance == make_rat(58, 975));
    CHECK(rep.verdict == EvidenceVerdict::Consistent);
}

TEST_CASE("abelian polynomial is inconsistent with witness at p=5") {
    // x^12 - 1 is squarefree of degree 12 but splits abelian-ly
    std::vector<BigRat> c(13, BigRat(0));
    c[0] = -1;
    c[12] = 1;
    PolyQ f(std::move(c));
    EvidenceConfig cfg;
    cfg.sample_size = 50;
    auto rep = galois_evidence(f, 11, cfg, "x^12-1");
    CHECK(rep.verdict == EvidenceVerdict::Inconsistent);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == 5);
    CHECK(rep.witness->second == CycleType{{2, 2, 2, 2, 1, 1, 1, 1}});
}

TEST_CASE("determinism across runs and job counts") {
    EvidenceConfig a;
    a.sample_size = 40;
    a.seed = 7;
    EvidenceConfig b = a;
    b.jobs = 4;
    auto f = build_f11(BigRat(1));
    auto r1 = galois_evidence(f, 11, a);
    auto r2 = galois_evidence(f, 11, a);
    auto r3 = galois_evidence(f, 11, b);
    CHECK(r1.pattern_counts == r2.pattern_counts);
    CHECK(r1.pattern_counts == r3.pattern_counts);
    CHECK(r1.tv_distance == r3.tv_distance);
    CHECK(r1.verdict == r3.verdict);
}

TEST_CASE("preconditions") {
    EvidenceConfig cfg;
    cfg.sample_size = 10;
    CHECK_THROWS_AS(galois_evidence(build_f11(BigRat(1)), 13, cfg), std::invalid_argument);
    CHECK_THROWS_AS(galois_evidence(PolyQ({BigRat(1), BigRat(1)}), 11, cfg), std::invalid_argument);
    EvidenceConfig bad = cfg;
    bad.tv_threshold = BigRat(2);
    CHECK_THROWS_AS(galois_evidence(build_f11(BigRat(1)), 11, bad), std::invalid_argument);
}

TEST_CASE("census gate for large q") {
    // degree 38 polynomial with q = 37: evidence must come back inconclusive
    std::vector<BigRat> c(39, BigRat(0));
    c[0] = -2;
    c[1] = -1;
    c[38] = 1;
    PolyQ f(std::move(c));
    if (is_squarefree(f)) {
        EvidenceConfig cfg;
        cfg.sample_size = 20;
        auto rep = galois_evidence(f, 37, cfg, "x^38-x-2");
        CHECK(rep.verdict == EvidenceVerdict::Inconclusive);
        CHECK_FALSE(rep.census_available);
        CHECK(rep.primes_sampled == 20);
        CHECK_FALSE(rep.pattern_counts.empty());
    }
}

TEST_SUITE_END();
