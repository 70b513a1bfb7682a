#pragma once

#include <map>
#include <optional>
#include <string>

#include "psl2jac/polyfp.hpp"
#include "psl2jac/psl2.hpp"

namespace psl2jac {

enum class EvidenceVerdict { Consistent, Inconsistent, Inconclusive };

std::string to_string(EvidenceVerdict v);

struct EvidenceConfig {
    int sample_size = 500;
    BigRat tv_threshold = make_rat(3, 20);  // 0.15
    uint64_t seed = 0;
    int jobs = 1;
    // give up when this many primes were scanned without finding enough good ones
    uint64_t max_scanned = 0;  // 0 = derived from sample_size
};

struct EvidenceReport {
    std::string poly_id;
    std::vector<std::string> poly_coeffs;  // "num/den", lowest degree first
    uint64_t q = 0;
    uint64_t seed = 0;
    int sample_size = 0;
    int primes_sampled = 0;
    uint64_t first_prime = 0, last_prime = 0;
    std::vector<uint64_t> skipped_primes;
    std::map<CycleType, long> pattern_counts;
    EvidenceVerdict verdict = EvidenceVerdict::Inconclusive;
    std::optional<std::pair<uint64_t, CycleType>> witness;  // for Inconsistent
    BigRat tv_distance = 0;       // meaningful when census was available
    bool census_available = false;
    bool all_types_observed = false;       // raw: every census type seen
    bool required_types_observed = false;  // every statistically visible type seen
    std::vector<CycleType> exempt_rare_types;  // expected count < 1 at this sample size
    bool transitivity_evidence = false;
    BigRat tv_threshold = 0;
    std::string note;
};

// Frobenius-pattern evidence that Gal(f) acting on the roots matches the
// fractional-linear action of PSL_2(F_q) on q+1 points. Degree patterns at
// the first sample_size usable primes are tested for membership in the
// cycle-type census; Consistent further requires every statistically visible
// census type observed (types with expected count below one at the chosen
// sample size are exempt and listed; demanding them would make any finite
// run fail on the totally-split class of density 1/|G|), total-variation
// distance within threshold, and that the observed patterns force a single
// orbit. For q beyond the exhaustive census cap the verdict is Inconclusive
// with sampled frequencies reported.
EvidenceReport galois_evidence(const PolyQ& f, uint64_t q, const EvidenceConfig& cfg,
                               const std::string& poly_id = "");

// census counts normalized by the group order
std::map<CycleType, BigRat> chebotarev_expected(uint64_t q);

}  // namespace psl2jac
