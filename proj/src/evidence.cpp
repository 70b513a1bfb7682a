#include "psl2jac/evidence.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace psl2jac {

std::string to_string(EvidenceVerdict v) {
    switch (v) {
        case EvidenceVerdict::Consistent: return "consistent";
        case EvidenceVerdict::Inconsistent: return "inconsistent";
        case EvidenceVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::map<CycleType, BigRat> chebotarev_expected(uint64_t q) {
    auto census = cycle_type_census(q);
    BigInt order = 0;
    for (const auto& [t, c] : census) order += c;
    std::map<CycleType, BigRat> out;
    for (const auto& [t, c] : census) out[t] = make_rat(c, order);
    return out;
}

namespace {

std::vector<std::string> coeff_strings(const PolyQ& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coeffs()) out.push_back(BigRat(c).get_str());
    return out;
}

}  // namespace

EvidenceReport galois_evidence(const PolyQ& f, uint64_t q, const EvidenceConfig& cfg,
                               const std::string& poly_id) {
    if (cfg.sample_size < 1) throw std::invalid_argument("galois_evidence: sample_size >= 1");
    if (!(cfg.tv_threshold > 0 && cfg.tv_threshold < 1))
        throw std::invalid_argument("galois_evidence: tv_threshold in (0,1)");
    uint64_t p0;
    unsigned k0;
    if (!is_prime_power_u64(q, &p0, &k0) || p0 == 2)
        throw std::invalid_argument("galois_evidence: q must be an odd prime power");
    if (f.degree() != static_cast<int>(q) + 1)
        throw std::invalid_argument("galois_evidence: degree mismatch, expected q+1");
    if (!is_squarefree(f)) throw std::invalid_argument("galois_evidence: polynomial has multiple roots");

    EvidenceReport rep;
    rep.poly_id = poly_id;
    rep.poly_coeffs = coeff_strings(f);
    rep.q = q;
    rep.seed = cfg.seed;
    rep.sample_size = cfg.sample_size;
    rep.tv_threshold = cfg.tv_threshold;
    rep.census_available = q <= 31;

    // collect the first sample_size good primes
    std::vector<uint64_t> good;
    uint64_t scan_cap = cfg.max_scanned ? cfg.max_scanned : 200ULL * cfg.sample_size + 10000;
    uint64_t p = 1, scanned = 0;
    while (good.size() < static_cast<size_t>(cfg.sample_size)) {
        p = next_prime_u64(p);
        if (++scanned > scan_cap)
            throw std::runtime_error("galois_evidence: insufficient good primes below the scan bound");
        try {
            reduce_mod_p(f, p);
            good.push_back(p);
        } catch (const BadPrimeError&) {
            rep.skipped_primes.push_back(p);
        }
    }
    rep.first_prime = good.front();
    rep.last_prime = good.back();

    // factor at each good prime; chunked threads write into fixed slots so
    // the merged order never depends on the job count
    std::vector<DegreePattern> patterns(good.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < good.size(); ++i) patterns[i] = factor_degrees_mod_p(f, good[i], cfg.seed);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= good.size()) return;
                    patterns[i] = factor_degrees_mod_p(f, good[i], cfg.seed);
                }
            });
        for (auto& th : pool) th.join();
    }

    CycleCensus census;
    if (rep.census_available) census = cycle_type_census(q);

    for (size_t i = 0; i < patterns.size(); ++i) {
        CycleType t{patterns[i].degs};
        rep.pattern_counts[t] += 1;
        if (rep.census_available && !census.count(t) && !rep.witness) {
            rep.witness = std::make_pair(good[i], t);
        }
    }
    rep.primes_sampled = static_cast<int>(patterns.size());

    // transitivity evidence: the degree-shape sieve must leave only {q+1}
    {
        auto shapes = partitions_of(f.degree());
        std::vector<char> alive(shapes.size(), 1);
        size_t alive_count = shapes.size();
        for (const auto& [t, cnt] : rep.pattern_counts) {
            for (size_t s = 0; s < shapes.size(); ++s)
                if (alive[s] && !pattern_refines_shape(t.parts, shapes[s])) {
                    alive[s] = 0;
                    --alive_count;
                }
            if (alive_count == 1) break;
        }
        rep.transitivity_evidence = alive_count == 1;
    }

    if (!rep.census_available) {
        rep.verdict = EvidenceVerdict::Inconclusive;
        rep.note = "census unavailable for q > 31; pattern membership not tested";
        return rep;
    }
    if (rep.witness) {
        rep.verdict = EvidenceVerdict::Inconsistent;
        rep.note = "pattern outside the cycle-type census at p = " + std::to_string(rep.witness->first);
        return rep;
    }

    BigInt order = 0;
    for (const auto& [t, c] : census) order += c;
    rep.all_types_observed = true;
    rep.required_types_observed = true;
    for (const auto& [t, c] : census) {
        if (rep.pattern_counts.count(t)) continue;
        rep.all_types_observed = false;
        // expected count c/order * sample_size < 1 means the type is not
        // statistically visible at this sample size
        if (make_rat(c, order) * rep.primes_sampled < 1) rep.exempt_rare_types.push_back(t);
        else rep.required_types_observed = false;
    }
    BigRat tv = 0;
    for (const auto& [t, c] : census) {
        BigRat expected = make_rat(c, order);
        BigRat observed = 0;
        auto it = rep.pattern_counts.find(t);
        if (it != rep.pattern_counts.end()) observed = make_rat(it->second, rep.primes_sampled);
        BigRat d = observed - expected;
        if (d < 0) d = -d;
        tv += d;
    }
    rep.tv_distance = tv / 2;

    if (rep.required_types_observed && rep.tv_distance <= cfg.tv_threshold &&
        rep.transitivity_evidence) {
        rep.verdict = EvidenceVerdict::Consistent;
        if (!rep.exempt_rare_types.empty())
            rep.note = "census types with expected count below 1 were exempt from observation";
    } else {
        rep.verdict = EvidenceVerdict::Inconclusive;
        if (!rep.required_types_observed) rep.note = "a statistically visible census type was never observed";
        else if (!(rep.tv_distance <= cfg.tv_threshold)) rep.note = "total-variation distance above threshold";
        else rep.note = "observed patterns do not force transitivity";
    }
    return rep;
}

}  // namespace psl2jac
