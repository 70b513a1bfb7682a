#include "psl2jac/families.hpp"

#include <algorithm>
#include <set>

namespace psl2jac {

PolyQ build_f11(const BigRat& s) {
    BigRat T = BigRat(62208) / (BigRat(11) * s * s + 1);  // 2^8 3^5
    PolyQ core({BigRat(-308), BigRat(-66), BigRat(0), BigRat(1)});
    PolyQ mid({BigRat(103763), BigRat(57358), BigRat(1892), BigRat(-1573), BigRat(-44), BigRat(11)});
    PolyQ lin({BigRat(-11), BigRat(1)});
    return core.pow(4) - mid * (BigRat(9) * T) - lin * (BigRat(3) * T * T);
}

PolyQ build_f13(const BigRat& s) {
    BigRat T = BigRat(1) / (BigRat(39) * s * s + 1);
    PolyQ quad({BigRat(36), BigRat(0), BigRat(1)});
    PolyQ core({BigRat(-27), BigRat(35), BigRat(-1), BigRat(1)});
    PolyQ win({BigRat(247), BigRat(-2), BigRat(7)});
    PolyQ shell({BigRat(39), BigRat(0), BigRat(1)});
    return quad * core.pow(4) - win * shell.pow(6) * (BigRat(4) * T / 27);
}

std::vector<BigRat> parameter_grid() {
    std::set<BigRat> vals;
    for (int m = -5; m <= 5; ++m) {
        if (m == 0) continue;
        for (int n = -5; n <= 5; ++n) {
            if (n == 0) continue;
            vals.insert(make_rat(m, n));
        }
    }
    return {vals.begin(), vals.end()};
}

namespace {

bool is_integral_j_prime(uint64_t p) {
    return p == 3 || p == 11 || p == 19 || p == 43 || p == 67 || p == 163;
}

}  // namespace

PipelineReport run_pipeline_poly(const PolyQ& f, uint64_t q, const PipelineConfig& cfg,
                                 const std::string& family_id, const std::string& s_label) {
    PipelineReport rep;
    rep.family_id = family_id;
    rep.q = q;
    rep.s = s_label;
    rep.config = cfg;
    for (const auto& c : f.coeffs()) rep.poly_coeffs.push_back(BigRat(c).get_str());
    uint64_t p0;
    unsigned k0;
    if (!is_prime_power_u64(q, &p0, &k0) || p0 == 2)
        throw std::invalid_argument("run_pipeline: q must be an odd prime power");
    if (f.degree() != static_cast<int>(q) + 1)
        throw std::invalid_argument("run_pipeline: polynomial degree must be q + 1");
    rep.genus = (f.degree() - 2) / 2;  // = (q-1)/2

    auto fail = [&](StageResult& st, const std::string& why) {
        st.ran = true;
        st.passed = false;
        st.detail = why;
        rep.failures.push_back(st.name + ": " + why);
    };

    rep.squarefree.name = "squarefree";
    rep.squarefree.ran = true;
    rep.squarefree.passed = is_squarefree(f);
    if (!rep.squarefree.passed) rep.failures.push_back("squarefree: polynomial has multiple roots");

    rep.irreducibility.name = "irreducibility";
    if (rep.squarefree.passed) {
        auto irr = irreducible_over_Q(f, cfg.irreducibility_budget, cfg.seed);
        rep.irreducibility.ran = true;
        switch (irr.kind) {
            case IrreducibilityResult::Kind::Certified:
                rep.irreducibility.passed = true;
                rep.irreducibility.detail =
                    "certified at p = " + std::to_string(irr.certified_prime) + " after " +
                    std::to_string(irr.primes_used) + " primes";
                break;
            case IrreducibilityResult::Kind::Reducible:
                fail(rep.irreducibility, "reducible, rational root " + irr.rational_root->get_str());
                break;
            case IrreducibilityResult::Kind::Inconclusive:
                fail(rep.irreducibility, "no certificate within the prime budget");
                break;
        }
    }

    rep.evidence_stage.name = "galois_evidence";
    if (rep.squarefree.passed) {
        EvidenceConfig ec;
        ec.sample_size = cfg.sample_size;
        ec.tv_threshold = cfg.tv_threshold;
        ec.seed = cfg.seed;
        ec.jobs = cfg.jobs;
        rep.evidence = galois_evidence(f, q, ec, family_id + (s_label.empty() ? "" : ",s=" + s_label));
        rep.evidence_stage.ran = true;
        rep.evidence_stage.passed = rep.evidence.verdict == EvidenceVerdict::Consistent;
        rep.evidence_stage.detail = to_string(rep.evidence.verdict) +
                                    (rep.evidence.note.empty() ? "" : " (" + rep.evidence.note + ")");
        if (!rep.evidence_stage.passed)
            rep.failures.push_back("galois_evidence: " + rep.evidence_stage.detail);
    }

    rep.commutant_stage.name = "commutant";
    if (q <= 31) {
        rep.commutant_stage.ran = true;
        uint64_t r8 = q % 8;
        auto st = commutant(build_q_module(q));
        rep.commutant_kind = to_string(st.kind);
        if (r8 == 3 || r8 == 5) {
            rep.commutant_stage.passed = st.kind == CommutantKind::F4;
            rep.commutant_stage.detail = rep.commutant_kind;
            if (!rep.commutant_stage.passed)
                rep.failures.push_back("commutant: expected F4, got " + rep.commutant_kind);
        } else {
            rep.commutant_stage.passed = true;
            rep.commutant_stage.detail = rep.commutant_kind + " (no expectation for q = +-1 mod 8)";
        }
    } else {
        rep.commutant_stage.detail = "skipped: q beyond the exhaustive cap 31";
    }

    rep.class_number_stage.name = "class_number_3h";
    rep.s3_stage.name = "cm_cubic_s3";
    if (q % 8 == 3) {
        // q is an odd power of p0, and q = 3 mod 8 forces p0 = 3 mod 8 for
        // odd k; the built-in families have q = p prime
        rep.class_number_stage.ran = true;
        if (p0 == 3) {
            rep.class_number_stage.passed = true;
            rep.class_number_stage.detail = "p = 3: class number 1, relation not defined (p > 3 required)";
        } else {
            auto th = verify_3h(BigInt(static_cast<unsigned long>(p0)));
            rep.three_h = th;
            rep.class_number_stage.passed = th.ok;
            rep.class_number_stage.detail = "h(-p) = " + std::to_string(th.h) + ", h(-4p) = " +
                                            std::to_string(th.h2);
            if (!th.ok) rep.failures.push_back("class_number_3h: 3h relation failed");
        }

        if (is_integral_j_prime(p0)) {
            rep.s3_stage.ran = true;
            PolyQ hp;
            if (p0 == 3) {
                hp = build_h3();
            } else {
                auto jn = j_from_tau(BigInt(static_cast<unsigned long>(p0)), cfg.precision_bits);
                if (!jn.integer_candidate)
                    throw std::logic_error("expected an integral j-value");
                rep.j_integer = jn.integer_candidate;
                hp = build_hp(BigRat(*jn.integer_candidate));
            }
            auto verdict = gal_s3_verdict(hp, cfg.irreducibility_budget, cfg.seed);
            rep.s3_verdict = to_string(verdict);
            rep.s3_stage.passed = verdict == S3Verdict::S3;
            rep.s3_stage.detail = rep.s3_verdict;
            if (!rep.s3_stage.passed) rep.failures.push_back("cm_cubic_s3: verdict " + rep.s3_verdict);
        } else {
            rep.s3_stage.detail = "skipped: j((-1+sqrt(-p))/2) is not an exact integer for this p";
        }
    } else {
        rep.class_number_stage.detail = "not applicable: q = 5 mod 8";
        rep.s3_stage.detail = "not applicable: q = 5 mod 8";
    }

    rep.all_passed = rep.failures.empty();
    if (rep.all_passed) {
        bool cm_excluded = q % 8 != 3 || rep.s3_stage.ran;
        if (cm_excluded) {
            rep.conclusion =
                "checks support: the genus-" + std::to_string(rep.genus) +
                " jacobian is absolutely simple with endomorphism algebra Q or a quadratic field"
                " (Galois identification is statistical evidence, not proof)";
        } else {
            rep.conclusion =
                "checks support: endomorphism algebra Q or a quadratic field, or an isogeny to a"
                " self-product of a CM elliptic curve (exact CM exclusion unavailable for this q);"
                " Galois identification is statistical evidence, not proof";
        }
    }
    return rep;
}

PipelineReport run_pipeline(uint64_t q, const BigRat& s, const PipelineConfig& cfg) {
    if (q == 11) return run_pipeline_poly(build_f11(s), 11, cfg, "f11", s.get_str());
    if (q == 13) return run_pipeline_poly(build_f13(s), 13, cfg, "f13", s.get_str());
    throw std::invalid_argument("run_pipeline: built-in families exist for q = 11 and q = 13 only");
}

}  // namespace psl2jac
