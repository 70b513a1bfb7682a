#pragma once

#include "psl2jac/evidence.hpp"
#include "psl2jac/modular.hpp"
#include "psl2jac/permmod.hpp"
#include "psl2jac/quadorder.hpp"

namespace psl2jac {

// f_{11,s}: (x^3 - 66x - 308)^4
//           - 9T (11x^5 - 44x^4 - 1573x^3 + 1892x^2 + 57358x + 103763)
//           - 3T^2 (x - 11),            T = 2^8 3^5 / (11 s^2 + 1)
PolyQ build_f11(const BigRat& s);

// f_{13,s}: (x^2 + 36)(x^3 - x^2 + 35x - 27)^4
//           - 4T (7x^2 - 2x + 247)(x^2 + 39)^6 / 27,   T = 1 / (39 s^2 + 1)
PolyQ build_f13(const BigRat& s);

struct PipelineConfig {
    uint64_t seed = 0;
    int sample_size = 500;
    BigRat tv_threshold = make_rat(3, 20);
    unsigned precision_bits = 256;
    int irreducibility_budget = 120;
    int jobs = 1;
};

struct StageResult {
    std::string name;
    bool ran = false;
    bool passed = false;
    std::string detail;
};

struct PipelineReport {
    int schema = 1;
    std::string family_id;  // "f11", "f13", or "custom"
    uint64_t q = 0;
    std::string s;          // parameter as exact rational string, empty for custom input
    PipelineConfig config;
    std::vector<std::string> poly_coeffs;
    int genus = 0;

    StageResult squarefree;
    StageResult irreducibility;
    StageResult evidence_stage;
    StageResult commutant_stage;
    StageResult class_number_stage;  // q = 3 mod 8 only
    StageResult s3_stage;            // q = 3 mod 8 and integral j only

    EvidenceReport evidence;
    std::string commutant_kind;
    std::optional<ThreeHCheck> three_h;
    std::optional<BigInt> j_integer;
    std::string s3_verdict;

    bool all_passed = false;
    std::string conclusion;
    std::vector<std::string> failures;
};

// Runs the verification stages in order over f: squarefreeness, an
// irreducibility certificate, Frobenius-pattern evidence against the
// PSL_2(F_q) census, the commutant computation, and for q = 3 mod 8 the
// class-number relation and the CM-cubic Galois check. Failures do not stop
// later stages.
PipelineReport run_pipeline_poly(const PolyQ& f, uint64_t q, const PipelineConfig& cfg,
                                 const std::string& family_id, const std::string& s_label);

// q must be 11 or 13; s parametrizes the built-in families
PipelineReport run_pipeline(uint64_t q, const BigRat& s, const PipelineConfig& cfg);

// the parameter grid m/n for nonzero integers -5 <= m, n <= 5, reduced and
// deduplicated, in ascending order
std::vector<BigRat> parameter_grid();

}  // namespace psl2jac
