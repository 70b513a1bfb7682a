#include "psl2jac/report_json.hpp"

#include <fstream>

namespace psl2jac {

Json census_to_json(uint64_t q, const CycleCensus& census) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "census";
    j["q"] = q;
    long order = 0;
    for (const auto& [t, c] : census) order += c;
    j["order"] = order;
    Json rows = Json::array();
    // largest cycle types first
    for (auto it = census.rbegin(); it != census.rend(); ++it) {
        Json row;
        row["type"] = it->first.parts;
        row["count"] = it->second;
        rows.push_back(row);
    }
    j["census"] = rows;
    return j;
}

Json evidence_to_json(const EvidenceReport& rep) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "evidence";
    j["polynomial_id"] = rep.poly_id;
    j["polynomial"] = rep.poly_coeffs;
    j["q"] = rep.q;
    j["seed"] = rep.seed;
    j["sample_size"] = rep.sample_size;
    j["primes_sampled"] = rep.primes_sampled;
    j["first_prime"] = rep.first_prime;
    j["last_prime"] = rep.last_prime;
    j["skipped_primes"] = rep.skipped_primes;
    Json pats = Json::object();
    for (auto it = rep.pattern_counts.rbegin(); it != rep.pattern_counts.rend(); ++it)
        pats[it->first.to_string()] = it->second;
    j["patterns"] = pats;
    j["verdict"] = to_string(rep.verdict);
    j["census_available"] = rep.census_available;
    j["all_types_observed"] = rep.all_types_observed;
    j["required_types_observed"] = rep.required_types_observed;
    Json exempt = Json::array();
    for (const auto& t : rep.exempt_rare_types) exempt.push_back(t.parts);
    j["exempt_rare_types"] = exempt;
    j["transitivity_evidence"] = rep.transitivity_evidence;
    j["tv_distance"] = rep.tv_distance.get_str();
    j["tv_distance_approx"] = rep.tv_distance.get_d();
    j["tv_threshold"] = rep.tv_threshold.get_str();
    Json wits = Json::array();
    if (rep.witness) {
        Json w;
        w["prime"] = rep.witness->first;
        w["pattern"] = rep.witness->second.parts;
        wits.push_back(w);
    }
    j["witnesses"] = wits;
    j["note"] = rep.note;
    return j;
}

namespace {

Json stage_to_json(const StageResult& st) {
    Json j;
    j["name"] = st.name;
    j["ran"] = st.ran;
    j["passed"] = st.passed;
    j["detail"] = st.detail;
    return j;
}

}  // namespace

Json pipeline_to_json(const PipelineReport& rep) {
    Json j;
    j["schema"] = rep.schema;
    j["kind"] = "pipeline";
    j["family"] = rep.family_id;
    j["q"] = rep.q;
    j["s"] = rep.s;
    Json cfg;
    cfg["seed"] = rep.config.seed;
    cfg["sample_size"] = rep.config.sample_size;
    cfg["tv_threshold"] = rep.config.tv_threshold.get_str();
    cfg["precision_bits"] = rep.config.precision_bits;
    cfg["irreducibility_budget"] = rep.config.irreducibility_budget;
    cfg["jobs"] = rep.config.jobs;
    j["config"] = cfg;
    j["polynomial"] = rep.poly_coeffs;
    j["genus"] = rep.genus;
    Json stages = Json::array();
    for (const auto* st : {&rep.squarefree, &rep.irreducibility, &rep.evidence_stage,
                           &rep.commutant_stage, &rep.class_number_stage, &rep.s3_stage})
        stages.push_back(stage_to_json(*st));
    j["stages"] = stages;
    j["evidence"] = rep.evidence_stage.ran ? evidence_to_json(rep.evidence) : Json();
    j["commutant"] = rep.commutant_kind;
    if (rep.three_h) {
        Json th;
        th["h"] = rep.three_h->h;
        th["h2"] = rep.three_h->h2;
        th["ok"] = rep.three_h->ok;
        j["class_number_check"] = th;
    } else {
        j["class_number_check"] = Json();
    }
    j["j_integer"] = rep.j_integer ? Json(rep.j_integer->get_str()) : Json();
    j["s3_verdict"] = rep.s3_verdict;
    j["all_passed"] = rep.all_passed;
    j["conclusion"] = rep.conclusion;
    j["failures"] = rep.failures;
    return j;
}

PolyQ poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
    std::vector<std::string> coeffs;
    for (const auto& c : j) {
        if (c.is_string()) coeffs.push_back(c.get<std::string>());
        else if (c.is_number_integer()) coeffs.push_back(std::to_string(c.get<long long>()));
        else throw std::invalid_argument("polynomial coefficients must be strings");
    }
    return PolyQ::from_strings(coeffs);
}

PolyQ poly_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    Json j;
    in >> j;
    return poly_from_json(j);
}

}  // namespace psl2jac
