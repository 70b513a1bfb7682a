#pragma once

#include <map>
#include <string>
#include <vector>

#include "psl2jac/finitefield.hpp"

namespace psl2jac {

// Element of PGL_2(F_q) in canonical form: the first nonzero entry in scan
// order (a, b, c, d) is scaled to 1. Members of PSL_2 are the classes whose
// determinant is a nonzero square.
struct ProjElement {
    uint32_t a, b, c, d;
    bool operator==(const ProjElement& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator<(const ProjElement& o) const {
        return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
};

ProjElement canonical_proj(const ExtField& F, uint32_t a, uint32_t b, uint32_t c, uint32_t d);
ProjElement proj_mul(const ExtField& F, const ProjElement& x, const ProjElement& y);

struct CycleType {
    std::vector<int> parts;  // nonincreasing, sums to the point count
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator<(const CycleType& o) const { return parts < o.parts; }
    int fixed_points() const;
    std::string to_string() const;
};

// Point order on P^1(F_q): indices 0..q-1 are the finite points by field
// element code, index q is the point at infinity.
std::vector<uint8_t> p1_permutation(const ExtField& F, const ProjElement& m);
CycleType cycle_type_of(const std::vector<uint8_t>& perm);

// Standard generating set: translations x -> x + e_i over an F_p-basis of
// F_q together with the inversion x -> -1/x (upper and lower transvections
// together generate SL_2 over any field).
std::vector<ProjElement> psl2_standard_generators(const ExtField& F);

// requires q an odd prime power <= 31 (exhaustive cap); exactly
// q(q^2-1)/2 canonical elements
std::vector<ProjElement> psl2_elements(uint64_t q);

using CycleCensus = std::map<CycleType, long>;

CycleCensus cycle_type_census(uint64_t q);

bool is_doubly_transitive(uint64_t q);
bool is_perfect(uint64_t q);

// Irreducible complex character degrees of SL_2(F_q) for odd q >= 5, from
// the closed-form census: 1, q, (q+1)/2 twice, (q-1)/2 twice, q+1 with
// multiplicity (q-3)/2 and q-1 with multiplicity (q-1)/2. The returned
// multiset is sorted ascending and the structural identities (size q+4,
// sum of squares q^3-q, minimal nontrivial degree (q-1)/2) are asserted.
std::vector<uint64_t> sl2_degree_census(uint64_t q);

struct GroupDescriptor {
    enum class Family { Sp, OmegaPlus, OmegaMinus, L, G2, PSL2, Other };
    Family family = Family::Other;
    unsigned n = 0;   // Sp_{2n}, Omega_{2n}, L_n
    uint64_t q = 0;   // field size
    bool derived = false;  // e.g. Sp_4(2)'
};

GroupDescriptor::Family parse_group_family(const std::string& name);

// The characteristic-2 Lie-type groups excluded from the small-degree
// projective representation theorem, including the listed exceptions.
bool is_ftkl_exceptional(const GroupDescriptor& g);

}  // namespace psl2jac
