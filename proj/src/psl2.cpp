#include "psl2jac/psl2.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace psl2jac {

namespace {

constexpr uint64_t kExhaustiveCap = 31;

ExtField field_for(uint64_t q) {
    uint64_t p;
    unsigned k;
    if (!is_prime_power_u64(q, &p, &k) || p == 2)
        throw std::invalid_argument("q must be an odd prime power");
    return ExtField(p, k);
}

ExtField field_for_census(uint64_t q) {
    if (q > kExhaustiveCap) throw std::invalid_argument("q exceeds the exhaustive cap 31");
    return field_for(q);
}

std::vector<bool> nonzero_square_table(const ExtField& F) {
    std::vector<bool> sq(F.q(), false);
    for (uint32_t x = 1; x < F.q(); ++x) sq[F.mul(x, x)] = true;
    return sq;
}

}  // namespace

ProjElement canonical_proj(const ExtField& F, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    uint32_t det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) throw std::domain_error("singular projective matrix");
    uint32_t first = a ? a : (b ? b : (c ? c : d));
    uint32_t s = F.inv(first);
    return {F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s)};
}

ProjElement proj_mul(const ExtField& F, const ProjElement& x, const ProjElement& y) {
    uint32_t a = F.add(F.mul(x.a, y.a), F.mul(x.b, y.c));
    uint32_t b = F.add(F.mul(x.a, y.b), F.mul(x.b, y.d));
    uint32_t c = F.add(F.mul(x.c, y.a), F.mul(x.d, y.c));
    uint32_t d = F.add(F.mul(x.c, y.b), F.mul(x.d, y.d));
    return canonical_proj(F, a, b, c, d);
}

int CycleType::fixed_points() const {
    int n = 0;
    for (int p : parts)
        if (p == 1) ++n;
    return n;
}

std::string CycleType::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    return out.str();
}

std::vector<uint8_t> p1_permutation(const ExtField& F, const ProjElement& m) {
    uint64_t q = F.q();
    std::vector<uint8_t> perm(q + 1);
    for (uint32_t x = 0; x < q; ++x) {
        uint32_t den = F.add(F.mul(m.c, x), m.d);
        if (den == 0) {
            perm[x] = static_cast<uint8_t>(q);
        } else {
            uint32_t num = F.add(F.mul(m.a, x), m.b);
            perm[x] = static_cast<uint8_t>(F.mul(num, F.inv(den)));
        }
    }
    perm[q] = m.c == 0 ? static_cast<uint8_t>(q) : static_cast<uint8_t>(F.mul(m.a, F.inv(m.c)));
    return perm;
}

CycleType cycle_type_of(const std::vector<uint8_t>& perm) {
    size_t n = perm.size();
    std::vector<bool> seen(n, false);
    CycleType t;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        t.parts.push_back(len);
    }
    std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
    return t;
}

std::vector<ProjElement> psl2_standard_generators(const ExtField& F) {
    std::vector<ProjElement> gens;
    uint64_t basis = 1;
    for (unsigned i = 0; i < F.k(); ++i) {
        gens.push_back(canonical_proj(F, F.one(), static_cast<uint32_t>(basis), F.zero(), F.one()));
        basis *= F.p();
    }
    gens.push_back(canonical_proj(F, F.zero(), F.neg(F.one()), F.one(), F.zero()));
    return gens;
}

std::vector<ProjElement> psl2_elements(uint64_t q) {
    ExtField F = field_for_census(q);
    auto sq = nonzero_square_table(F);
    std::vector<ProjElement> out;
    out.reserve(q * (q * q - 1) / 2);
    // canonical reps: a = 1 free (b, c, d), or a = 0, b = 1, c != 0, d free
    for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c)
            for (uint32_t d = 0; d < q; ++d) {
                uint32_t det = F.sub(d, F.mul(b, c));
                if (det != 0 && sq[det]) out.push_back({F.one(), b, c, d});
            }
    for (uint32_t c = 1; c < q; ++c) {
        if (!sq[F.neg(c)]) continue;
        for (uint32_t d = 0; d < q; ++d) out.push_back({F.zero(), F.one(), c, d});
    }
    if (out.size() != q * (q * q - 1) / 2) throw std::logic_error("PSL2 enumeration size mismatch");
    return out;
}

CycleCensus cycle_type_census(uint64_t q) {
    ExtField F = field_for_census(q);
    CycleCensus census;
    for (const auto& m : psl2_elements(q)) census[cycle_type_of(p1_permutation(F, m))] += 1;
    long total = 0;
    for (const auto& [t, c] : census) total += c;
    if (static_cast<uint64_t>(total) != q * (q * q - 1) / 2)
        throw std::logic_error("census total mismatch");
    return census;
}

bool is_doubly_transitive(uint64_t q) {
    ExtField F = field_for_census(q);
    auto gens = psl2_standard_generators(F);
    std::vector<std::vector<uint8_t>> gen_perms;
    for (const auto& g : gens) gen_perms.push_back(p1_permutation(F, g));
    size_t n = q + 1;
    // orbit of the ordered pair (0, 1) under the generators
    std::vector<bool> seen(n * n, false);
    std::vector<std::pair<uint8_t, uint8_t>> stack{{0, 1}};
    seen[0 * n + 1] = true;
    size_t orbit = 0;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++orbit;
        for (const auto& gp : gen_perms) {
            uint8_t gx = gp[x], gy = gp[y];
            if (!seen[gx * n + gy]) {
                seen[gx * n + gy] = true;
                stack.emplace_back(gx, gy);
            }
        }
    }
    bool by_orbit = orbit == n * (n - 1);
    // Burnside cross-check from the census: one orbit on ordered distinct
    // pairs means sum of fix(g)(fix(g)-1) equals |G|, equivalently the
    // permutation character has rank 2.
    auto census = cycle_type_census(q);
    long order = 0, pair_fix = 0;
    for (const auto& [t, c] : census) {
        order += c;
        long f = t.fixed_points();
        pair_fix += c * f * (f - 1);
    }
    bool by_census = pair_fix == order;
    if (by_orbit != by_census) throw std::logic_error("double transitivity routes disagree");
    return by_orbit;
}

namespace {

struct PermHash {
    size_t operator()(const std::vector<uint8_t>& v) const {
        size_t h = 1469598103934665603ULL;
        for (uint8_t x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::vector<uint8_t> perm_compose(const std::vector<uint8_t>& f, const std::vector<uint8_t>& g) {
    std::vector<uint8_t> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
}

std::vector<uint8_t> perm_inverse(const std::vector<uint8_t>& f) {
    std::vector<uint8_t> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<uint8_t>(i);
    return r;
}

using PermSet = std::unordered_set<std::vector<uint8_t>, PermHash>;

// subgroup generated by gens (as permutation closure)
PermSet closure(const std::vector<std::vector<uint8_t>>& gens, size_t npoints) {
    std::vector<uint8_t> id(npoints);
    for (size_t i = 0; i < npoints; ++i) id[i] = static_cast<uint8_t>(i);
    PermSet seen{id};
    std::vector<std::vector<uint8_t>> stack{id};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            auto nxt = perm_compose(cur, g);
            if (seen.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return seen;
}

}  // namespace

bool is_perfect(uint64_t q) {
    ExtField F = field_for_census(q);
    auto gens = psl2_standard_generators(F);
    std::vector<std::vector<uint8_t>> gen_perms, gen_inv;
    for (const auto& g : gens) {
        gen_perms.push_back(p1_permutation(F, g));
        gen_inv.push_back(perm_inverse(gen_perms.back()));
    }
    // normal closure of the commutators of the generating set
    std::vector<std::vector<uint8_t>> seed;
    for (size_t i = 0; i < gen_perms.size(); ++i)
        for (size_t j = 0; j < gen_perms.size(); ++j) {
            auto comm = perm_compose(perm_compose(gen_perms[i], gen_perms[j]),
                                     perm_compose(gen_inv[i], gen_inv[j]));
            seed.push_back(comm);
        }
    for (;;) {
        std::vector<std::vector<uint8_t>> with_inverses = seed;
        for (const auto& s : seed) with_inverses.push_back(perm_inverse(s));
        PermSet sub = closure(with_inverses, q + 1);
        bool stable = true;
        for (const auto& s : sub) {
            for (size_t i = 0; i < gen_perms.size() && stable; ++i) {
                auto conj = perm_compose(perm_compose(gen_perms[i], s), gen_inv[i]);
                if (!sub.count(conj)) {
                    seed.push_back(conj);
                    stable = false;
                }
            }
            if (!stable) break;
        }
        if (stable) return sub.size() == q * (q * q - 1) / 2;
    }
}

std::vector<uint64_t> sl2_degree_census(uint64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("sl2_degree_census: q must be odd");
    if (q < 5) throw std::invalid_argument("sl2_degree_census: q must be >= 5");
    if (q > 1000000) throw std::invalid_argument("sl2_degree_census: q too large to materialize");
    std::vector<uint64_t> degs;
    degs.reserve(q + 4);
    degs.push_back(1);
    degs.push_back(q);
    degs.push_back((q + 1) / 2);
    degs.push_back((q + 1) / 2);
    degs.push_back((q - 1) / 2);
    degs.push_back((q - 1) / 2);
    for (uint64_t i = 0; i < (q - 3) / 2; ++i) degs.push_back(q + 1);
    for (uint64_t i = 0; i < (q - 1) / 2; ++i) degs.push_back(q - 1);
    std::sort(degs.begin(), degs.end());
    // structural identities of the character table
    if (degs.size() != q + 4) throw std::logic_error("degree census size mismatch");
    BigInt sumsq = 0;
    for (uint64_t d : degs) sumsq += BigInt(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    BigInt expect = BigInt(static_cast<unsigned long>(q));
    expect = expect * expect * expect - expect;
    if (sumsq != expect) throw std::logic_error("degree census sum-of-squares mismatch");
    if (degs[1] != (q - 1) / 2) throw std::logic_error("minimal nontrivial degree mismatch");
    return degs;
}

GroupDescriptor::Family parse_group_family(const std::string& name) {
    using F = GroupDescriptor::Family;
    if (name == "Sp") return F::Sp;
    if (name == "OmegaPlus" || name == "O+" || name == "Omega+") return F::OmegaPlus;
    if (name == "OmegaMinus" || name == "O-" || name == "Omega-") return F::OmegaMinus;
    if (name == "L") return F::L;
    if (name == "G2") return F::G2;
    if (name == "PSL2") return F::PSL2;
    if (name == "other" || name == "Other") return F::Other;
    throw std::invalid_argument("unknown group family: " + name);
}

bool is_ftkl_exceptional(const GroupDescriptor& g) {
    uint64_t p;
    unsigned k;
    if (!is_prime_power_u64(g.q, &p, &k))
        throw std::invalid_argument("malformed descriptor: q must be a prime power >= 2");
    bool even_q = (p == 2);
    using F = GroupDescriptor::Family;
    switch (g.family) {
        case F::Sp:
            if (g.n < 1) throw std::invalid_argument("malformed descriptor: Sp needs n >= 1");
            if (!even_q || g.n < 2) return false;
            if (g.q == 2 && (g.n == 2 || g.n == 3)) return false;  // Sp4(2)' and Sp6(2)
            return true;
        case F::OmegaPlus:
        case F::OmegaMinus:
            if (g.n < 1) throw std::invalid_argument("malformed descriptor: Omega needs n >= 1");
            if (!even_q || g.n < 4) return false;
            if (g.family == F::OmegaPlus && g.n == 4 && g.q == 2) return false;  // Omega8+(2)
            return true;
        case F::L:
            if (g.n < 2) throw std::invalid_argument("malformed descriptor: L needs n >= 2");
            if (!even_q || g.n != 4) return false;
            return g.q != 2;  // L4(2) excepted
        case F::G2:
            // only q = 2^{2e}; all other q fall outside the definition
            if (!(even_q && k >= 2 && k % 2 == 0)) return false;
            return g.q != 4;  // G2(4) excepted
        case F::PSL2:
        case F::Other:
            return false;
    }
    throw std::invalid_argument("malformed descriptor");
}

}  // namespace psl2jac
