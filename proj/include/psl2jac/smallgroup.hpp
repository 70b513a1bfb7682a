#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace psl2jac {

// Permutation on up to 12 points.
using Perm = std::vector<uint8_t>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& f, const Perm& g);  // (f*g)(i) = f(g(i))
Perm perm_inv(const Perm& f);
int perm_order(const Perm& f);

// Finite permutation group with a cached, index-addressed element list.
// Element 0 is the identity.
class SmallGroup {
  public:
    SmallGroup(int npoints, std::vector<Perm> generators, std::string name = "");

    const std::string& name() const { return name_; }
    int npoints() const { return npoints_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }
    int index_of(const Perm& p) const;  // throws if absent

    int mul(int i, int j) const;
    int inv(int i) const;
    int element_order(int i) const;

    // subgroup as a sorted list of element indices
    std::vector<int> subgroup_closure(std::vector<int> seed) const;
    std::vector<int> normal_closure(const std::vector<int>& seed) const;
    bool is_normal(const std::vector<int>& sub) const;

    // every normal subgroup, as sorted index lists, found by join-closing
    // the normal closures of the cyclic subgroups
    std::vector<std::vector<int>> normal_subgroups() const;

    // well-known groups for the CLI and tests
    static SmallGroup cyclic(int n);
    static SmallGroup symmetric(int n);      // n <= 5
    static SmallGroup alternating(int n);    // n <= 6
    static SmallGroup dihedral(int n);       // order 2n, n >= 2
    static SmallGroup klein4();
    static SmallGroup named(const std::string& name);  // "A5", "S3", "Z6", "D4", ...

  private:
    struct PermHasher {
        size_t operator()(const Perm& p) const;
    };
    int lookup(const Perm& p) const;

    int npoints_;
    std::string name_;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::vector<int> inverse_;
    std::unordered_map<Perm, int, PermHasher> index_;
};

// Subgroup of g1 x g2 with surjective projections, as a sorted list of
// (element index in g1, element index in g2) pairs.
struct SubdirectProduct {
    std::vector<std::pair<int, int>> pairs;
    int kernel1_order = 0;  // |H1| where H1 x 1 = ker p2
    int kernel2_order = 0;
    bool operator==(const SubdirectProduct& o) const { return pairs == o.pairs; }
    bool operator<(const SubdirectProduct& o) const { return pairs < o.pairs; }
};

// All subdirect products via the quotient-graph classification: enumerate
// normal subgroups N1, N2, the isomorphisms G1/N1 -> G2/N2, and take the
// preimage of each graph. Requires |g1| * |g2| <= 100000.
std::vector<SubdirectProduct> subdirect_products(const SmallGroup& g1, const SmallGroup& g2);

}  // namespace psl2jac
