#include "psl2jac/smallgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace psl2jac {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& f, const Perm& g) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
}

Perm perm_inv(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<uint8_t>(i);
    return r;
}

int perm_order(const Perm& f) {
    Perm cur = f;
    Perm id = perm_identity(static_cast<int>(f.size()));
    int n = 1;
    while (cur != id) {
        cur = perm_mul(cur, f);
        ++n;
    }
    return n;
}

size_t SmallGroup::PermHasher::operator()(const Perm& p) const {
    size_t h = 1469598103934665603ULL;
    for (uint8_t x : p) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

SmallGroup::SmallGroup(int npoints, std::vector<Perm> generators, std::string name)
    : npoints_(npoints), name_(std::move(name)), gens_(std::move(generators)) {
    if (npoints_ < 1 || npoints_ > 12) throw std::invalid_argument("SmallGroup: 1..12 points supported");
    for (const auto& g : gens_)
        if (static_cast<int>(g.size()) != npoints_)
            throw std::invalid_argument("SmallGroup: generator size mismatch");
    // BFS closure; keep the identity first, then discovery order
    elements_.push_back(perm_identity(npoints_));
    index_[elements_[0]] = 0;
    std::vector<Perm> with_inv = gens_;
    for (const auto& g : gens_) with_inv.push_back(perm_inv(g));
    for (size_t head = 0; head < elements_.size(); ++head) {
        Perm cur = elements_[head];
        for (const auto& g : with_inv) {
            Perm nxt = perm_mul(cur, g);
            if (index_.emplace(nxt, static_cast<int>(elements_.size())).second) elements_.push_back(nxt);
        }
        if (elements_.size() > 200000) throw std::invalid_argument("SmallGroup: order too large");
    }
    inverse_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) inverse_[i] = lookup(perm_inv(elements_[i]));
}

int SmallGroup::lookup(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::logic_error("SmallGroup: element not in group");
    return it->second;
}

int SmallGroup::index_of(const Perm& p) const { return lookup(p); }

int SmallGroup::mul(int i, int j) const { return lookup(perm_mul(elements_[i], elements_[j])); }

int SmallGroup::inv(int i) const { return inverse_[i]; }

int SmallGroup::element_order(int i) const { return perm_order(elements_[i]); }

std::vector<int> SmallGroup::subgroup_closure(std::vector<int> seed) const {
    std::set<int> have{0};
    for (int s : seed) have.insert(s);
    std::vector<int> stack(have.begin(), have.end());
    std::vector<int> gens = seed;
    for (int s : seed) gens.push_back(inv(s));
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int g : gens) {
            int nxt = mul(cur, g);
            if (have.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return {have.begin(), have.end()};
}

std::vector<int> SmallGroup::normal_closure(const std::vector<int>& seed) const {
    std::vector<int> current = seed;
    for (;;) {
        std::vector<int> sub = subgroup_closure(current);
        std::set<int> sub_set(sub.begin(), sub.end());
        bool stable = true;
        for (int s : sub) {
            for (int g = 0; g < order() && stable; ++g) {
                int conj = mul(mul(g, s), inv(g));
                if (!sub_set.count(conj)) {
                    current.push_back(conj);
                    stable = false;
                }
            }
            if (!stable) break;
        }
        if (stable) return sub;
    }
}

bool SmallGroup::is_normal(const std::vector<int>& sub) const {
    std::set<int> s(sub.begin(), sub.end());
    for (int x : sub)
        for (int g = 0; g < order(); ++g)
            if (!s.count(mul(mul(g, x), inv(g)))) return false;
    return true;
}

std::vector<std::vector<int>> SmallGroup::normal_subgroups() const {
    std::set<std::vector<int>> found;
    found.insert({0});
    for (int i = 0; i < order(); ++i) found.insert(normal_closure({i}));
    // close under joins; every normal subgroup is a join of one-element
    // normal closures
    for (;;) {
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        bool grew = false;
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> both = cur[i];
                both.insert(both.end(), cur[j].begin(), cur[j].end());
                auto join = subgroup_closure(both);
                if (found.insert(join).second) grew = true;
            }
        if (!grew) break;
    }
    return {found.begin(), found.end()};
}

SmallGroup SmallGroup::cyclic(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("cyclic: n in 1..12");
    Perm g(n);
    for (int i = 0; i < n; ++i) g[i] = static_cast<uint8_t>((i + 1) % n);
    return SmallGroup(n, {g}, "Z" + std::to_string(n));
}

SmallGroup SmallGroup::symmetric(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("symmetric: n in 2..5");
    Perm cyc = perm_identity(n), swap = perm_identity(n);
    for (int i = 0; i < n; ++i) cyc[i] = static_cast<uint8_t>((i + 1) % n);
    std::swap(swap[0], swap[1]);
    return SmallGroup(n, {cyc, swap}, "S" + std::to_string(n));
}

SmallGroup SmallGroup::alternating(int n) {
    if (n < 3 || n > 6) throw std::invalid_argument("alternating: n in 3..6");
    std::vector<Perm> gens;
    Perm three = perm_identity(n);
    three[0] = 1; three[1] = 2; three[2] = 0;
    gens.push_back(three);
    if (n > 3) {
        Perm g = perm_identity(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) g[i] = static_cast<uint8_t>((i + 1) % n);  // n-cycle, even
        } else {
            for (int i = 1; i < n; ++i) g[i] = static_cast<uint8_t>(i % (n - 1) + 1);  // (n-1)-cycle fixing 0
        }
        gens.push_back(g);
    }
    return SmallGroup(n, gens, "A" + std::to_string(n));
}

SmallGroup SmallGroup::dihedral(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("dihedral: n in 2..6");
    Perm rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = static_cast<uint8_t>((i + 1) % n);
        ref[i] = static_cast<uint8_t>((n - i) % n);
    }
    return SmallGroup(n, {rot, ref}, "D" + std::to_string(n));
}

SmallGroup SmallGroup::klein4() {
    Perm a = {1, 0, 3, 2}, b = {2, 3, 0, 1};
    return SmallGroup(4, {a, b}, "V4");
}

SmallGroup SmallGroup::named(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'C')) return cyclic(std::stoi(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'S') return symmetric(std::stoi(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'A') return alternating(std::stoi(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'D') return dihedral(std::stoi(name.substr(1)));
    if (name == "V4") return klein4();
    throw std::invalid_argument("unknown group name: " + name);
}

namespace {

// quotient G/N as a multiplication table on coset ids
struct Quotient {
    int size = 0;
    std::vector<int> coset_of;           // element index -> coset id
    std::vector<int> rep;                // coset id -> representative element
    std::vector<std::vector<int>> mul;   // coset multiplication
    std::vector<int> order;              // element order within the quotient
};

Quotient make_quotient(const SmallGroup& g, const std::vector<int>& normal) {
    Quotient q;
    int n = g.order();
    q.coset_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (q.coset_of[x] >= 0) continue;
        int id = q.size++;
        q.rep.push_back(x);
        for (int h : normal) q.coset_of[g.mul(x, h)] = id;
    }
    q.mul.assign(q.size, std::vector<int>(q.size));
    for (int a = 0; a < q.size; ++a)
        for (int b = 0; b < q.size; ++b) q.mul[a][b] = q.coset_of[g.mul(q.rep[a], q.rep[b])];
    q.order.assign(q.size, 0);
    for (int a = 0; a < q.size; ++a) {
        int cur = a, k = 1;
        while (cur != q.coset_of[0]) {
            cur = q.mul[cur][a];
            ++k;
        }
        q.order[a] = k;
    }
    return q;
}

// small generating sequence of a quotient (greedy)
std::vector<int> quotient_generators(const Quotient& q) {
    std::vector<int> gens;
    std::set<int> have{0};
    while (static_cast<int>(have.size()) < q.size) {
        int pick = -1;
        for (int x = 0; x < q.size; ++x)
            if (!have.count(x)) { pick = x; break; }
        gens.push_back(pick);
        std::set<int> regen{0};
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int gg : gens) {
                int nx = q.mul[cur][gg];
                if (regen.insert(nx).second) stack.push_back(nx);
            }
        }
        have = std::move(regen);
    }
    return gens;
}

// all isomorphisms q1 -> q2, each returned as the image table coset->coset
void enumerate_isos(const Quotient& q1, const Quotient& q2, std::vector<std::vector<int>>& out) {
    if (q1.size != q2.size) return;
    std::vector<int> gens = quotient_generators(q1);
    std::vector<int> images(gens.size(), -1);
    std::vector<int> map(q1.size, -1);

    auto build_map = [&]() -> bool {
        std::fill(map.begin(), map.end(), -1);
        map[0] = 0;
        // BFS over words in the generators
        std::vector<int> stack{0};
        std::vector<int> mapped{0};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int nxt = q1.mul[cur][gens[gi]];
                int img = q2.mul[map[cur]][images[gi]];
                if (map[nxt] < 0) {
                    map[nxt] = img;
                    stack.push_back(nxt);
                } else if (map[nxt] != img) {
                    return false;
                }
            }
        }
        // homomorphism + bijectivity check
        std::vector<bool> hit(q2.size, false);
        for (int x = 0; x < q1.size; ++x) {
            if (map[x] < 0) return false;
            if (hit[map[x]]) return false;
            hit[map[x]] = true;
        }
        for (int a = 0; a < q1.size; ++a)
            for (int b = 0; b < q1.size; ++b)
                if (map[q1.mul[a][b]] != q2.mul[map[a]][map[b]]) return false;
        return true;
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            if (build_map()) out.push_back(map);
            return;
        }
        for (int cand = 0; cand < q2.size; ++cand) {
            if (q2.order[cand] != q1.order[gens[gi]]) continue;
            images[gi] = cand;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<SubdirectProduct> subdirect_products(const SmallGroup& g1, const SmallGroup& g2) {
    long long prod = static_cast<long long>(g1.order()) * g2.order();
    if (prod > 100000) throw std::invalid_argument("subdirect_products: |g1|*|g2| exceeds 100000");
    auto normals1 = g1.normal_subgroups();
    auto normals2 = g2.normal_subgroups();
    std::set<SubdirectProduct> out;
    for (const auto& n1 : normals1) {
        Quotient q1 = make_quotient(g1, n1);
        for (const auto& n2 : normals2) {
            if (static_cast<size_t>(g1.order()) * n2.size() != static_cast<size_t>(g2.order()) * n1.size())
                continue;  // quotient sizes differ
            Quotient q2 = make_quotient(g2, n2);
            std::vector<std::vector<int>> isos;
            enumerate_isos(q1, q2, isos);
            for (const auto& iso : isos) {
                SubdirectProduct h;
                h.kernel1_order = static_cast<int>(n1.size());
                h.kernel2_order = static_cast<int>(n2.size());
                for (int x = 0; x < g1.order(); ++x)
                    for (int y = 0; y < g2.order(); ++y)
                        if (iso[q1.coset_of[x]] == q2.coset_of[y]) h.pairs.emplace_back(x, y);
                std::sort(h.pairs.begin(), h.pairs.end());
                out.insert(std::move(h));
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace psl2jac
