#include "psl2jac/permmod.hpp"

#include <stdexcept>

namespace psl2jac {

F2Module build_perm_module(int npoints, const std::vector<std::vector<uint8_t>>& perms,
                           const std::string& label) {
    if (npoints < 3) throw std::invalid_argument("build_perm_module: need at least 3 points");
    int n = npoints;
    bool even = (n % 2 == 0);
    int dim = even ? n - 2 : n - 1;
    // basis classes w_i = delta_i + delta_{n-1} for i < dim; w_{n-1} = 0 and,
    // for even n, w_{n-2} = sum of the basis classes (the all-ones relation)
    F2Module mod;
    mod.dim = dim;
    mod.label = label;
    for (const auto& perm : perms) {
        if (static_cast<int>(perm.size()) != n)
            throw std::invalid_argument("build_perm_module: permutation size mismatch");
        F2Matrix M(dim, dim);
        for (int col = 0; col < dim; ++col) {
            // image of w_col is delta_{perm(col)} + delta_{perm(n-1)}
            for (int point : {static_cast<int>(perm[col]), static_cast<int>(perm[n - 1])}) {
                if (point == n - 1) continue;  // w_{n-1} = 0
                if (even && point == n - 2) {
                    for (int r = 0; r < dim; ++r)
                        M.set(r, col, !M.get(r, col));
                } else {
                    M.set(point, col, !M.get(point, col));
                }
            }
        }
        if (!M.invertible()) throw std::logic_error("permutation module generator not invertible");
        mod.gens.push_back(std::move(M));
    }
    return mod;
}

F2Module build_q_module(uint64_t q) {
    uint64_t p;
    unsigned k;
    if (!is_prime_power_u64(q, &p, &k) || p == 2)
        throw std::invalid_argument("build_q_module: q must be an odd prime power");
    if (q > 31) throw std::invalid_argument("build_q_module: q exceeds the exhaustive cap 31");
    ExtField F(p, k);
    // point order: finite elements 0..q-1, infinity last (the zero class)
    std::vector<std::vector<uint8_t>> perms;
    for (const auto& g : psl2_standard_generators(F)) perms.push_back(p1_permutation(F, g));
    return build_perm_module(static_cast<int>(q) + 1, perms, "Q(P1(F_" + std::to_string(q) + "))");
}

std::string to_string(CommutantKind k) {
    switch (k) {
        case CommutantKind::F2: return "F2";
        case CommutantKind::F4: return "F4";
        case CommutantKind::F2xF2: return "F2xF2";
        case CommutantKind::DualNumbers: return "F2[e]/(e^2)";
        case CommutantKind::Other: return "other";
    }
    return "other";
}

CommutantStructure commutant(const F2Module& m) {
    int d = m.dim;
    if (d < 1) throw std::invalid_argument("commutant: empty module");
    // unknowns X[i][j] (row-major); for each generator A the constraint is
    // (X A + A X)[i][j] = 0 over F_2
    int nun = d * d;
    F2Matrix sys(static_cast<int>(m.gens.size()) * nun, nun);
    int row = 0;
    for (const auto& A : m.gens) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k) {
                    if (A.get(k, j)) sys.set(row, i * d + k, !sys.get(row, i * d + k));
                    if (A.get(i, k)) sys.set(row, k * d + j, !sys.get(row, k * d + j));
                }
                ++row;
            }
        }
    }
    auto kernel = f2_solve_kernel(sys);
    CommutantStructure out;
    out.dim = static_cast<int>(kernel.size());
    for (const auto& v : kernel) {
        F2Matrix X(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) X.set(i, j, v.get(i * d + j));
        out.basis.push_back(std::move(X));
    }
    if (out.dim == 1) {
        out.kind = CommutantKind::F2;
    } else if (out.dim == 2) {
        F2Matrix I = F2Matrix::identity(d);
        F2Matrix xi = out.basis[0] == I ? out.basis[1] : out.basis[0];
        if (xi == I) throw std::logic_error("degenerate commutant basis");
        // xi need not avoid the span subtleties: {I, xi} is a basis whenever
        // xi != I since both lie in a 2-dimensional space containing I
        F2Matrix sq = xi * xi;
        // decompose sq = a I + b xi
        int a = -1, b = -1;
        for (int aa = 0; aa < 2 && a < 0; ++aa)
            for (int bb = 0; bb < 2; ++bb) {
                F2Matrix t(d, d);
                if (aa) t = t + I;
                if (bb) t = t + xi;
                if (t == sq) {
                    a = aa;
                    b = bb;
                    break;
                }
            }
        if (a < 0) throw std::logic_error("commutant square not in span of {I, xi}");
        if (a == 1 && b == 1) out.kind = CommutantKind::F4;          // xi^2 + xi + 1 = 0
        else if (a == 0 && b == 1) out.kind = CommutantKind::F2xF2;  // xi idempotent
        else out.kind = CommutantKind::DualNumbers;                  // (xi or xi+I) squares to 0
    } else {
        out.kind = CommutantKind::Other;
    }
    return out;
}

bool verify_f4(uint64_t q) {
    uint64_t r = q % 8;
    if (r != 3 && r != 5) throw std::invalid_argument("verify_f4: q must be congruent to +-3 mod 8");
    if (q < 5) throw std::invalid_argument("verify_f4: q must be >= 5");
    return commutant(build_q_module(q)).kind == CommutantKind::F4;
}

}  // namespace psl2jac
