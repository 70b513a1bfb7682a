#pragma once

#include <string>
#include <vector>

#include "psl2jac/f2matrix.hpp"
#include "psl2jac/psl2.hpp"

namespace psl2jac {

// F_2[G]-module given by the action matrices of a generating set.
struct F2Module {
    int dim = 0;
    std::vector<F2Matrix> gens;  // each dim x dim, invertible
    std::string label;
};

// Module of maps-to-F_2 on n points modulo the constants, restricted to the
// sum-zero hyperplane: dimension n-1 for odd n (no quotient needed, the
// all-ones vector is not sum-zero) and n-2 for even n. Basis vectors are the
// classes of delta_i + delta_{last point}.
F2Module build_perm_module(int npoints, const std::vector<std::vector<uint8_t>>& perms,
                           const std::string& label);

// The 2-torsion module for PSL_2(F_q) acting on P^1(F_q): dimension q - 1,
// generator images of the standard generating set, basis indexed by the
// finite points with infinity as the distinguished zero class.
// Requires q an odd prime power <= 31.
F2Module build_q_module(uint64_t q);

enum class CommutantKind { F2, F4, F2xF2, DualNumbers, Other };

std::string to_string(CommutantKind k);

struct CommutantStructure {
    int dim = 0;
    CommutantKind kind = CommutantKind::Other;
    std::vector<F2Matrix> basis;
};

// All matrices commuting with every generator, via the kernel of the stacked
// Sylvester system; 2-dimensional commutants are classified by the square of
// a non-identity basis element.
CommutantStructure commutant(const F2Module& m);

// q = +-3 mod 8 (else std::invalid_argument), q >= 5: true iff the commutant
// of the 2-torsion module is a field with 4 elements.
bool verify_f4(uint64_t q);

}  // namespace psl2jac
