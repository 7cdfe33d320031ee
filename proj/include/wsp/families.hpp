#pragma once

#include "wsp/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsp {

// The two tau-parameterized families of symmetric multiplicity-6 semigroups
// with five minimal generators, together with their closed-form invariants.
//   family 1: <6, 3+6t, 4+6t, 7+6t, 8+6t>
//   family 2: <6, 1+6t, 2+6t, 3+6t, 4+6t>
struct FamilySpec {
    int family_id = 0;
    long long tau = 0;
    NumericalSemigroup semigroup;
    long long closed_genus = 0;
    long long closed_frobenius = 0;
    long long closed_t1_minus = 0;
    long long closed_moduli_dim = 0;
    std::optional<long long> closed_cone_dim; // family 1 only: 8t+8
};

FamilySpec family(int family_id, long long tau);

// One line per verified assertion: name and the computed value.
struct FamilyVerification {
    struct Check {
        std::string name;
        std::string value;
    };
    std::vector<Check> checks;
    long long t1_plus = 0;
    long long t1_minus = 0;
};

// Recomputes every closed form through the generic modules (semigroup,
// toric, cotangent) and cross-checks the residue-class decomposition of the
// membership set. Throws verification_failure naming the first failed
// assertion.
FamilyVerification verify_family(const FamilySpec& spec);

} // namespace wsp
