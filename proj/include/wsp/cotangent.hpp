#pragma once

#include "wsp/semigroup.hpp"
#include "wsp/toric.hpp"

#include <map>
#include <vector>

namespace wsp {

// Graded dimensions of the first cotangent cohomology of the semigroup ring,
// via #A_l - dim V_l - 1 outside End(N). Only nonzero degrees are stored.
struct GradedT1Table {
    struct Diagnostics {
        long long a_count = 0;
        long long v_rank = 0;
    };
    std::map<long long, long long> by_degree;
    std::map<long long, Diagnostics> diagnostics;
    long long t1_plus = 0;  // sum over stored positive degrees
    long long t1_minus = 0; // sum over stored negative degrees
};

// 1-based generator indices i with n_i + l not in N.
std::vector<int> a_set(const NumericalSemigroup& s, long long l);

// Rank over Q of the lattice vectors v_i of the relations with d_i + l not
// in N. `relations` must be minimal_relations(s).
int v_dim(const NumericalSemigroup& s, const std::vector<BinomialRelation>& relations,
          long long l);

// 0 for l in End(N); otherwise #A_l - dim V_l - 1. Throws
// formula_inconsistency if that quantity is negative.
long long t1_dim(const NumericalSemigroup& s, const std::vector<BinomialRelation>& relations,
                 long long l);

// Degrees outside [-max d_i, -1] and gaps\End provably contribute 0.
GradedT1Table t1_table(const NumericalSemigroup& s);

// No positive graded part.
bool is_negatively_graded(const NumericalSemigroup& s);

} // namespace wsp
