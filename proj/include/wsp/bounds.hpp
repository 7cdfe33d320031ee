#pragma once

#include "wsp/cotangent.hpp"
#include "wsp/semigroup.hpp"

#include <optional>

namespace wsp {

// The three moduli-dimension bounds and the smoothing-component dimension.
// new_lower may be negative; it is reported as-is.
struct BoundsReport {
    long long genus = 0;
    long long lambda = 0;
    long long ewt = 0;
    long long wt = 0;
    long long t1_plus = 0;
    long long t1_minus = 0;
    long long pflueger_lower = 0; // 3g - 2 - ewt
    long long rv_upper = 0;       // 2g - 2 + lambda
    long long new_lower = 0;      // 2g - 2 + lambda - t1_plus
    long long smoothing_dim = 0;  // mu + t - 1, mu = 2g, t = lambda
    bool negatively_graded = false;
    // dim M = dim Proj T^{1,-} = t1_minus - 1; claimed only for symmetric
    // semigroups with at most 4 generators.
    std::optional<long long> exact_moduli_dim;
};

// Requires genus >= 2 and at least two generators.
BoundsReport bounds_report(const NumericalSemigroup& s);

// 3g - 2 - ewt + sum of dim V_l over positive gaps outside End(N) equals
// 2g - 2 + lambda - t1_plus, both sides computed independently.
bool verify_comparison_identity(const NumericalSemigroup& s);

} // namespace wsp
