#include "wsp/bounds.hpp"
#include "wsp/errors.hpp"

namespace wsp {

namespace {

void require_report_input(const NumericalSemigroup& s) {
    if (s.genus() < 2) throw input_error("GenusTooSmall: genus >= 2 required");
    if (s.embedding_dim() < 2)
        throw input_error("SingleGenerator: at least two minimal generators required");
}

} // namespace

BoundsReport bounds_report(const NumericalSemigroup& s) {
    require_report_input(s);
    const auto table = t1_table(s);

    BoundsReport r;
    r.genus = s.genus();
    r.lambda = lambda(s);
    r.ewt = ewt(s);
    r.wt = wt(s);
    r.t1_plus = table.t1_plus;
    r.t1_minus = table.t1_minus;
    r.pflueger_lower = 3 * r.genus - 2 - r.ewt;
    r.rv_upper = 2 * r.genus - 2 + r.lambda;
    r.new_lower = r.rv_upper - r.t1_plus;
    r.smoothing_dim = 2 * r.genus + r.lambda - 1;
    r.negatively_graded = table.t1_plus == 0;
    if (is_symmetric(s) && s.embedding_dim() <= 4)
        r.exact_moduli_dim = table.t1_minus - 1;
    return r;
}

bool verify_comparison_identity(const NumericalSemigroup& s) {
    require_report_input(s);
    const auto relations = minimal_relations(s);

    long long v_sum = 0;
    for (long long gap : s.gaps())
        if (!in_end(s, gap)) v_sum += v_dim(s, relations, gap);

    const long long lhs = 3 * s.genus() - 2 - ewt(s) + v_sum;
    const long long rhs = 2 * s.genus() - 2 + lambda(s) - t1_table(s).t1_plus;
    return lhs == rhs;
}

} // namespace wsp
