#include "wsp/enumerate.hpp"
#include "wsp/bounds.hpp"
#include "wsp/errors.hpp"

#include <algorithm>
#include <string>

namespace wsp {

namespace {

void walk(const NumericalSemigroup& s, int depth, int target,
          std::vector<NumericalSemigroup>& out) {
    if (depth == target) {
        out.push_back(s);
        return;
    }
    for (long long m : s.min_gens()) {
        if (m <= s.frobenius()) continue;
        auto gaps = s.gaps();
        gaps.push_back(m);
        walk(from_gaps(std::move(gaps)), depth + 1, target, out);
    }
}

} // namespace

std::vector<NumericalSemigroup> semigroups_of_genus(int g, int max_genus) {
    if (g < 0) throw input_error("GenusLimitExceeded: genus must be nonnegative");
    if (g > max_genus)
        throw input_error("GenusLimitExceeded: genus " + std::to_string(g) +
                          " exceeds the cap " + std::to_string(max_genus));
    std::vector<NumericalSemigroup> out;
    walk(from_generators({1}), 0, g, out);
    std::sort(out.begin(), out.end(),
              [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
                  return a.gaps() < b.gaps();
              });
    return out;
}

std::vector<Table1Row> table1_report() {
    std::vector<Table1Row> rows;
    for (int g = 2; g <= 6; ++g) {
        for (const auto& s : semigroups_of_genus(g)) {
            const auto report = bounds_report(s);
            if (report.t1_plus == 0) continue;
            rows.push_back({s.gaps(), report.new_lower, report.rv_upper, report.t1_plus});
        }
    }
    return rows;
}

} // namespace wsp
