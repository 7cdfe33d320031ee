#include "wsp/semigroup.hpp"
#include "wsp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace wsp {

namespace {

// Minimal generators of the semigroup given by a full membership table:
// positive members not expressible as a sum of two nonzero members.
// Minimal generators never exceed F + multiplicity.
std::vector<long long> minimal_generators(const std::vector<bool>& member, long long frobenius) {
    auto is_member = [&](long long n) {
        if (n < 0) return false;
        if (n > frobenius) return true;
        return static_cast<bool>(member[static_cast<std::size_t>(n)]);
    };
    long long mult = 1;
    while (!is_member(mult)) ++mult;
    if (mult == 1) return {1};

    std::vector<long long> gens;
    for (long long m = mult; m <= frobenius + mult; ++m) {
        if (!is_member(m)) continue;
        bool decomposable = false;
        for (long long a = mult; a + a <= m; ++a) {
            if (is_member(a) && is_member(m - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) gens.push_back(m);
    }
    return gens;
}

std::vector<long long> gap_list(const std::vector<bool>& member, long long frobenius) {
    std::vector<long long> gaps;
    for (long long n = 1; n <= frobenius; ++n)
        if (!member[static_cast<std::size_t>(n)]) gaps.push_back(n);
    return gaps;
}

} // namespace

NumericalSemigroup from_generators(std::vector<long long> gens) {
    if (gens.empty()) throw input_error("EmptyInput: no generators given");
    for (long long g : gens)
        if (g <= 0) throw input_error("EmptyInput: generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    long long d = 0;
    for (long long g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw input_error("NonCoprime: gcd of generators is " + std::to_string(d) +
                          ", not a numerical semigroup");

    const long long mult = gens.front();
    // Grow the closure table until a run of `mult` consecutive members shows
    // up; everything at or beyond that run is then a member.
    long long bound = gens.back() * mult + mult + 1;
    std::vector<bool> member;
    long long run_start = -1;
    for (;;) {
        member.assign(static_cast<std::size_t>(bound + 1), false);
        member[0] = true;
        for (long long n = 1; n <= bound; ++n)
            for (long long g : gens)
                if (n >= g && member[static_cast<std::size_t>(n - g)]) {
                    member[static_cast<std::size_t>(n)] = true;
                    break;
                }
        long long run = 0;
        run_start = -1;
        for (long long n = 0; n <= bound; ++n) {
            run = member[static_cast<std::size_t>(n)] ? run + 1 : 0;
            if (run == mult) {
                run_start = n - mult + 1;
                break;
            }
        }
        if (run_start >= 0) break;
        bound *= 2;
    }

    NumericalSemigroup s;
    s.frobenius_ = run_start - 1; // -1 when 1 is a generator
    s.membership_.assign(member.begin(),
                         member.begin() + static_cast<std::size_t>(std::max(s.frobenius_, 0LL)) + 1);
    s.gaps_ = gap_list(s.membership_, s.frobenius_);
    s.min_gens_ = minimal_generators(s.membership_, s.frobenius_);
    return s;
}

NumericalSemigroup from_gaps(std::vector<long long> gap_set) {
    std::sort(gap_set.begin(), gap_set.end());
    gap_set.erase(std::unique(gap_set.begin(), gap_set.end()), gap_set.end());
    if (gap_set.empty()) return from_generators({1});
    if (gap_set.front() <= 0)
        throw input_error("NotASemigroup: gaps must be positive integers");

    const long long frobenius = gap_set.back();
    std::vector<bool> member(static_cast<std::size_t>(frobenius) + 1, true);
    for (long long g : gap_set) member[static_cast<std::size_t>(g)] = false;

    // The complement must be closed under addition; sums past F are members
    // automatically.
    for (long long a = 1; a <= frobenius; ++a) {
        if (!member[static_cast<std::size_t>(a)]) continue;
        for (long long b = a; a + b <= frobenius; ++b) {
            if (!member[static_cast<std::size_t>(b)]) continue;
            if (!member[static_cast<std::size_t>(a + b)])
                throw input_error("NotASemigroup: " + std::to_string(a) + "+" + std::to_string(b) +
                                  "=" + std::to_string(a + b) + " is listed as a gap");
        }
    }

    NumericalSemigroup s;
    s.frobenius_ = frobenius;
    s.membership_ = std::move(member);
    s.gaps_ = std::move(gap_set);
    s.min_gens_ = minimal_generators(s.membership_, s.frobenius_);
    return s;
}

std::vector<long long> apery_set(const NumericalSemigroup& s, long long m) {
    if (m <= 0 || !s.contains(m))
        throw input_error("NotAMember: " + std::to_string(m) + " is not a positive member");
    std::vector<long long> result(static_cast<std::size_t>(m));
    for (long long c = 0; c < m; ++c) {
        long long n = c;
        while (!s.contains(n)) n += m;
        result[static_cast<std::size_t>(c)] = n;
    }
    return result;
}

bool in_end(const NumericalSemigroup& s, long long n) {
    if (n < 0) return false;
    for (long long g : s.min_gens())
        if (!s.contains(n + g)) return false;
    return true;
}

std::vector<long long> end_set_gaps(const NumericalSemigroup& s) {
    if (s.genus() < 1) throw input_error("GenusTooSmall: genus >= 1 required");
    std::vector<long long> result;
    for (long long gap : s.gaps())
        if (in_end(s, gap)) result.push_back(gap);
    return result;
}

long long lambda(const NumericalSemigroup& s) {
    return static_cast<long long>(end_set_gaps(s).size());
}

bool is_symmetric(const NumericalSemigroup& s) {
    if (s.genus() < 1) throw input_error("GenusTooSmall: genus >= 1 required");
    const long long f = s.frobenius();
    const bool by_frobenius = f == 2 * s.genus() - 1;
    // Cross-check against n in N <=> F - n not in N.
    bool by_complement = true;
    for (long long n = 0; n <= f; ++n)
        if (s.contains(n) == s.contains(f - n)) {
            by_complement = false;
            break;
        }
    if (by_frobenius != by_complement)
        throw formula_inconsistency("symmetry criteria disagree");
    return by_frobenius;
}

long long ewt(const NumericalSemigroup& s) {
    if (s.genus() < 1) throw input_error("GenusTooSmall: genus >= 1 required");
    long long total = 0;
    for (long long gap : s.gaps())
        for (long long g : s.min_gens())
            if (g < gap) ++total;
    return total;
}

long long wt(const NumericalSemigroup& s) {
    if (s.genus() < 1) throw input_error("GenusTooSmall: genus >= 1 required");
    long long total = 0;
    long long i = 1;
    for (long long gap : s.gaps()) total += gap - i++;
    return total;
}

} // namespace wsp
