#include "wsp/enumerate.hpp"
#include "wsp/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace wsp;

namespace {

// All gap sets of size g by brute force: gaps lie in [1, 2g-1], and the
// complement must be closed under addition.
std::set<std::vector<long long>> brute_force_gap_sets(int g) {
    std::set<std::vector<long long>> result;
    const int limit = 2 * g - 1;
    std::vector<long long> gaps;
    auto closed = [&](const std::vector<long long>& gap_set) {
        std::vector<bool> is_gap(static_cast<std::size_t>(limit) + 1, false);
        for (long long l : gap_set) is_gap[static_cast<std::size_t>(l)] = true;
        for (int a = 1; a <= limit; ++a)
            for (int b = a; a + b <= limit; ++b)
                if (!is_gap[a] && !is_gap[b] && is_gap[a + b]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(gaps.size()) == g) {
            if (closed(gaps)) result.insert(gaps);
            return;
        }
        for (int l = next; l <= limit; ++l) {
            if (l > 1 && gaps.empty()) break; // 1 must be a gap when g >= 1
            gaps.push_back(l);
            self(self, l + 1);
            gaps.pop_back();
        }
    };
    rec(rec, 1);
    return result;
}

} // namespace

TEST_CASE("counts along the semigroup tree") {
    const long long expected[] = {1, 2, 4, 7, 12, 23, 39, 67};
    for (int g = 1; g <= 8; ++g)
        CHECK(static_cast<long long>(semigroups_of_genus(g).size()) == expected[g - 1]);
}

TEST_CASE("tree enumeration matches the brute-force oracle, genus <= 6") {
    for (int g = 1; g <= 6; ++g) {
        std::set<std::vector<long long>> tree;
        for (const auto& s : semigroups_of_genus(g)) tree.insert(s.gaps());
        CHECK(tree == brute_force_gap_sets(g));
    }
}

TEST_CASE("output is sorted by gap list, each semigroup once") {
    const auto list = semigroups_of_genus(7);
    for (std::size_t i = 1; i < list.size(); ++i)
        CHECK(list[i - 1].gaps() < list[i].gaps());
}

TEST_CASE("genus cap") {
    CHECK_THROWS_AS(semigroups_of_genus(kDefaultGenusCap + 1), input_error);
    CHECK_THROWS_AS(semigroups_of_genus(9, 8), input_error);
    CHECK_NOTHROW(semigroups_of_genus(9, 9));
}

TEST_CASE("table 1 has the 15 expected rows") {
    const auto rows = table1_report();
    REQUIRE(rows.size() == 15);
    int genus5 = 0;
    for (const auto& row : rows) {
        CHECK(row.t1_plus > 0);
        CHECK(row.new_lower == row.rv_upper - row.t1_plus);
        if (row.gaps.size() == 5) ++genus5;
    }
    CHECK(genus5 == 3);
}
