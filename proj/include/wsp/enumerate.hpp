#pragma once

#include "wsp/semigroup.hpp"

#include <vector>

namespace wsp {

inline constexpr int kDefaultGenusCap = 20;

// Every numerical semigroup of genus exactly g, each exactly once, via the
// semigroup tree: children of S are S \ {m} for minimal generators m > F(S).
// Output sorted by gap list.
std::vector<NumericalSemigroup> semigroups_of_genus(int g, int max_genus = kDefaultGenusCap);

// One row per semigroup of genus 2..6 with positive T^{1,+}; for those the
// new lower bound equals dim M.
struct Table1Row {
    std::vector<long long> gaps;
    long long new_lower = 0;
    long long rv_upper = 0;
    long long t1_plus = 0;
};

std::vector<Table1Row> table1_report();

} // namespace wsp
