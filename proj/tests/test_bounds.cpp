#include "wsp/bounds.hpp"
#include "wsp/enumerate.hpp"
#include "wsp/errors.hpp"

#include <doctest.h>

using namespace wsp;

TEST_CASE("bounds for <6,7,8>") {
    const auto r = bounds_report(from_generators({6, 7, 8}));
    CHECK(r.genus == 9);
    CHECK(r.ewt == 12);
    CHECK(r.pflueger_lower == 13);
    CHECK(r.rv_upper == 17);
    CHECK(r.new_lower == 14);
    CHECK(r.smoothing_dim == 2 * 9 + 1 - 1);
    REQUIRE(r.exact_moduli_dim.has_value());
    CHECK(*r.exact_moduli_dim == 14);
}

TEST_CASE("bounds for <6,7,15>") {
    const auto r = bounds_report(from_generators({6, 7, 15}));
    CHECK(r.genus == 12);
    CHECK(r.pflueger_lower == 17);
    CHECK(r.new_lower == 18);
    REQUIRE(r.exact_moduli_dim.has_value());
    CHECK(*r.exact_moduli_dim == 18);
}

TEST_CASE("exact dimension is only claimed for symmetric, few generators") {
    // non-symmetric
    CHECK_FALSE(bounds_report(from_generators({3, 4, 5})).exact_moduli_dim.has_value());
    // symmetric with five generators
    CHECK_FALSE(bounds_report(from_generators({6, 9, 10, 13, 14})).exact_moduli_dim.has_value());
}

TEST_CASE("bound sandwich and comparison identity, genus <= 7") {
    for (int g = 2; g <= 7; ++g)
        for (const auto& s : semigroups_of_genus(g)) {
            if (s.embedding_dim() < 2) continue;
            const auto r = bounds_report(s);
            CHECK(r.pflueger_lower <= r.new_lower);
            CHECK(r.new_lower <= r.rv_upper);
            CHECK(r.new_lower == r.rv_upper - r.t1_plus);
            CHECK(verify_comparison_identity(s));
        }
}

TEST_CASE("genus precondition") {
    CHECK_THROWS_AS(bounds_report(from_generators({2, 3})), input_error);
}
