#include "wsp/errors.hpp"
#include "wsp/poly.hpp"

#include <doctest.h>

using namespace wsp::poly;

namespace {

RingPtr xy_ring() { return make_ring({{"X", 1}, {"Y", 2}}); }

} // namespace

TEST_CASE("arithmetic and canonical printing") {
    const auto ring = xy_ring();
    const auto x = Polynomial::variable(ring, "X");
    const auto y = Polynomial::variable(ring, "Y");
    const auto p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.to_string() == "X^2 - Y^2");
    CHECK((x * x - y * y + y * y).to_string() == "X^2");
    CHECK(Polynomial(ring).to_string() == "0");
    CHECK((x.scaled(Rational(3, 2)) + Polynomial::constant(ring, -1)).to_string() ==
          "3/2*X - 1");
}

TEST_CASE("degrees, coefficients and isobaric weights") {
    const auto ring = xy_ring();
    const auto x = Polynomial::variable(ring, "X");
    const auto y = Polynomial::variable(ring, "Y");
    const auto p = x * x + y; // weight 2 under X:1, Y:2
    CHECK(p.degree_in(0) == 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.coeff_of(0, 2) == Polynomial::constant(ring, 1));
    CHECK(p.coeff_of(0, 0) == y);
    long long w = 0;
    CHECK(p.is_isobaric(&w));
    CHECK(w == 2);
    CHECK_FALSE((x + y).is_isobaric());
    CHECK(p.total_degree_part(1) == y);
}

TEST_CASE("division by a monic divisor round-trips") {
    const auto ring = xy_ring();
    const auto x = Polynomial::variable(ring, "X");
    const auto y = Polynomial::variable(ring, "Y");
    const auto d = x * x * x - y;
    const auto p = x.pow(7) + y * x * x + Polynomial::constant(ring, 5);
    const auto result = divide_by_monic_in(p, d, 0);
    CHECK(result.quotient * d + result.remainder == p);
    CHECK(result.remainder.degree_in(0) < 3);

    CHECK_THROWS_AS(divide_by_monic_in(p, x.scaled(2), 0), wsp::not_monic_in_x);
    CHECK_THROWS_AS(divide_by_monic_in(p, y, 0), wsp::not_monic_in_x);
}

TEST_CASE("substitution") {
    const auto ring = xy_ring();
    const auto x = Polynomial::variable(ring, "X");
    const auto y = Polynomial::variable(ring, "Y");
    const auto target = make_ring({{"T", 1}});
    const auto t = Polynomial::variable(target, "T");
    // X -> t, Y -> t^2 kills Y - X^2
    CHECK((y - x * x).substitute(target, {t, t * t}).is_zero());
    CHECK((x + y).evaluate({2, 3}) == 5);
}

TEST_CASE("resultants detect common roots") {
    // x^2 - 1 and x - 1 share the root 1
    CHECK(resultant({-1, 0, 1}, {-1, 1}) == 0);
    // x^2 + 1 and x - 1: resultant 2
    CHECK(resultant({1, 0, 1}, {-1, 1}) == 2);
    // res(x^2 - a^2, x - a) parametrically at a = 3
    CHECK(resultant({-9, 0, 1}, {-3, 1}) == 0);
}
