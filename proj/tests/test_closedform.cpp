#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closedform.hpp"

using namespace em;

TEST_CASE("local P^2 potential coefficients") {
    auto s = closed_local_p2<Rat>(5);
    CHECK(s.coeff(1) == Rat(1));
    CHECK(s.coeff(2) == Rat(-7, 4));
    CHECK(s.coeff(3) == Rat(55, 9));
    CHECK(s.coeff(4) == Rat(-455, 16));
    CHECK(s.coeff(5) == Rat(3876, 25));
}

TEST_CASE("twist family signs and specializations") {
    // odd k alternates in sign, even k does not
    auto t1 = closed_twist<Rat>(1, 5);
    auto t2 = closed_twist<Rat>(2, 5);
    for (int i = 2; i <= 5; ++i) {
        CHECK(t1.coeff(i) * t1.coeff(i - 1) < 0);
        CHECK(t2.coeff(i) > 0);
    }
    // k = 1 is the local P^2 series
    CHECK(t1 == closed_local_p2<Rat>(5));
}

TEST_CASE("two-weight curve potential") {
    CHECK(closed_curve(Rat(1), Rat(1), 6) == closed_local_p2<Rat>(6));
    // symmetric in the two weights
    CHECK(closed_curve(Rat(2), Rat(3), 5) == closed_curve(Rat(3), Rat(2), 5));
    // (1,2) is proportional to the mu-deformed local P^2 series
    auto a = closed_curve(Rat(1), Rat(2), 5);
    auto b = closed_local_p2_mu<Rat>(5);
    for (int i = 1; i <= 5; ++i) CHECK(Rat(2) * a.coeff(i) == b.coeff(i));
}
