#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrat.hpp"
#include "rat.hpp"

using namespace em;
using H = HRat<Rat>;

static H simple(Rat c, bool inner) {
    H h(1L);
    h.push_factor(c, 1, inner);
    return h;
}

TEST_CASE("cancel divides out shared linear factors") {
    // (hbar + 2)(hbar + 3) / (hbar + 2) -> hbar + 3
    H h(Poly<Rat>({Rat(6), Rat(5), Rat(1)}));
    h.push_factor(Rat(2), 1, true);
    h.cancel();
    CHECK(h.den.empty());
    CHECK(h.num == Poly<Rat>({Rat(3), Rat(1)}));
}

TEST_CASE("arithmetic keeps factored denominators") {
    H a = simple(Rat(1), true);   // 1/(hbar+1), inner
    H b = simple(Rat(2), false);  // 1/(hbar+2), outer
    H s = a + b;                  // (2 hbar + 3)/((hbar+1)(hbar+2))
    CHECK(s.num == Poly<Rat>({Rat(3), Rat(2)}));
    CHECK(s.den.size() == 2);
    CHECK((s - a - b).zero());
    H conflict = simple(Rat(1), true);
    CHECK_THROWS_AS(conflict.push_factor(Rat(1), 1, false), std::domain_error);
}

TEST_CASE("outer_part extracts the outer principal parts") {
    // f = 1/(hbar+1) [inner] + 5/(hbar+2)^2 [outer] + (hbar + 3)
    H f = simple(Rat(1), true);
    H g(Poly<Rat>{Rat(5)});
    g.push_factor(Rat(2), 2, false);
    H p(Poly<Rat>({Rat(3), Rat(1)}));
    H sum = f + g + p;
    H out = sum.outer_part();
    CHECK((out - g - p).zero());
    CHECK(!out.has_inner());
    // residual piece has only the inner pole
    H rest = sum - out;
    CHECK(rest.has_inner());
    CHECK(!rest.has_outer());
}

TEST_CASE("expansion at hbar = infinity") {
    // 1/(hbar + c) = hbar^-1 - c hbar^-2 + c^2 hbar^-3 - ...
    H h = simple(Rat(3), true);
    auto v = h.infinity_coeffs(3);
    CHECK(v[0] == Rat(0));
    CHECK(v[1] == Rat(1));
    CHECK(v[2] == Rat(-3));
    CHECK(v[3] == Rat(9));
    // hbar/(hbar + 1): starts at hbar^0
    H t(Poly<Rat>({Rat(0), Rat(1)}));
    t.push_factor(Rat(1), 1, true);
    auto w = t.infinity_coeffs(2);
    CHECK(w[0] == Rat(1));
    CHECK(w[1] == Rat(-1));
    CHECK(w[2] == Rat(1));
    H bad(Poly<Rat>({Rat(0), Rat(0), Rat(1)}));
    bad.push_factor(Rat(1), 1, true);
    CHECK_THROWS_AS(bad.infinity_coeffs(1), std::domain_error);
}
