#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euler.hpp"
#include "fracfield.hpp"
#include "localize.hpp"

using namespace em;

TEST_CASE("fixed-graph class counts") {
    CHECK(enumerate_trees(1).size() == 3);
    CHECK(enumerate_trees(2).size() == 12);
    CHECK(enumerate_trees(3).size() == 39);
    CHECK(enumerate_trees(4).size() == 159);
}

TEST_CASE("refined generating function, low degree") {
    RefinedGF gf = refined_gf(3);
    auto at = [&](int a, int b, int c) {
        auto it = gf.coeff.find({a, b, c});
        REQUIRE(it != gf.coeff.end());
        return it->second;
    };
    CHECK(at(1, 0, 0) == Rat(1));
    CHECK(at(0, 1, 0) == Rat(1));
    CHECK(at(2, 0, 0) == Rat(-7, 8));
    CHECK(at(1, 1, 0) == Rat(-1));
    CHECK(at(3, 0, 0) == Rat(55, 27));
    CHECK(at(2, 1, 0) == Rat(3));
    CHECK(at(1, 1, 1) == Rat(3));
    std::array<Rat, 3> e1 = {Rat(1), Rat(0), Rat(0)};
    CHECK(gf.specialize(e1, 1) == Rat(1));
    CHECK(gf.specialize(e1, 2) == Rat(-7, 8));
    CHECK(gf.specialize(e1, 3) == Rat(55, 27));
}

TEST_CASE("weight admissibility") {
    CHECK(check_admissibility(basic_weights()));
    // scaling and permuting an admissible triple preserves admissibility
    Cyclo w = Cyclo::omega();
    CHECK(check_admissibility({Cyclo(Rat(2)), Cyclo(Rat(2)) * w, Cyclo(Rat(2)) * w * w}));
    CHECK(check_admissibility({w, w * w, Cyclo(Rat(1))}));
    CHECK(!check_admissibility({Cyclo(Rat(1)), Cyclo(Rat(2)), Cyclo(Rat(3))}));
}

TEST_CASE("amplitude rejects coincident weights") {
    auto trees = enumerate_trees(1);
    REQUIRE(!trees.empty());
    CHECK_THROWS_AS(amplitude(trees[0], {Cyclo(Rat(1)), Cyclo(Rat(1)), Cyclo(Rat(2))}),
                    std::domain_error);
}

TEST_CASE("euler classes mod p^2") {
    QF1 nu = QF1::var();
    // (-3p - nu) vs (-2p - nu)(-p - nu): proportional with ratio -1/nu
    auto c = euler_scalar<QF1>({{QF1(-3), QF1(0) - nu}},
                               {{QF1(-2), QF1(0) - nu}, {QF1(-1), QF1(0) - nu}});
    REQUIRE(c.has_value());
    CHECK(*c == QF1(-1) / nu);
    // not proportional when the constant terms disagree in shape
    auto d = euler_scalar<QF1>({{QF1(1), nu}}, {{QF1(1), nu}, {QF1(1), nu}});
    CHECK(!d.has_value());
}
