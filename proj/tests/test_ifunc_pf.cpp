#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pf.hpp"
#include "specparse.hpp"

using namespace em;

static const char* kCone = "1 1 1 -3\n0 0 nu -nu\np^2\ninf inf zero zero\n";

TEST_CASE("spec parsing") {
    ParsedSpec ps = parse_spec(kCone);
    CHECK(ps.charges == std::vector<long>{1, 1, 1, -3});
    CHECK(ps.symbols == std::vector<std::string>{"nu"});
    REQUIRE(ps.relation.size() == 1);
    CHECK(ps.relation[0].mult == 2);
    CHECK(ps.regimes == std::vector<Regime>{Regime::HInf, Regime::HInf, Regime::HZero,
                                            Regime::HZero});
    // expressions with coefficients
    ParsedSpec p2 = parse_spec("1 -1\n2*mu -mu/3\np*(p+mu)\ninf zero\n");
    CHECK(p2.weights[0].coef == Rat(2));
    CHECK(p2.weights[1].coef == Rat(-1, 3));
    CHECK(p2.relation.size() == 2);
    // bindings eliminate a symbol
    ParsedSpec pb = parse_spec(kCone, {{"nu", Rat(1)}});
    CHECK(pb.symbols.empty());
    CHECK_THROWS(parse_spec("1 1\n0 0\np^2\n"));            // missing line
    CHECK_THROWS(parse_spec("1 x\n0 0\np^2\ninf inf\n"));   // bad charge
    CHECK_THROWS(parse_spec("1 1\n0 0\nq^2\ninf inf\n"));   // bad relation
    CHECK_THROWS(parse_spec("1 1\n0 0\np^2\ninf huh\n"));   // bad regime
}

TEST_CASE("charge-weight consistency is enforced") {
    ParsedSpec ps = parse_spec(kCone);
    auto sym = symbol_table<QF1>(ps.symbols);
    ToricSpec<QF1> spec = make_spec(ps, sym);
    CHECK_NOTHROW(spec.validate());
    ToricSpec<QF1> bad = spec;
    bad.charges[3] = -2; // charges no longer sum to zero
    CHECK_THROWS(bad.validate());
}

TEST_CASE("Picard-Fuchs operator annihilates the I-function") {
    ParsedSpec ps = parse_spec(kCone);
    auto sym = symbol_table<QF1>(ps.symbols);
    ToricSpec<QF1> spec = make_spec(ps, sym);
    QuotientRing<QF1> ring = make_ring<QF1>(ps, sym);
    CHECK(pf_annihilates(spec, ring, 4));
}

TEST_CASE("residual of the constant solution") {
    // applying the operator to 1 leaves nu^3 + 3 nu^2 hbar + 2 nu hbar^2
    ParsedSpec ps = parse_spec(kCone);
    auto sym = symbol_table<QF1>(ps.symbols);
    auto r = pf_residual_of_one(make_spec(ps, sym), make_ring<QF1>(ps, sym));
    REQUIRE(r.jets.size() == 1);
    REQUIRE(r.jets[0].size() == 2);
    QF1 nu = QF1::var();
    Poly<QF1> expect({nu * nu * nu, QF1(3) * nu * nu, QF1(2) * nu});
    CHECK(r.jets[0][0].den.empty());
    CHECK(r.jets[0][0].num == expect);
}
