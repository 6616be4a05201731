#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closedform.hpp"
#include "pipeline.hpp"
#include "specparse.hpp"

using namespace em;

static const char* kCone = "1 1 1 -3\n0 0 nu -nu\np^2\ninf inf zero zero\n";

static Series<Rat> rs(std::vector<Rat> v) { return Series<Rat>(std::move(v)); }

TEST_CASE("Birkhoff factorization reconstructs the solution") {
    ParsedSpec ps = parse_spec(kCone);
    auto sym = symbol_table<QF1>(ps.symbols);
    ToricSpec<QF1> spec = make_spec(ps, sym);
    auto S = fundamental_solution(spec, 3, SolutionBasis::Wronskian, QF1(0));
    auto qr = birkhoff_factorize(S, scalar_identity<QF1>(2));
    CHECK(birkhoff_reconstructs(S, qr));
    // Q carries only outer poles, R only inner ones
    for (auto& m : qr.Q)
        for (auto& row : m)
            for (auto& h : row) CHECK(!h.has_inner());
    for (auto& m : qr.R)
        for (auto& row : m)
            for (auto& h : row) CHECK(!h.has_outer());
}

TEST_CASE("mirror map and potential for the cone over the cubic") {
    ParsedSpec ps = parse_spec(kCone, {{"nu", Rat(1)}});
    auto sym = symbol_table<Rat>(ps.symbols);
    ToricSpec<Rat> spec = make_spec(ps, sym);
    auto res = run_pipeline(spec, 4, SolutionBasis::Wronskian, Rat(0));
    CHECK(res.t0 == rs({Rat(0), Rat(-2), Rat(17), Rat(-710, 3), Rat(8049, 2)}));
    CHECK(res.tail == rs({Rat(0), Rat(-8), Rat(74), Rat(-3212, 3), Rat(18609)}));
    Series<Rat> W = to_potential(res.wscalar_q, res.tail);
    CHECK(W == closed_local_p2<Rat>(4));
    // q(x) inverts x(q) = q e^{tail} exactly
    Series<Rat> x_of_q(4);
    x_of_q.at(1) = Rat(1);
    Series<Rat> e = series_exp(res.tail);
    for (int i = 1; i <= 4; ++i) x_of_q.at(i) = e.coeff(i - 1);
    Series<Rat> round = series_compose(x_of_q, mirror_q_of_x(res.tail));
    CHECK(round.coeff(1) == Rat(1));
    for (int i = 2; i <= 4; ++i) CHECK(round.coeff(i) == Rat(0));
}

TEST_CASE("degree-2 twist matches the closed form") {
    // total space of O(-4) over P(1,1,2): potential proportional to the
    // k=2 closed-form series with a sign flip in the argument
    ParsedSpec ps = parse_spec("1 1 2 -4\n0 0 mu -mu\np^2\ninf inf zero zero\n");
    auto sym = symbol_table<QF1>(ps.symbols);
    ToricSpec<QF1> spec = make_spec(ps, sym);
    auto res = run_pipeline(spec, 4, SolutionBasis::Wronskian, QF1(0));
    Series<QF1> Ws = to_potential(res.wscalar_q, res.tail);
    QF1 mu = QF1::var();
    auto cf = closed_twist<QF1>(2, 4);
    for (int i = 1; i <= 4; ++i)
        CHECK(Ws.coeff(i) == QF1(0) - mu * mu * cf.coeff(i));
}

TEST_CASE("restriction basis handles p(p+mu) relations") {
    ParsedSpec ps = parse_spec("1 1 1 -3\n0 mu nu -2*nu\np*(p+mu)\ninf inf zero zero\n",
                               {{"nu", Rat(1)}});
    auto sym = symbol_table<QF1>(ps.symbols);
    ToricSpec<QF1> spec = make_spec(ps, sym);
    QF1 mu = QF1::var();
    auto res = run_pipeline(spec, 3, SolutionBasis::Restriction, mu);
    Series<QF1> Ws = to_potential(res.wscalar_q, res.tail);
    // scalar part is -2 W(mu) with W's x-coefficients polynomial in mu
    auto pol = [](std::vector<Rat> v) { return QF1(Poly<Rat>(std::move(v)), Poly<Rat>(Rat(1))); };
    std::vector<QF1> w = {
        pol({Rat(-4), Rat(2)}),
        pol({Rat(26), Rat(-53, 2), Rat(6)}),
        pol({Rat(-3028, 9), Rat(4646, 9), Rat(-246), Rat(36)}),
    };
    for (int i = 1; i <= 3; ++i) CHECK(Ws.coeff(i) == QF1(-2) * w[i - 1]);
}
