#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo.hpp"
#include "fracfield.hpp"
#include "poly.hpp"
#include "rat.hpp"
#include "series.hpp"

using namespace em;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(rat_from_string("6/4") == Rat(3, 2));
    CHECK(rat_from_string("-10/5") == Rat(-2));
    CHECK(to_string(rat_from_string("0/7")) == "0");
    CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("polynomial division and gcd") {
    Poly<Rat> a({Rat(-1), Rat(0), Rat(1)}); // x^2 - 1
    Poly<Rat> b({Rat(1), Rat(1)});          // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(r.deg() < 0);
    CHECK(q == Poly<Rat>({Rat(-1), Rat(1)}));
    Poly<Rat> g = poly_gcd(a, b);
    CHECK(g.deg() == 1);
    // gcd of coprime polys is a unit
    Poly<Rat> c({Rat(2), Rat(1)});
    CHECK(poly_gcd(b, c).deg() == 0);
}

TEST_CASE("rational function field reduces") {
    QF1 mu = QF1::var();
    QF1 v = (mu * mu - QF1(1)) / (mu - QF1(1));
    CHECK(v == mu + QF1(1));
    CHECK(v * (QF1(1) / v) == QF1(1));
    CHECK(is_zero(v - v));
    // tower: rational functions of nu2 over rational functions of nu1
    QF2 n1 = QF2(QF1::var()), n2 = QF2::var();
    QF2 w = (n1 * n2 + n1) / n1;
    CHECK(w == n2 + QF2(1));
}

TEST_CASE("series exp/log/compose/revert") {
    int n = 8;
    Series<Rat> l = series_log1p<Rat>(n);
    Series<Rat> e = series_exp(l);
    for (int i = 0; i <= n; ++i) CHECK(e.coeff(i) == (i <= 1 ? Rat(1) : Rat(0)));

    Series<Rat> f(n); // f = q + q^2
    f.at(1) = Rat(1);
    f.at(2) = Rat(1);
    Series<Rat> g = series_revert(f);
    Series<Rat> id = series_compose(f, g);
    CHECK(id.coeff(1) == Rat(1));
    for (int i = 2; i <= n; ++i) CHECK(id.coeff(i) == Rat(0));
}

TEST_CASE("third roots of unity") {
    Cyclo w = Cyclo::omega();
    CHECK(w * w * w == Cyclo(Rat(1)));
    CHECK(!(w == Cyclo(Rat(1))));
    CHECK(w * w.inv() == Cyclo(Rat(1)));
    // 1 + w + w^2 = 0
    CHECK(is_zero(Cyclo(Rat(1)) + w + w * w));
    CHECK(Cyclo(Rat(5, 3)).rational());
    CHECK(Cyclo(Rat(5, 3)).a == Rat(5, 3));
    CHECK(!w.rational());
}
