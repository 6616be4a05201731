#pragma once
#include "poly.hpp"

namespace em {

// Fraction field K(x) over the field K, reduced with monic denominator.
template <class K>
struct RatFunc {
    Poly<K> num, den; // den monic, gcd(num, den) = 1

    RatFunc() : den(K(1)) {}
    RatFunc(long v) : num(K(v)), den(K(1)) {}
    explicit RatFunc(K k) : num(std::move(k)), den(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    explicit RatFunc(Poly<K> n) : num(std::move(n)), den(K(1)) {}

    static RatFunc var() { return RatFunc(Poly<K>::monomial(K(1), 1)); }

    void reduce() {
        if (den.zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num.zero()) { den = Poly<K>(K(1)); return; }
        Poly<K> g = poly_gcd(num, den);
        if (g.deg() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        K lead = den.lead();
        if (!(lead == K(1))) {
            K inv = K(1) / lead;
            num = num * inv;
            den = den * inv;
        }
    }

    bool zero() const { return num.zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const { RatFunc r = *this; r.num = -r.num; return r; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }

    // Substitute a value for the variable; denominator must not vanish there.
    K eval(const K& x) const {
        K d = den.eval(x);
        if (is_zero(d)) throw std::domain_error("RatFunc: pole at evaluation point");
        return num.eval(x) / d;
    }
};

template <class K>
bool is_zero(const RatFunc<K>& f) { return f.zero(); }

using QF1 = RatFunc<Rat>;          // Q(s1)
using QF2 = RatFunc<RatFunc<Rat>>; // Q(s1)(s2)

} // namespace em
