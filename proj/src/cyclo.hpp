#pragma once
#include "rat.hpp"

namespace em {

// Q(w) with w^2 = -1 - w (primitive cube root of unity).
struct Cyclo {
    Rat a, b; // a + b*w

    Cyclo() : a(0), b(0) {}
    Cyclo(long v) : a(v), b(0) {}
    Cyclo(Rat ra, Rat rb = Rat(0)) : a(std::move(ra)), b(std::move(rb)) {}

    static Cyclo omega() { return Cyclo(Rat(0), Rat(1)); }

    friend Cyclo operator+(const Cyclo& x, const Cyclo& y) { return {x.a + y.a, x.b + y.b}; }
    friend Cyclo operator-(const Cyclo& x, const Cyclo& y) { return {x.a - y.a, x.b - y.b}; }
    Cyclo operator-() const { return {-a, -b}; }
    friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
        // (a+bw)(c+dw) = ac + (ad+bc) w + bd w^2,  w^2 = -1-w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    Cyclo inv() const {
        // conjugate is a + b*w^2 = (a-b) - b*w; norm = a^2 - a*b + b^2
        Rat n = a * a - a * b + b * b;
        if (n == 0) throw std::domain_error("Cyclo: division by zero");
        return {(a - b) / n, -b / n};
    }
    friend Cyclo operator/(const Cyclo& x, const Cyclo& y) { return x * y.inv(); }
    friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a == y.a && x.b == y.b; }

    bool rational() const { return b == 0; }
};

inline bool is_zero(const Cyclo& c) { return c.a == 0 && c.b == 0; }

inline Cyclo cyclo_pow(Cyclo base, long e) {
    if (e < 0) { base = base.inv(); e = -e; }
    Cyclo acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

inline std::string to_string(const Cyclo& c) {
    if (c.b == 0) return to_string(c.a);
    return to_string(c.a) + (sgn(c.b.get_num()) < 0 ? "" : "+") + to_string(c.b) + "*w";
}

} // namespace em
