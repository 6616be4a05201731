#pragma once
#include <vector>
#include <string>
#include <utility>
#include <stdexcept>
#include <cassert>
#include "rat.hpp"

namespace em {

// Dense univariate polynomial over a field K.  K must be constructible from
// long, support +,-,*,/ and ==, and provide is_zero(k) via ADL.
template <class K>
struct Poly {
    std::vector<K> c; // c[i] is the coefficient of x^i; normalized: no trailing zeros

    Poly() = default;
    explicit Poly(K k) { if (!is_zero(k)) c.push_back(std::move(k)); }
    Poly(std::vector<K> v) : c(std::move(v)) { trim(); }

    static Poly monomial(K k, int deg) {
        Poly p;
        if (is_zero(k)) return p;
        p.c.assign(deg + 1, K(0));
        p.c[deg] = std::move(k);
        return p;
    }

    void trim() { while (!c.empty() && is_zero(c.back())) c.pop_back(); }
    bool zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; } // -1 for the zero polynomial
    const K& lead() const { assert(!c.empty()); return c.back(); }
    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }

    K eval(const K& x) const {
        K acc(0);
        for (int i = deg(); i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (int i = 1; i <= deg(); ++i) d.c.push_back(c[i] * K(i));
        d.trim();
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const K& k) {
        Poly r = a;
        for (auto& x : r.c) x = x * k;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    // Division with remainder; b must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        assert(!b.zero());
        Poly q, r = a;
        if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, K(0));
        while (!r.zero() && r.deg() >= b.deg()) {
            K f = r.lead() / b.lead();
            int sh = r.deg() - b.deg();
            q.c[sh] = q.c[sh] + f;
            for (int i = 0; i <= b.deg(); ++i)
                r.c[i + sh] = r.c[i + sh] - f * b.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Poly monic() const {
        assert(!zero());
        return *this * (K(1) / lead());
    }
};

template <class K>
bool is_zero(const Poly<K>& p) { return p.zero(); }

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.zero() ? a : a.monic();
}

// Rational coefficients: primitive-PRS over the integers, avoiding the
// coefficient blowup of the naive Euclid over Q.
namespace detail {
inline std::vector<mpz_class> primitive_z(const Poly<Rat>& p) {
    mpz_class l(1);
    for (auto& c : p.c) l = lcm(l, c.get_den());
    std::vector<mpz_class> v;
    v.reserve(p.c.size());
    mpz_class g(0);
    for (auto& c : p.c) {
        v.push_back(c.get_num() * (l / c.get_den()));
        g = gcd(g, v.back());
    }
    if (g != 0)
        for (auto& z : v) z /= g;
    return v;
}
} // namespace detail

inline Poly<Rat> poly_gcd(const Poly<Rat>& pa, const Poly<Rat>& pb) {
    if (pa.zero()) return pb.zero() ? pb : pb.monic();
    if (pb.zero()) return pa.monic();
    auto a = detail::primitive_z(pa), b = detail::primitive_z(pb);
    if (a.size() < b.size()) a.swap(b);
    while (!b.empty()) {
        if (b.size() == 1) return Poly<Rat>(Rat(1)); // nonzero constant
        // pseudo-remainder of a by b, then strip content
        mpz_class lb = b.back();
        for (int sh = (int)a.size() - (int)b.size(); sh >= 0; --sh) {
            mpz_class f = a[sh + b.size() - 1];
            for (auto& z : a) z *= lb;
            for (size_t i = 0; i < b.size(); ++i)
                a[i + sh] -= f * b[i];
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        mpz_class g(0);
        for (auto& z : a) g = gcd(g, z);
        if (g != 0)
            for (auto& z : a) z /= g;
        a.swap(b);
    }
    Poly<Rat> g;
    for (auto& z : a) g.c.push_back(Rat(z));
    g.trim();
    return g.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
void poly_gcdex(const Poly<K>& a, const Poly<K>& b,
                Poly<K>& g, Poly<K>& s, Poly<K>& t) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(K(1)), s1, t0, t1(K(1));
    while (!r1.zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.zero()) {
        K inv = K(1) / r0.lead();
        g = r0 * inv; s = s0 * inv; t = t0 * inv;
    } else {
        g = r0; s = s0; t = t0;
    }
}

// Inverse of a modulo m (coprime); throws if gcd is not constant.
template <class K>
Poly<K> poly_invmod(const Poly<K>& a, const Poly<K>& m) {
    Poly<K> g, s, t;
    poly_gcdex(a, m, g, s, t);
    if (g.deg() != 0)
        throw std::domain_error("poly_invmod: arguments not coprime");
    return divmod(s, m).second;
}

} // namespace em
