#pragma once
#include <vector>
#include <cassert>
#include <stdexcept>
#include "rat.hpp"

namespace em {

// Truncated power series sum_{i=0}^{n} c[i] q^i over a field K.
template <class K>
struct Series {
    std::vector<K> c;

    Series() = default;
    explicit Series(int order) : c(order + 1, K(0)) {}
    Series(std::vector<K> v) : c(std::move(v)) {}

    int order() const { return (int)c.size() - 1; }
    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }
    K& at(int i) { return c[i]; }

    Series truncated(int n) const {
        Series r(n);
        for (int i = 0; i <= n && i <= order(); ++i) r.c[i] = c[i];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::max(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c[i] = a.coeff(i) + b.coeff(i);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::max(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c[i] = a.coeff(i) - b.coeff(i);
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::max(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= std::min(n, a.order()); ++i) {
            if (is_zero(a.c[i])) continue;
            for (int j = 0; i + j <= n && j <= b.order(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    friend Series operator*(const Series& a, const K& k) {
        Series r = a;
        for (auto& x : r.c) x = x * k;
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) {
        int n = std::max(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (!(a.coeff(i) == b.coeff(i))) return false;
        return true;
    }

    bool zero() const {
        for (auto& k : c) if (!is_zero(k)) return false;
        return true;
    }
};

// exp(f) for f with zero constant term, via the derivation recurrence.
template <class K>
Series<K> series_exp(const Series<K>& f) {
    assert(is_zero(f.coeff(0)));
    int n = f.order();
    Series<K> e(n);
    e.at(0) = K(1);
    for (int m = 1; m <= n; ++m) {
        K acc(0);
        for (int k = 1; k <= m; ++k)
            acc = acc + K(k) * f.coeff(k) * e.coeff(m - k);
        e.at(m) = acc / K(m);
    }
    return e;
}

// log(1+q) truncated: q - q^2/2 + q^3/3 - ...
template <class K>
Series<K> series_log1p(int order) {
    Series<K> r(order);
    for (int m = 1; m <= order; ++m)
        r.at(m) = K((m % 2) ? 1 : -1) / K(m);
    return r;
}

// f(g(q)) for g with zero constant term.
template <class K>
Series<K> series_compose(const Series<K>& f, const Series<K>& g) {
    assert(is_zero(g.coeff(0)));
    int n = std::max(f.order(), g.order());
    Series<K> acc(n), pw(n);
    pw.at(0) = K(1);
    acc.at(0) = f.coeff(0);
    for (int i = 1; i <= f.order(); ++i) {
        pw = (pw * g).truncated(n);
        acc = acc + pw * f.coeff(i);
    }
    return acc;
}

// Functional inverse of x(q) = q + O(q^2): returns q(x) with x(q(x)) = x.
template <class K>
Series<K> series_revert(const Series<K>& xq) {
    if (!is_zero(xq.coeff(0)) || !(xq.coeff(1) == K(1)))
        throw std::domain_error("series_revert: expected x = q + O(q^2)");
    int n = xq.order();
    Series<K> qx(n);
    qx.at(1) = K(1);
    for (int it = 0; it < n + 2; ++it) {
        // q <- q - (x(q) - x), Newton-free fixed point; exact on truncations
        Series<K> err = series_compose(xq, qx);
        err.at(1) = err.coeff(1) - K(1); // subtract the identity series x
        qx = qx - err;
        qx.at(0) = K(0);
    }
    return qx;
}

} // namespace em
