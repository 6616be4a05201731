#pragma once
#include <vector>
#include <stdexcept>
#include "poly.hpp"

namespace em {

// Rational function of hbar over a field K whose denominator is kept as a
// product of monic linear factors (hbar + c), each tagged with the expansion
// regime of the toric column it came from.  Factors tagged `inner` hold poles
// that stay in R under Birkhoff factorization (columns expanded at
// hbar=infinity); `outer` factors are cleared into Q (columns expanded at
// hbar=0).  Denominators are never re-factored: the tags are assigned when an
// I-function coefficient is built and only propagate from there.
template <class K>
struct HRat {
    struct Factor {
        K c;       // the factor is (hbar + c)
        int mult;
        bool inner;
    };

    Poly<K> num;
    std::vector<Factor> den;

    HRat() = default;
    HRat(long v) : num(K(v)) {}
    explicit HRat(K k) : num(std::move(k)) {}
    explicit HRat(Poly<K> p) : num(std::move(p)) {}

    bool zero() const { return num.zero(); }

    void push_factor(const K& c, int mult, bool inner) {
        for (auto& f : den) {
            if (f.c == c) {
                if (f.inner != inner)
                    throw std::domain_error("HRat: pole appears with both regime tags");
                f.mult += mult;
                return;
            }
        }
        den.push_back({c, mult, inner});
    }

    // divide the numerator by each denominator factor that divides it exactly
    void cancel() {
        if (num.zero()) { den.clear(); return; }
        for (auto& f : den) {
            while (f.mult > 0) {
                K root = K(0) - f.c;
                if (!is_zero(num.eval(root))) break;
                // synthetic division by (hbar + c)
                Poly<K> q;
                q.c.assign(num.deg(), K(0));
                K carry(0);
                for (int i = num.deg(); i >= 1; --i) {
                    carry = num.c[i] + carry;
                    q.c[i - 1] = carry;
                    carry = carry * root;
                }
                num = std::move(q);
                num.trim();
                --f.mult;
            }
        }
        std::erase_if(den, [](const Factor& f) { return f.mult == 0; });
    }

    Poly<K> den_poly() const {
        Poly<K> d{K(1)};
        for (auto& f : den)
            for (int i = 0; i < f.mult; ++i)
                d = d * Poly<K>({f.c, K(1)});
        return d;
    }

    int den_deg() const {
        int d = 0;
        for (auto& f : den) d += f.mult;
        return d;
    }

    friend HRat operator*(const HRat& a, const HRat& b) {
        HRat r;
        r.num = a.num * b.num;
        if (r.zero()) return r;
        r.den = a.den;
        for (auto& f : b.den) r.push_factor(f.c, f.mult, f.inner);
        r.cancel();
        return r;
    }
    friend HRat operator*(const HRat& a, const K& k) {
        HRat r = a;
        r.num = r.num * k;
        if (r.zero()) r.den.clear();
        return r;
    }
    HRat operator-() const {
        HRat r = *this;
        r.num = -r.num;
        return r;
    }
    friend HRat operator+(const HRat& a, const HRat& b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        // common denominator: per-factor max multiplicity
        HRat r;
        r.den = a.den;
        for (auto& f : b.den) {
            bool found = false;
            for (auto& g : r.den)
                if (g.c == f.c) { g.mult = std::max(g.mult, f.mult); found = true; break; }
            if (!found) r.den.push_back(f);
        }
        auto complement = [&](const HRat& x) {
            Poly<K> m{K(1)};
            for (auto& g : r.den) {
                int have = 0;
                for (auto& f : x.den) if (f.c == g.c) { have = f.mult; break; }
                for (int i = have; i < g.mult; ++i)
                    m = m * Poly<K>({g.c, K(1)});
            }
            return m;
        };
        r.num = a.num * complement(a) + b.num * complement(b);
        if (r.zero()) { r.den.clear(); return r; }
        r.cancel();
        return r;
    }
    friend HRat operator-(const HRat& a, const HRat& b) { return a + (-b); }
    friend bool operator==(const HRat& a, const HRat& b) { return (a - b).zero(); }

    bool is_poly() const { return den.empty(); }
    bool has_inner() const {
        for (auto& f : den) if (f.inner) return true;
        return false;
    }
    bool has_outer() const {
        for (auto& f : den) if (!f.inner) return true;
        return false;
    }

    // Splits into (polynomial part + outer-pole part, inner-pole part).
    // The outer piece is the sum of principal parts at the outer poles,
    // computed by Taylor expansion -- exact, and avoids any gcd/Euclid at the
    // hbar level.
    HRat outer_part() const {
        if (zero() || den.empty()) return *this;
        bool any_in = has_inner(), any_out = has_outer();
        if (!any_in) return *this; // poles all outer (plus any polynomial part)
        Poly<K> D = den_poly();
        auto [polypart, rem] = divmod(num, D);
        HRat out(polypart);
        if (!any_out) return out;
        for (auto& f : den) {
            if (f.inner) continue;
            int m = f.mult;
            // Taylor coefficients of rem at hbar = -c via repeated synthetic
            // division by (hbar + c)
            std::vector<K> a(m, K(0));
            Poly<K> cur = rem;
            K root = K(0) - f.c;
            for (int t = 0; t < m && !cur.zero(); ++t) {
                a[t] = cur.eval(root);
                Poly<K> q;
                q.c.assign(std::max(cur.deg(), 0), K(0));
                K carry(0);
                for (int i = cur.deg(); i >= 1; --i) {
                    carry = cur.c[i] + carry;
                    q.c[i - 1] = carry;
                    carry = carry * root;
                }
                q.trim();
                cur = std::move(q);
            }
            // Taylor of the co-factor product prod_{g != f}(u + (c_g - c))^{m_g}
            std::vector<K> b(m, K(0));
            b[0] = K(1);
            for (auto& g : den) {
                if (&g == &f) continue;
                K d0 = g.c - f.c;
                for (int rep = 0; rep < g.mult; ++rep) {
                    for (int i = m - 1; i >= 0; --i)
                        b[i] = b[i] * d0 + (i > 0 ? b[i - 1] : K(0));
                }
            }
            // t = a / b as a truncated series; b[0] != 0 since poles are distinct
            std::vector<K> tc(m, K(0));
            for (int i = 0; i < m; ++i) {
                K acc = a[i];
                for (int j = 1; j <= i; ++j) acc = acc - b[j] * tc[i - j];
                tc[i] = acc / b[0];
            }
            // principal part sum_t tc[t]/(hbar+c)^{m-t}
            Poly<K> pn;
            Poly<K> pw{K(1)};
            for (int t = 0; t < m; ++t) {
                pn = pn + pw * tc[t];
                pw = pw * Poly<K>({f.c, K(1)});
            }
            HRat pp(pn);
            if (!pp.zero()) {
                pp.push_factor(f.c, m, false);
                pp.cancel();
            }
            out = out + pp;
        }
        return out;
    }

    // Coefficients of hbar^0, hbar^-1, ..., hbar^-m of the expansion at
    // hbar = infinity.  Requires deg num <= deg den.
    std::vector<K> infinity_coeffs(int m) const {
        std::vector<K> out(m + 1, K(0));
        if (zero()) return out;
        Poly<K> D = den_poly();
        int dd = D.deg(), nd = num.deg();
        if (nd > dd)
            throw std::domain_error("HRat: positive powers at hbar=infinity");
        int shift = dd - nd;
        // f(1/u) = u^shift * Nrev(u)/Drev(u), Drev(0) = 1 (monic den)
        std::vector<K> nrev(m + 1, K(0)), drev(m + 1, K(0));
        for (int i = 0; i <= nd && i <= m; ++i) nrev[i] = num.coeff(nd - i);
        for (int i = 0; i <= dd && i <= m; ++i) drev[i] = D.coeff(dd - i);
        std::vector<K> T(m + 1, K(0)); // Nrev/Drev as a series in u
        for (int i = 0; i <= m; ++i) {
            K acc = nrev[i];
            for (int j = 1; j <= i; ++j) acc = acc - drev[j] * T[i - j];
            T[i] = acc; // drev[0] == 1
        }
        for (int j = shift; j <= m; ++j) out[j] = T[j - shift];
        return out;
    }
};

template <class K>
bool is_zero(const HRat<K>& h) { return h.zero(); }

} // namespace em
