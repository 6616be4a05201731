#pragma once
#include <vector>
#include <string>
#include "hrat.hpp"

namespace em {

// Expansion regime of a toric column:
// columns expanded at hbar=0 contribute poles cleared into Q (outer);
// columns expanded at hbar=infinity contribute poles kept in R (inner).
enum class Regime { HZero, HInf };

// One-row charge data (P^1/P^2-type targets): column c contributes the
// linear form l_c * p + w_c + m*hbar.
template <class K>
struct ToricSpec {
    std::vector<long> charges;
    std::vector<K> weights;
    std::vector<Regime> regimes;
    std::string relation; // factored relation as written in the spec file

    size_t cols() const { return charges.size(); }
    void validate() const {
        if (charges.empty() || charges.size() != weights.size() ||
            charges.size() != regimes.size())
            throw std::invalid_argument("toric spec: ragged columns");
        long sum = 0;
        for (long l : charges) {
            if (l == 0) throw std::invalid_argument("toric spec: zero charge column");
            sum += l;
        }
        if (sum != 0)
            throw std::invalid_argument("toric spec: charges must sum to zero");
    }
};

// Hypergeometric coefficient of q^d evaluated at a point p = r of the
// cohomology ring, together with its p-derivative there.  Positive-charge
// columns contribute denominator factors (tagged with the column regime),
// negative-charge columns contribute numerator factors.
template <class K>
struct ICoeff {
    HRat<K> value;
    HRat<K> dvalue;
};

template <class K>
ICoeff<K> icoeff(const ToricSpec<K>& spec, int d, const K& r, bool with_deriv) {
    struct NumOcc { K cst; K lin; K dcst; };             // cst + lin*hbar
    struct DenOcc { K c; bool inner; K dcdr; };          // monic (hbar + c)
    std::vector<NumOcc> nums;
    std::vector<DenOcc> dens;
    K scale(1);
    for (size_t ci = 0; ci < spec.cols(); ++ci) {
        long l = spec.charges[ci];
        const K& w = spec.weights[ci];
        bool inner = spec.regimes[ci] == Regime::HInf;
        K lw = K(l) * r + w;
        if (l > 0) {
            for (long m = 1; m <= l * d; ++m) {
                // (l*r + w + m*hbar) = m * (hbar + (l*r+w)/m)
                dens.push_back({lw / K(m), inner, K(l) / K(m)});
                scale = scale / K(m);
            }
        } else {
            for (long m = l * d + 1; m <= 0; ++m)
                nums.push_back({lw, K(m), K(l)});
        }
    }

    HRat<K> val{Poly<K>(scale)};
    for (auto& n : nums)
        val.num = val.num * Poly<K>({n.cst, n.lin});
    for (auto& f : dens)
        val.push_factor(f.c, 1, f.inner);
    val.cancel();

    ICoeff<K> out;
    out.value = val;
    if (with_deriv) {
        // product rule: one numerator occurrence replaced by its p-derivative,
        // plus -d(c)/dp times an extra power of each denominator factor
        HRat<K> dv;
        for (size_t i = 0; i < nums.size(); ++i) {
            HRat<K> term(Poly<K>(scale * nums[i].dcst));
            for (size_t j = 0; j < nums.size(); ++j)
                if (j != i) term.num = term.num * Poly<K>({nums[j].cst, nums[j].lin});
            for (auto& f : dens) term.push_factor(f.c, 1, f.inner);
            term.cancel();
            dv = dv + term;
        }
        for (auto& f : dens) {
            HRat<K> term = val * (K(0) - f.dcdr);
            term.push_factor(f.c, 1, f.inner);
            term.cancel();
            dv = dv + term;
        }
        out.dvalue = dv;
    }
    return out;
}

} // namespace em
