#pragma once
#include "ifunc.hpp"

namespace em {

// The quotient ring K[p] / prod_k (p - roots[k])^mults[k]; elements are held
// as jets (value and p-derivatives up to mults[k]-1) at each root.  Only
// multiplicity <= 2 is needed here.
template <class K>
struct QuotientRing {
    std::vector<K> roots;
    std::vector<int> mults;

    void validate() const {
        if (roots.size() != mults.size() || roots.empty())
            throw std::invalid_argument("quotient ring: ragged roots");
        for (int m : mults)
            if (m < 1 || m > 2)
                throw std::invalid_argument("quotient ring: multiplicity must be 1 or 2");
    }
};

template <class K>
struct RingJet {
    // jets[k][j] = (d/dp)^j at p = roots[k]
    std::vector<std::vector<HRat<K>>> jets;

    bool zero() const {
        for (auto& r : jets)
            for (auto& h : r)
                if (!h.zero()) return false;
        return true;
    }
};

// One first-order factor (l*theta + w + s*hbar) of the hypergeometric
// operator, theta = p + hbar q d/dq: on a q^{d + p/hbar} term it becomes
// l*p + w + (l*d + s) hbar.
template <class K>
struct PFFactor {
    long l;
    K w;
    long s;
};

// D = prod_{l_c > 0} prod_{i=0}^{l_c - 1} (l_c theta + w_c - i hbar)
//   - q * prod_{l_c < 0} prod_{i=0}^{-l_c - 1} (l_c theta + w_c - i hbar);
// each side, applied at q-degree d, reproduces exactly the factors by which
// consecutive I-function coefficients differ.
template <class K>
struct PFOperator {
    std::vector<PFFactor<K>> lhs, rhs;
};

template <class K>
PFOperator<K> pf_operator(const ToricSpec<K>& spec) {
    PFOperator<K> op;
    for (size_t c = 0; c < spec.cols(); ++c) {
        long l = spec.charges[c];
        if (l > 0)
            for (long i = 0; i < l; ++i)
                op.lhs.push_back({l, spec.weights[c], -i});
        else
            for (long i = 0; i < -l; ++i)
                op.rhs.push_back({l, spec.weights[c], -i});
    }
    return op;
}

namespace detail {

// Multiply a jet element by l*p + w + (l*d + s) hbar; the p-derivative of the
// factor is the constant l.
template <class K>
void mul_factor(RingJet<K>& g, const QuotientRing<K>& ring,
                const PFFactor<K>& f, int d) {
    for (size_t k = 0; k < ring.roots.size(); ++k) {
        K lr = K(f.l) * ring.roots[k];
        HRat<K> fv{Poly<K>({lr + f.w, K(f.l * d + f.s)})};
        auto& jet = g.jets[k];
        if (jet.size() == 2) {
            HRat<K> fd{Poly<K>(K(f.l))};
            jet[1] = fv * jet[1] + fd * jet[0];
        }
        jet[0] = fv * jet[0];
    }
}

template <class K>
RingJet<K> icoeff_jets(const ToricSpec<K>& spec, const QuotientRing<K>& ring, int d) {
    RingJet<K> g;
    for (size_t k = 0; k < ring.roots.size(); ++k) {
        ICoeff<K> c = icoeff(spec, d, ring.roots[k], ring.mults[k] > 1);
        std::vector<HRat<K>> jet{c.value};
        if (ring.mults[k] > 1) jet.push_back(c.dvalue);
        g.jets.push_back(std::move(jet));
    }
    return g;
}

template <class K>
RingJet<K> apply_side(const std::vector<PFFactor<K>>& side, RingJet<K> g,
                      const QuotientRing<K>& ring, int d) {
    for (auto& f : side) mul_factor(g, ring, f, d);
    return g;
}

} // namespace detail

// Residual of D at q^d applied to the I-function: lhs(d) I_d - rhs(d-1) I_{d-1}.
template <class K>
RingJet<K> pf_residual(const ToricSpec<K>& spec, const QuotientRing<K>& ring, int d) {
    ring.validate();
    PFOperator<K> op = pf_operator(spec);
    // regime tags are irrelevant to the operator check; retag uniformly so the
    // hbar=0 factors introduced by theta never conflict
    ToricSpec<K> s2 = spec;
    for (auto& r : s2.regimes) r = Regime::HInf;
    RingJet<K> res = detail::apply_side(op.lhs, detail::icoeff_jets(s2, ring, d), ring, d);
    if (d > 0) {
        RingJet<K> prev =
            detail::apply_side(op.rhs, detail::icoeff_jets(s2, ring, d - 1), ring, d - 1);
        for (size_t k = 0; k < res.jets.size(); ++k)
            for (size_t j = 0; j < res.jets[k].size(); ++j)
                res.jets[k][j] = res.jets[k][j] - prev.jets[k][j];
    }
    return res;
}

template <class K>
bool pf_annihilates(const ToricSpec<K>& spec, const QuotientRing<K>& ring, int order) {
    for (int d = 0; d <= order; ++d)
        if (!pf_residual(spec, ring, d).zero()) return false;
    return true;
}

// Residual of D applied to the constant series 1; nonzero at q^1 whenever the
// rhs product does not vanish on the ring, certifying that 1 is not a solution.
template <class K>
RingJet<K> pf_residual_of_one(const ToricSpec<K>& spec, const QuotientRing<K>& ring) {
    ring.validate();
    PFOperator<K> op = pf_operator(spec);
    RingJet<K> one;
    for (size_t k = 0; k < ring.roots.size(); ++k) {
        std::vector<HRat<K>> jet{HRat<K>(1)};
        if (ring.mults[k] > 1) jet.push_back(HRat<K>());
        one.jets.push_back(std::move(jet));
    }
    RingJet<K> res = detail::apply_side(op.rhs, one, ring, 0);
    for (auto& r : res.jets)
        for (auto& h : r)
            h = -h;
    return res;
}

} // namespace em
