#pragma once
#include "ifunc.hpp"
#include "birkhoff.hpp"
#include "series.hpp"

namespace em {

// How the 2x2 fundamental solution closes on two solutions of the PF system.
//   Wronskian:   rows (I, hbar q d/dq I) on the jet basis (I|_0, d/dp I|_0),
//                relation p^2 = 0.
//   Restriction: columns (I|_{p=0}, E * I|_{p=-mu}), relation p(p+mu) = 0;
//                mu d/dp I|_0 = -I|_0 + I|_{-mu} closes the system, and Q is
//                mapped back to the derivative basis by S(0)^{-1}.
enum class SolutionBasis { Wronskian, Restriction };

template <class K>
struct PipelineResult {
    BirkhoffPair<K> qr;
    std::vector<HMat<K>> S;
    Series<K> t0, tail;      // J = 1 + (p t + t0)/hbar + Wtilde/hbar^2, t = log q + tail
    Series<K> wscalar_q, wp_q; // Wtilde components in the q coordinate
};

template <class K>
std::vector<HMat<K>> fundamental_solution(const ToricSpec<K>& spec, int order,
                                          SolutionBasis basis, const K& mu) {
    spec.validate();
    std::vector<HMat<K>> S;
    for (int d = 0; d <= order; ++d) {
        HRat<K> dh(Poly<K>::monomial(K(d), 1));
        if (basis == SolutionBasis::Wronskian) {
            ICoeff<K> c = icoeff(spec, d, K(0), true);
            const HRat<K>&A = c.value, &B = c.dvalue;
            S.push_back({{A, B}, {dh * A, A + dh * B}});
        } else {
            HRat<K> A = icoeff(spec, d, K(0), false).value;
            K negmu = K(0) - mu;
            HRat<K> g = icoeff(spec, d, negmu, false).value;
            S.push_back({{A, g}, {dh * A, (dh - HRat<K>(mu)) * g}});
        }
    }
    return S;
}

template <class K>
std::vector<std::vector<K>> basis_normalizer(SolutionBasis basis, const K& mu) {
    if (basis == SolutionBasis::Wronskian) return scalar_identity<K>(2);
    // S(0) = [[1,1],[0,-mu]] for the restriction basis
    return {{K(1), K(1) / mu}, {K(0), K(0) - K(1) / mu}};
}

// Extract t0, mirror-map tail and the two Wtilde components from R.
// Works on any matrix sequence whose [0][0]/[0][1] entries expand in 1/hbar
// (plain R, or the interpolated S').
template <class K>
void extract_j(const std::vector<HMat<K>>& R, SolutionBasis basis, const K& mu,
               Series<K>& t0, Series<K>& tail,
               Series<K>& wscalar_q, Series<K>& wp_q) {
    int N = (int)R.size() - 1;
    t0 = Series<K>(N); tail = Series<K>(N);
    Series<K> j2a(N), j2b(N);
    for (int d = 1; d <= N; ++d) {
        auto a = R[d][0][0].infinity_coeffs(2);
        auto b = R[d][0][1].infinity_coeffs(2);
        t0.at(d) = a[1];
        j2a.at(d) = a[2];
        if (basis == SolutionBasis::Wronskian) {
            tail.at(d) = b[1];
            j2b.at(d) = b[2];
        } else {
            // b[1] = t0 - mu*tail; the log q parts of J2 cancel exactly
            tail.at(d) = (a[1] - b[1]) / mu;
            if (!is_zero(a[1] - mu * tail.at(d) - b[1]))
                throw std::domain_error("extract_j: log terms fail to cancel");
            j2b.at(d) = (a[2] - b[2]) / mu;
        }
    }
    wscalar_q = (t0 * t0) * (K(1) / K(2)) - j2a;
    wp_q = t0 * tail - j2b;
    if (basis == SolutionBasis::Restriction)
        wp_q = wp_q - (tail * tail) * (mu / K(2));
    wscalar_q.at(0) = K(0);
    wp_q.at(0) = K(0);
}

template <class K>
PipelineResult<K> run_pipeline(const ToricSpec<K>& spec, int order,
                               SolutionBasis basis, const K& mu) {
    PipelineResult<K> out;
    out.S = fundamental_solution(spec, order, basis, mu);
    out.qr = birkhoff_factorize(out.S, basis_normalizer(basis, mu));
    extract_j(out.qr.R, basis, mu, out.t0, out.tail, out.wscalar_q, out.wp_q);
    return out;
}

// Invert t = log q + tail(q), x = e^t = q*exp(tail), and push a q-series
// through the inverse map.
template <class K>
Series<K> mirror_q_of_x(const Series<K>& tail) {
    Series<K> xq = series_exp(tail);
    // multiply by q: shift up one degree
    Series<K> sh(tail.order());
    for (int i = 1; i <= tail.order(); ++i) sh.at(i) = xq.coeff(i - 1);
    return series_revert(sh);
}

template <class K>
Series<K> to_potential(const Series<K>& w_q, const Series<K>& tail) {
    return series_compose(w_q, mirror_q_of_x(tail));
}

// Interpolation between the factorized solution (w=0) and the unfactorized
// one (w=1): S'(w) = (1-w) R + w S.  Both endpoints expand in 1/hbar, the
// blend is linear in w, and the extracted mirror maps match the two limits.
template <class K>
std::vector<HMat<K>> interpolated_solution(const std::vector<HMat<K>>& S,
                                           const std::vector<HMat<K>>& R, const K& w) {
    int n = (int)S[0].size();
    std::vector<HMat<K>> Sp;
    for (size_t d = 0; d < S.size(); ++d) {
        HMat<K> m(n, std::vector<HRat<K>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[i][j] = R[d][i][j] + (S[d][i][j] - R[d][i][j]) * w;
        Sp.push_back(m);
    }
    return Sp;
}

} // namespace em
