#pragma once
#include "series.hpp"

namespace em {

// sum_{k>=1} sgn_k /(k^2 (k-1)!) * prod_{j=1}^{k-1}(s*k + j) x^k,
// with sgn_k = (-1)^{k-1} when alternating, else +1.
template <class K>
Series<K> hypergeometric_potential(const K& s, int order, bool alternating = true) {
    Series<K> r(order);
    for (int k = 1; k <= order; ++k) {
        K term(1);
        for (int j = 1; j <= k - 1; ++j)
            term = term * (s * K(k) + K(j)) / K(j);
        term = term / (K(k) * K(k));
        if (alternating && k % 2 == 0) term = K(0) - term;
        r.at(k) = term;
    }
    return r;
}

// Closed forms for the local-geometry potentials:
//   K_{P^2}:            s = 3
//   O(-1)+O(-1) twist:  s = k(2+k), alternating iff k odd
//   weight-(nu1,nu2) local curve: s = nu1*nu2 + nu1 + nu2
template <class K>
Series<K> closed_local_p2(int order) {
    return hypergeometric_potential(K(3), order);
}

template <class K>
Series<K> closed_local_p2_mu(int order) { // the mu-family at its normalization point
    return hypergeometric_potential(K(5), order) * K(2);
}

template <class K>
Series<K> closed_twist(long k, int order) {
    return hypergeometric_potential(K(k * (2 + k)), order, k % 2 != 0);
}

template <class K>
Series<K> closed_curve(const K& n1, const K& n2, int order) {
    K s = n1 * n2 + n1 + n2;
    return hypergeometric_potential(s, order);
}

} // namespace em
