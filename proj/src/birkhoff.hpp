#pragma once
#include <vector>
#include "hrat.hpp"

namespace em {

template <class K>
using HMat = std::vector<std::vector<HRat<K>>>;

template <class K>
HMat<K> hmat_identity(int n) {
    HMat<K> m(n, std::vector<HRat<K>>(n));
    for (int i = 0; i < n; ++i) m[i][i] = HRat<K>(1);
    return m;
}

template <class K>
HMat<K> hmat_mul(const HMat<K>& a, const HMat<K>& b) {
    int n = (int)a.size();
    HMat<K> r(n, std::vector<HRat<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HRat<K> acc;
            for (int k = 0; k < n; ++k)
                acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

template <class K>
HMat<K> hmat_add(const HMat<K>& a, const HMat<K>& b) {
    int n = (int)a.size();
    HMat<K> r(n, std::vector<HRat<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i][j] = a[i][j] + b[i][j];
    return r;
}

// Right-multiply an HRat matrix by a scalar matrix over K.
template <class K>
HMat<K> hmat_mul_scalar(const HMat<K>& a, const std::vector<std::vector<K>>& s) {
    int n = (int)a.size();
    HMat<K> r(n, std::vector<HRat<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HRat<K> acc;
            for (int k = 0; k < n; ++k)
                acc = acc + a[i][k] * s[k][j];
            r[i][j] = acc;
        }
    return r;
}

template <class K>
struct BirkhoffPair {
    std::vector<HMat<K>> Q; // Q[0] = identity
    std::vector<HMat<K>> R; // R[0] = S[0]
};

// Order-by-order triangular sweep: at each q-degree the polynomial part and
// every outer pole of the partial product is cleared into Q, expressed in the
// q^0 basis via s0inv = S[0]^{-1} (identity for Wronskian bases).
template <class K>
BirkhoffPair<K> birkhoff_factorize(const std::vector<HMat<K>>& S,
                                   const std::vector<std::vector<K>>& s0inv) {
    int n = (int)S[0].size();
    int N = (int)S.size() - 1;
    BirkhoffPair<K> out;
    out.Q.push_back(hmat_identity<K>(n));
    out.R.push_back(S[0]);
    for (int k = 1; k <= N; ++k) {
        HMat<K> acc(n, std::vector<HRat<K>>(n));
        for (int j = 0; j < k; ++j)
            acc = hmat_add(acc, hmat_mul(out.Q[j], S[k - j]));
        HMat<K> pos(n, std::vector<HRat<K>>(n)), rk(n, std::vector<HRat<K>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                pos[i][j] = acc[i][j].outer_part();
                rk[i][j] = acc[i][j] - pos[i][j];
                if (rk[i][j].has_outer())
                    throw std::domain_error("birkhoff: residual outer pole");
            }
        for (auto& row : pos)
            for (auto& e : row)
                e = -e;
        out.Q.push_back(hmat_mul_scalar(pos, s0inv));
        out.R.push_back(rk);
    }
    return out;
}

template <class K>
std::vector<std::vector<K>> scalar_identity(int n) {
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

// Reconstruction check: sum_j Q[j] S[k-j] == R[k] for all k.
template <class K>
bool birkhoff_reconstructs(const std::vector<HMat<K>>& S, const BirkhoffPair<K>& qr) {
    int n = (int)S[0].size();
    for (int k = 0; k < (int)S.size(); ++k) {
        HMat<K> acc(n, std::vector<HRat<K>>(n));
        for (int j = 0; j <= k; ++j)
            acc = hmat_add(acc, hmat_mul(qr.Q[j], S[k - j]));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(acc[i][j] - qr.R[k][i][j]).zero())
                    return false;
    }
    return true;
}

} // namespace em
