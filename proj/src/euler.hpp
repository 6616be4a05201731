#pragma once
#include <optional>
#include "ifunc.hpp"

namespace em {

// Product of linear forms a*p + b, truncated modulo p^2.
template <class K>
struct LinForm {
    K a, b; // a*p + b
};

template <class K>
std::pair<K, K> product_mod_p2(const std::vector<LinForm<K>>& forms) {
    K c0(1), c1(0);
    for (auto& f : forms) {
        K n0 = c0 * f.b;
        K n1 = c0 * f.a + c1 * f.b;
        c0 = n0;
        c1 = n1;
    }
    return {c0, c1};
}

// lhs == c * rhs mod p^2 for a single nonzero scalar c, reported; nullopt if
// the products are not proportional.
template <class K>
std::optional<K> euler_scalar(const std::vector<LinForm<K>>& lhs,
                              const std::vector<LinForm<K>>& rhs) {
    auto [l0, l1] = product_mod_p2(lhs);
    auto [r0, r1] = product_mod_p2(rhs);
    if (is_zero(r0) && is_zero(r1)) return std::nullopt;
    K c;
    if (!is_zero(r0)) c = l0 / r0;
    else c = l1 / r1;
    if (l0 == c * r0 && l1 == c * r1 && !is_zero(c)) return c;
    return std::nullopt;
}

// Total equivariant Euler class (mod p^2) of the bundle part of a toric spec:
// the product of (l*p + w) over the negative-charge columns, with the sign
// convention of the I-function numerator, repeated |l| times collapsing to the
// single form (l*p + w) of multiplicity one per column as printed.
template <class K>
std::vector<LinForm<K>> bundle_forms(const ToricSpec<K>& spec) {
    std::vector<LinForm<K>> out;
    for (size_t c = 0; c < spec.cols(); ++c)
        if (spec.charges[c] < 0)
            out.push_back({K(spec.charges[c]), spec.weights[c]});
    return out;
}

} // namespace em
