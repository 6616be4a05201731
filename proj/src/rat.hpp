#pragma once
#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace em {

using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return r == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("bad rational (zero denominator): " + s);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(Rat base, long e) {
    if (e < 0) { base = Rat(1) / base; e = -e; }
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace em
