#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "amplifiber/errors.hpp"

namespace amplifiber {

// All arithmetic in this library is exact.  Rat is a reduced fraction of
// arbitrary-precision integers; there is no floating point anywhere in the
// computational core.
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

// Serialized form used in JSON output: "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& x) {
    return x.get_str();
}

// Parses "p/q" or "p".  Accepts unreduced input and canonicalizes it.
inline Rat rat_parse(const std::string& s) {
    try {
        Rat x(s);
        if (x.get_den() == 0) {
            throw ValidationError("rational with zero denominator: '" + s + "'");
        }
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a rational number: '" + s + "'");
    }
}

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw InternalError("dot: length mismatch");
    }
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace amplifiber
