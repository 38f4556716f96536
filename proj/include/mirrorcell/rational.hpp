#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mirrorcell {

// Exact arithmetic backends. mpq_class keeps values canonical (reduced,
// positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

// Accepts "n" or "n/d" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

}  // namespace mirrorcell
