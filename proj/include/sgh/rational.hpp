#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sgh {

// Exact arithmetic everywhere: empirically the projector/boundary products in
// this project stay small, but minors during elimination do not, so the whole
// stack runs on arbitrary-precision integers and rationals (always in lowest
// terms with positive denominator — the boost invariant matches ours).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Narrow a Rational known to be a (small) non-negative integer, e.g. a
// projector trace that must equal a dimension.  Throws on fractional or
// negative input instead of silently truncating.
inline long long to_count(const Rational& q, const char* what) {
    if (!is_integer(q) || q < 0)
        throw std::logic_error(std::string(what) + ": expected a non-negative integer, got " +
                               q.str());
    return static_cast<long long>(numerator(q));
}

}  // namespace sgh
