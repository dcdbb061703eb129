#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace swnet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact integer square root; returns false when x is not a perfect square.
inline bool exact_isqrt(const Int& x, Int& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

// Exact square root of a nonnegative rational, when it exists.
inline bool exact_sqrt(const Rat& x, Rat& root) {
    Int rn, rd;
    if (!exact_isqrt(boost::multiprecision::numerator(x), rn)) return false;
    if (!exact_isqrt(boost::multiprecision::denominator(x), rd)) return false;
    root = Rat(rn, rd);
    return true;
}

}  // namespace swnet
