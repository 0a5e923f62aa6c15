#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace planevar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with optional leading '-' on either part.
// Throws ValidationError on anything else (including q = 0).
Rat rat_from_string(const std::string& text);

double rat_to_double(const Rat& r);

// Exact value of a finite binary64 number.
Rat rat_from_double(double v);

}  // namespace planevar
