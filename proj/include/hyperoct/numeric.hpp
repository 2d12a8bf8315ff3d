#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hyperoct {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(int n, int k);

// "p" or "p/q", q > 0, fully reduced.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Reads HYPEROCT_MAX_N once; defaults to fallback when unset or malformed.
int enumeration_bound(int fallback = 8);

}  // namespace hyperoct
