#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "baskets/errors.hpp"

namespace baskets {

using Int = long long;
using Rat = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms with q > 0; plain "p" when q == 1.
std::string to_string(const Rat& x);

// Accepts "p" or "p/q"; normalizes sign and reduces.
Rat parse_rat(const std::string& s);

}  // namespace baskets
