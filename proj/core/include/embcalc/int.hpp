#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace embcalc {

// Exact integer arithmetic everywhere; intermediate entries in Smith normal
// form reductions can grow far beyond 64 bits.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

} // namespace embcalc
