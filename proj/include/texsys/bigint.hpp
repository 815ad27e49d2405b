#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace texsys {

// Exact integer arithmetic everywhere; Smith normal form intermediates can
// blow up even on small inputs.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

} // namespace texsys
