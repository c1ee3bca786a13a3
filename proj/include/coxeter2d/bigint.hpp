#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coxeter2d {

// Arbitrary-precision integer for group orders; |GL_n(F_2)| overflows 64 bits
// near n = 12.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace coxeter2d
