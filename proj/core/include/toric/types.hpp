#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace toric {

// Exact integer arithmetic throughout; Graver exponents overflow fixed
// width on adversarial inputs even when the inputs look harmless.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nonnegative exponents, one per matrix column / graph edge.
using ExponentVector = std::vector<Int>;

// Signed lattice vector, same indexing.
using SignedVector = std::vector<Int>;

}  // namespace toric
