#pragma once

#include "toric/binomial.hpp"
#include "toric/matrix.hpp"

namespace toric {

/// Circuits of I_A: for every support-minimal kernel vector the primitive
/// (coordinate gcd 1) representative, canonically signed. Scans column
/// subsets of size <= rank(A)+1 whose kernel is one-dimensional with full
/// support on the subset. Exponential in cols; callers keep cols small
/// (around 20 at most).
BinomialSet circuits_of_matrix(const IntegerMatrix& A);

}  // namespace toric
