#pragma once

#include <vector>

#include "toric/matrix.hpp"
#include "toric/types.hpp"

namespace toric {

/// Basis of the full integer kernel {v in Z^m : Av = 0}. Saturated by
/// construction: the basis vectors are columns of a unimodular matrix, so
/// they span the whole kernel, not a finite-index sublattice.
struct KernelLattice {
  std::vector<SignedVector> basis;  // canonically signed, sorted
  int rank() const { return static_cast<int>(basis.size()); }
};

KernelLattice integer_kernel_basis(const IntegerMatrix& A);

/// Rational rank of A (= cols - kernel rank).
int matrix_rank(const IntegerMatrix& A);

/// Exact membership of v in the Z-span of the given vectors.
bool lattice_contains(const std::vector<SignedVector>& basis, const SignedVector& v);

/// First nonzero entry made positive; zero vectors unchanged.
SignedVector canonical_sign(SignedVector v);

}  // namespace toric
