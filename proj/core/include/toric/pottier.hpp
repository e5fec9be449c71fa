#pragma once

#include <cstdint>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/kernel.hpp"
#include "toric/matrix.hpp"

namespace toric {

/// Hard limits for the completion. Graver bases grow explosively and a
/// truncated basis would poison every oracle comparison, so hitting a cap
/// raises CapExceeded instead of returning a partial set.
struct PottierCaps {
  std::int64_t max_elements = 100'000;
  std::int64_t max_pairs = 10'000'000;
};

/// Repeatedly subtracts sign-compatible elements of G (either orientation)
/// from v until none applies. The reducer is the lowest-index applicable
/// element, positive orientation first, which makes the result
/// deterministic for a fixed ordering of G.
SignedVector normal_form(SignedVector v, const std::vector<SignedVector>& G);

/// Same reduction against a canonical binomial set, in its sorted order.
SignedVector normal_form(SignedVector v, const BinomialSet& G);

/// Complete Graver basis of ker A by Pottier completion: start from a
/// saturated kernel basis, close under sums with conformal normal-form
/// reduction, then keep the dominance-minimal elements. S-vector
/// candidates are processed in increasing 1-norm order, FIFO on ties.
BinomialSet graver_basis(const IntegerMatrix& A, const PottierCaps& caps = {});

}  // namespace toric
