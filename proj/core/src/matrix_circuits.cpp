#include "toric/matrix_circuits.hpp"

#include <vector>

#include "toric/kernel.hpp"

namespace toric {

namespace {

void scan_subsets(const IntegerMatrix& A, int max_size, std::vector<int>& subset, int next, BinomialSet& out) {
  if (!subset.empty()) {
    IntegerMatrix sub(A.rows(), static_cast<int>(subset.size()));
    for (int j = 0; j < sub.cols(); ++j)
      for (int i = 0; i < A.rows(); ++i) sub.at(i, j) = A.at(i, subset[j]);
    KernelLattice k = integer_kernel_basis(sub);
    if (k.rank() >= 1) {
      // dependent set: minimal iff the dependency is unique and touches
      // every chosen column
      if (k.rank() == 1) {
        const SignedVector& w = k.basis[0];
        bool full_support = true;
        for (const Int& x : w)
          if (x == 0) {
            full_support = false;
            break;
          }
        if (full_support) {
          SignedVector v(A.cols());
          for (size_t j = 0; j < subset.size(); ++j) v[subset[j]] = w[j];
          out.insert(binomial_from_kernel_vector(v).canonical());
        }
      }
      return;  // supersets of a dependent set are never minimal
    }
  }
  if (static_cast<int>(subset.size()) == max_size) return;
  for (int j = next; j < A.cols(); ++j) {
    subset.push_back(j);
    scan_subsets(A, max_size, subset, j + 1, out);
    subset.pop_back();
  }
}

}  // namespace

BinomialSet circuits_of_matrix(const IntegerMatrix& A) {
  BinomialSet out;
  int max_size = matrix_rank(A) + 1;
  std::vector<int> subset;
  scan_subsets(A, max_size, subset, 0, out);
  return out;
}

}  // namespace toric
