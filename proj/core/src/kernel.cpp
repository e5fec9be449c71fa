#include "toric/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

SignedVector canonical_sign(SignedVector v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

namespace {

// Column elimination over Z with a unimodular transform U: every column
// operation applied to M is mirrored on U, so M0 * U_final = M_final.
struct ColumnEliminator {
  int n, m;
  std::vector<std::vector<Int>> M;  // n rows, m cols
  std::vector<std::vector<Int>> U;  // m x m, starts as identity

  explicit ColumnEliminator(const IntegerMatrix& A) : n(A.rows()), m(A.cols()) {
    M.assign(n, std::vector<Int>(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) M[i][j] = A.at(i, j);
    U.assign(m, std::vector<Int>(m));
    for (int j = 0; j < m; ++j) U[j][j] = 1;
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) std::swap(M[i][a], M[i][b]);
    for (int i = 0; i < m; ++i) std::swap(U[i][a], U[i][b]);
  }

  void negate_col(int a) {
    for (int i = 0; i < n; ++i) M[i][a] = -M[i][a];
    for (int i = 0; i < m; ++i) U[i][a] = -U[i][a];
  }

  void add_col(int dst, int src, const Int& q) {  // col_dst += q * col_src
    if (q == 0) return;
    for (int i = 0; i < n; ++i) M[i][dst] += q * M[i][src];
    for (int i = 0; i < m; ++i) U[i][dst] += q * U[i][src];
  }

  // Returns the rank; afterwards columns rank..m-1 of M are zero.
  int run() {
    int c = 0;
    for (int r = 0; r < n && c < m; ++r) {
      while (true) {
        int piv = -1;
        for (int j = c; j < m; ++j) {
          if (M[r][j] == 0) continue;
          if (piv == -1 || abs(M[r][j]) < abs(M[r][piv])) piv = j;
        }
        if (piv == -1) break;  // row r clear, next row
        swap_cols(c, piv);
        if (M[r][c] < 0) negate_col(c);
        bool clean = true;
        for (int j = c + 1; j < m; ++j) {
          if (M[r][j] == 0) continue;
          Int q = M[r][j] / M[r][c];
          add_col(j, c, -q);
          if (M[r][j] != 0) clean = false;
        }
        if (clean) {
          ++c;
          break;
        }
        // remainders left; repeat with the new smallest pivot
      }
    }
    return c;
  }
};

}  // namespace

KernelLattice integer_kernel_basis(const IntegerMatrix& A) {
  ColumnEliminator e(A);
  int rank = e.run();
  KernelLattice k;
  for (int j = rank; j < A.cols(); ++j) {
    SignedVector v(A.cols());
    for (int i = 0; i < A.cols(); ++i) v[i] = e.U[i][j];
    k.basis.push_back(canonical_sign(std::move(v)));
  }
  std::sort(k.basis.begin(), k.basis.end());
  return k;
}

int matrix_rank(const IntegerMatrix& A) {
  ColumnEliminator e(A);
  return e.run();
}

bool lattice_contains(const std::vector<SignedVector>& basis, const SignedVector& v) {
  if (basis.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  size_t m = basis[0].size();
  if (v.size() != m) throw std::invalid_argument("lattice_contains: dimension mismatch");
  // Column HNF of [basis | v]: v is in the span iff it reduces to zero
  // using integer column operations on the basis part only. Equivalent and
  // simpler: the kernel of the (m x (k+1)) matrix [basis v] must contain a
  // vector with last coordinate +-1.
  IntegerMatrix B(static_cast<int>(m), static_cast<int>(basis.size()) + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < m; ++i) B.at(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
  for (size_t i = 0; i < m; ++i) B.at(static_cast<int>(i), static_cast<int>(basis.size())) = v[i];
  KernelLattice k = integer_kernel_basis(B);
  // v in span <=> some integer combination of kernel vectors has last
  // coordinate 1; since the kernel basis is saturated, it suffices that the
  // gcd of last coordinates is 1.
  Int g = 0;
  for (const auto& w : k.basis) g = gcd(g, w.back());
  return g == 1;
}

}  // namespace toric
