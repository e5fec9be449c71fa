#pragma once

#include <set>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/types.hpp"

namespace toric {

/// Binomial x^plus - x^minus over the matrix columns / graph edges.
/// Irreducible binomials have disjoint supports; binomials built straight
/// from walks may not (common factors are kept, never cancelled here).
struct Binomial {
  ExponentVector plus;
  ExponentVector minus;

  Binomial() = default;
  Binomial(ExponentVector p, ExponentVector m);

  size_t size() const { return plus.size(); }
  bool is_zero() const;

  /// Total of the plus side. For binomials of even closed walks the two
  /// sides agree; for general matrices they need not.
  Int degree() const;

  /// plus - minus as a signed vector.
  SignedVector vector() const;

  /// Indices where plus + minus is nonzero.
  std::vector<int> support() const;

  bool disjoint_supports() const;

  /// Sign normal form: the side holding the lowest-index column with a
  /// differing exponent becomes plus. Zero binomials are unchanged.
  Binomial canonical() const;

  bool operator==(const Binomial& other) const = default;
  /// Lexicographic on plus then minus; with canonical signs this gives the
  /// serialization order for sets.
  bool operator<(const Binomial& other) const;
};

using BinomialSet = std::set<Binomial>;

/// u1*a1 + ... + um*am for the columns a_i of A.
SignedVector a_degree(const IntegerMatrix& A, const ExponentVector& u);

/// Splits a signed vector into (positive part, negated negative part).
Binomial binomial_from_kernel_vector(const SignedVector& v);

/// True iff both sides have the same A-degree.
bool in_kernel(const IntegerMatrix& A, const Binomial& b);

/// True iff b1 divides b2 componentwise on both sides, in either
/// orientation (primitivity is insensitive to the overall sign).
bool dominates(const Binomial& b1, const Binomial& b2);

/// True iff no element of kernel_sample other than b itself dominates b.
/// Sound only when kernel_sample contains every kernel binomial bounded by
/// b, e.g. a complete Graver basis.
bool is_primitive_in_set(const Binomial& b, const BinomialSet& kernel_sample);

std::string to_string(const Binomial& b);

}  // namespace toric
