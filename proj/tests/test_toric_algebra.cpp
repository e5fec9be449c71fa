#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toric/binomial.hpp"
#include "toric/graph.hpp"
#include "toric/pottier.hpp"

using namespace toric;
using testsupport::four_cycle;

namespace {

Binomial make(std::vector<long> plus, std::vector<long> minus) {
  ExponentVector p(plus.begin(), plus.end()), m(minus.begin(), minus.end());
  return Binomial{p, m};
}

}  // namespace

TEST_CASE("a_degree sums columns with multiplicity") {
  IntegerMatrix A = incidence_matrix(four_cycle());
  CHECK(a_degree(A, ExponentVector{1, 0, 1, 0}) == SignedVector{1, 1, 1, 1});
  CHECK(a_degree(A, ExponentVector{0, 0, 0, 0}) == SignedVector{0, 0, 0, 0});

  IntegerMatrix loop(1, 1);
  loop.at(0, 0) = 2;
  CHECK(a_degree(loop, ExponentVector{3}) == SignedVector{6});

  CHECK_THROWS_AS(a_degree(A, ExponentVector{1, 2}), std::invalid_argument);
}

TEST_CASE("binomial_from_kernel_vector splits signs with disjoint supports") {
  Binomial b = binomial_from_kernel_vector({1, -1, 1, -1});
  CHECK(b.plus == ExponentVector{1, 0, 1, 0});
  CHECK(b.minus == ExponentVector{0, 1, 0, 1});

  CHECK(binomial_from_kernel_vector({0, 0}).is_zero());

  Binomial c = binomial_from_kernel_vector({2, -1, -1});
  CHECK(c.plus == ExponentVector{2, 0, 0});
  CHECK(c.minus == ExponentVector{0, 1, 1});
  CHECK(c.disjoint_supports());
}

TEST_CASE("in_kernel compares A-degrees of the two sides") {
  IntegerMatrix A = incidence_matrix(four_cycle());
  CHECK(in_kernel(A, make({1, 0, 1, 0}, {0, 1, 0, 1})));
  CHECK_FALSE(in_kernel(A, make({1, 0, 0, 0}, {0, 1, 0, 0})));
  CHECK(in_kernel(A, make({3, 1, 0, 2}, {3, 1, 0, 2})));  // x^u - x^u

  // swapping the sides never changes membership
  Binomial b = make({1, 0, 1, 0}, {0, 1, 0, 1});
  CHECK(in_kernel(A, b) == in_kernel(A, Binomial{b.minus, b.plus}));
}

TEST_CASE("dominates is componentwise divisibility in either orientation") {
  Binomial b = make({1, 0}, {0, 1});
  CHECK(dominates(b, b));
  CHECK(dominates(make({1, 0}, {0, 1}), make({2, 0}, {0, 2})));
  CHECK(dominates(make({1, 0}, {0, 1}), make({0, 1}, {1, 0})));  // swapped orientation
  CHECK_FALSE(dominates(make({2, 0}, {0, 2}), make({1, 0}, {0, 1})));
  CHECK_THROWS_AS(dominates(b, make({1, 0, 0}, {0, 0, 1})), std::invalid_argument);
}

TEST_CASE("dominates is reflexive and transitive per orientation") {
  std::mt19937_64 rng(42);
  auto random_binomial = [&] {
    ExponentVector p(4), m(4);
    for (int i = 0; i < 4; ++i) {
      p[i] = static_cast<long>(rng() % 3);
      m[i] = static_cast<long>(rng() % 3);
    }
    return Binomial{p, m};
  };
  for (int it = 0; it < 200; ++it) {
    Binomial a = random_binomial();
    CHECK(dominates(a, a));
    Binomial b = a, c = a;
    for (int i = 0; i < 4; ++i) {
      b.plus[i] += static_cast<long>(rng() % 2);
      b.minus[i] += static_cast<long>(rng() % 2);
    }
    c = b;
    for (int i = 0; i < 4; ++i) {
      c.plus[i] += static_cast<long>(rng() % 2);
      c.minus[i] += static_cast<long>(rng() % 2);
    }
    // fixed orientation a <= b <= c
    CHECK(dominates(a, b));
    CHECK(dominates(b, c));
    CHECK(dominates(a, c));
  }
}

TEST_CASE("support covers both sides") {
  CHECK(make({1, 0, 1, 0}, {0, 1, 0, 1}).support() == std::vector<int>{0, 1, 2, 3});
  CHECK(make({0, 0}, {0, 0}).support().empty());
  CHECK(make({2, 0, 0, 0}, {0, 0, 0, 1}).support() == std::vector<int>{0, 3});
}

TEST_CASE("is_primitive_in_set checks dominance by other elements") {
  Binomial g = make({1, 0, 1, 0}, {0, 1, 0, 1});
  BinomialSet single{g};
  CHECK(is_primitive_in_set(g, single));

  Binomial sq = make({2, 0, 2, 0}, {0, 2, 0, 2});
  CHECK_FALSE(is_primitive_in_set(sq, single));

  // the 4-cycle binomial against the completed Graver set
  BinomialSet graver = graver_basis(incidence_matrix(four_cycle()));
  CHECK(is_primitive_in_set(g, graver));
}

TEST_CASE("canonical sign puts the lowest differing index on the plus side") {
  Binomial b = make({0, 1, 0, 1}, {1, 0, 1, 0});
  Binomial c = b.canonical();
  CHECK(c.plus == ExponentVector{1, 0, 1, 0});
  CHECK(b.canonical() == Binomial{b.minus, b.plus}.canonical());
  CHECK(make({3, 1}, {3, 1}).canonical() == make({3, 1}, {3, 1}));  // zero binomial untouched
}

TEST_CASE("kernel vector round trip is the identity on irreducible binomials") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    SignedVector v(6);
    for (auto& x : v) x = static_cast<long>(rng() % 9) - 4;
    Binomial b = binomial_from_kernel_vector(v);
    CHECK(b.disjoint_supports());
    CHECK(binomial_from_kernel_vector(b.vector()) == b);
    CHECK(b.vector() == v);
  }
}

TEST_CASE("degree is the plus total") {
  CHECK(make({1, 0, 2, 0}, {0, 1, 0, 1}).degree() == 3);
  CHECK(make({0, 0}, {0, 0}).degree() == 0);
}
