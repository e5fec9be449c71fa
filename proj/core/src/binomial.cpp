#include "toric/binomial.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

SignedVector IntegerMatrix::column(int j) const {
  SignedVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Binomial::Binomial(ExponentVector p, ExponentVector m) : plus(std::move(p)), minus(std::move(m)) {
  if (plus.size() != minus.size()) throw std::invalid_argument("binomial sides differ in length");
}

bool Binomial::is_zero() const {
  for (size_t i = 0; i < plus.size(); ++i)
    if (plus[i] != minus[i]) return false;
  return true;
}

Int Binomial::degree() const {
  Int d = 0;
  for (const Int& e : plus) d += e;
  return d;
}

SignedVector Binomial::vector() const {
  SignedVector v(plus.size());
  for (size_t i = 0; i < plus.size(); ++i) v[i] = plus[i] - minus[i];
  return v;
}

std::vector<int> Binomial::support() const {
  std::vector<int> s;
  for (size_t i = 0; i < plus.size(); ++i)
    if (plus[i] != 0 || minus[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool Binomial::disjoint_supports() const {
  for (size_t i = 0; i < plus.size(); ++i)
    if (plus[i] != 0 && minus[i] != 0) return false;
  return true;
}

Binomial Binomial::canonical() const {
  for (size_t i = 0; i < plus.size(); ++i) {
    if (plus[i] == minus[i]) continue;
    if (plus[i] > minus[i]) return *this;
    return Binomial{minus, plus};
  }
  return *this;
}

bool Binomial::operator<(const Binomial& other) const {
  if (plus != other.plus) return plus < other.plus;
  return minus < other.minus;
}

SignedVector a_degree(const IntegerMatrix& A, const ExponentVector& u) {
  if (static_cast<size_t>(A.cols()) != u.size()) throw std::invalid_argument("a_degree: dimension mismatch");
  SignedVector d(A.rows());
  for (int j = 0; j < A.cols(); ++j) {
    if (u[j] == 0) continue;
    for (int i = 0; i < A.rows(); ++i) d[i] += u[j] * A.at(i, j);
  }
  return d;
}

Binomial binomial_from_kernel_vector(const SignedVector& v) {
  ExponentVector p(v.size()), m(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0)
      p[i] = v[i];
    else if (v[i] < 0)
      m[i] = -v[i];
  }
  return Binomial{std::move(p), std::move(m)};
}

bool in_kernel(const IntegerMatrix& A, const Binomial& b) {
  return a_degree(A, b.plus) == a_degree(A, b.minus);
}

static bool leq_componentwise(const ExponentVector& a, const ExponentVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dominates(const Binomial& b1, const Binomial& b2) {
  if (b1.size() != b2.size()) throw std::invalid_argument("dominates: dimension mismatch");
  if (leq_componentwise(b1.plus, b2.plus) && leq_componentwise(b1.minus, b2.minus)) return true;
  return leq_componentwise(b1.plus, b2.minus) && leq_componentwise(b1.minus, b2.plus);
}

bool is_primitive_in_set(const Binomial& b, const BinomialSet& kernel_sample) {
  Binomial cb = b.canonical();
  for (const Binomial& g : kernel_sample) {
    if (g.is_zero() || g.canonical() == cb) continue;
    if (dominates(g, b)) return false;
  }
  return true;
}

std::string to_string(const Binomial& b) {
  auto side = [](const ExponentVector& u) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << "e" << i;
      if (u[i] != 1) os << "^" << u[i];
    }
    if (first) os << "1";
    return os.str();
  };
  return side(b.plus) + " - " + side(b.minus);
}

}  // namespace toric
