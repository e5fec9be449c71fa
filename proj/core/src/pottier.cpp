#include "toric/pottier.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

// g^+ <= v^+ and g^- <= v^-, i.e. subtracting g moves v conformally
// towards zero.
bool reduces(const SignedVector& g, const SignedVector& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (g[i] > 0 && v[i] < g[i]) return false;
    if (g[i] < 0 && v[i] > g[i]) return false;
  }
  return true;
}

bool is_zero(const SignedVector& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int norm1(const SignedVector& v) {
  Int s = 0;
  for (const Int& x : v) s += abs(x);
  return s;
}

struct Candidate {
  Int norm;
  std::int64_t seq;
  SignedVector vec;
};

struct CandidateOrder {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.norm != b.norm) return a.norm > b.norm;  // min-heap by norm
    return a.seq > b.seq;                          // FIFO tie-break
  }
};

}  // namespace

SignedVector normal_form(SignedVector v, const std::vector<SignedVector>& G) {
  bool changed = true;
  while (changed && !is_zero(v)) {
    changed = false;
    for (const SignedVector& g : G) {
      if (is_zero(g)) continue;
      if (reduces(g, v)) {
        for (size_t i = 0; i < v.size(); ++i) v[i] -= g[i];
        changed = true;
        break;
      }
      bool neg_applies = true;
      for (size_t i = 0; i < v.size(); ++i) {
        if (g[i] < 0 && v[i] < -g[i]) neg_applies = false;
        if (g[i] > 0 && v[i] > -g[i]) neg_applies = false;
        if (!neg_applies) break;
      }
      if (neg_applies) {
        for (size_t i = 0; i < v.size(); ++i) v[i] += g[i];
        changed = true;
        break;
      }
    }
  }
  return v;
}

SignedVector normal_form(SignedVector v, const BinomialSet& G) {
  std::vector<SignedVector> vecs;
  vecs.reserve(G.size());
  for (const Binomial& b : G) vecs.push_back(b.vector());
  return normal_form(std::move(v), vecs);
}

BinomialSet graver_basis(const IntegerMatrix& A, const PottierCaps& caps) {
  KernelLattice lat = integer_kernel_basis(A);

  std::vector<SignedVector> G;
  for (const SignedVector& b : lat.basis)
    if (!is_zero(b)) G.push_back(b);
  if (static_cast<std::int64_t>(G.size()) > caps.max_elements)
    throw CapExceeded("graver_basis: element cap " + std::to_string(caps.max_elements) + " exceeded");

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> queue;
  std::int64_t seq = 0;
  std::int64_t pairs = 0;

  auto push_combinations = [&](size_t new_idx) {
    const SignedVector& f = G[new_idx];
    for (size_t j = 0; j < new_idx; ++j) {
      const SignedVector& g = G[j];
      SignedVector sum(f.size()), diff(f.size());
      for (size_t i = 0; i < f.size(); ++i) {
        sum[i] = f[i] + g[i];
        diff[i] = f[i] - g[i];
      }
      pairs += 2;
      if (pairs > caps.max_pairs)
        throw CapExceeded("graver_basis: candidate pair cap " + std::to_string(caps.max_pairs) + " exceeded");
      if (!is_zero(sum)) queue.push({norm1(sum), seq++, canonical_sign(std::move(sum))});
      if (!is_zero(diff)) queue.push({norm1(diff), seq++, canonical_sign(std::move(diff))});
    }
  };

  for (size_t i = 0; i < G.size(); ++i) push_combinations(i);

  while (!queue.empty()) {
    SignedVector s = std::move(queue.top().vec);
    queue.pop();
    SignedVector r = normal_form(std::move(s), G);
    if (is_zero(r)) continue;
    G.push_back(canonical_sign(std::move(r)));
    if (static_cast<std::int64_t>(G.size()) > caps.max_elements)
      throw CapExceeded("graver_basis: element cap " + std::to_string(caps.max_elements) + " exceeded");
    push_combinations(G.size() - 1);
  }

  // Keep only dominance-minimal elements; the survivors are exactly the
  // primitive kernel binomials.
  std::vector<Binomial> bins;
  bins.reserve(G.size());
  for (const SignedVector& g : G) bins.push_back(binomial_from_kernel_vector(g));
  BinomialSet result;
  for (size_t i = 0; i < bins.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < bins.size() && minimal; ++j) {
      if (j == i || bins[j] == bins[i]) continue;
      if (dominates(bins[j], bins[i])) minimal = false;
    }
    if (minimal) result.insert(bins[i].canonical());
  }
  return result;
}

}  // namespace toric
