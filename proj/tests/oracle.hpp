#pragma once

// Test-only reference enumerator for short vectors, deliberately built on a
// different method than the library (plain box enumeration with bounds from
// the inverse form, no recursion, no pruning).  Keep it dumb and obviously
// correct; it is the yardstick the fast enumerator is measured against.

#include <algorithm>
#include <map>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"

namespace latkit::testing {

// det of q with row i and column i removed
inline Int principal_minor(const Mat<Int>& q, std::size_t skip) {
  const std::size_t n = q.rows();
  Mat<Int> m(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip) continue;
      m(r, c) = q(i, j);
      ++c;
    }
    ++r;
  }
  return det_bareiss(m);
}

// All vectors v != 0 with min_norm <= (v,v) < 0, keyed by norm.
// Box bound: for positive definite Q and Q(x) <= c, x_i^2 <= c * (Q^{-1})_{ii}.
inline std::map<Int, std::vector<std::vector<Int>>> brute_force_vectors(
    const GramLattice& l, const Int& min_norm) {
  const std::size_t n = l.rank();
  std::map<Int, std::vector<std::vector<Int>>> out;
  if (n == 0) return out;
  Mat<Int> q = l.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = -q(i, j);
  const Int det_q = det_bareiss(q);
  const Int c = -min_norm;
  std::vector<Int> bound(n);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = floor_sqrt(Rat(c * principal_minor(q, i), det_q));
  std::vector<Int> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    Int nrm = l.norm(x);
    if (nrm < 0 && nrm >= min_norm) out[nrm].push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  for (auto& [k, vecs] : out) std::sort(vecs.begin(), vecs.end());
  return out;
}

inline std::vector<std::vector<Int>> brute_force_norm(const GramLattice& l,
                                                      const Int& norm) {
  auto all = brute_force_vectors(l, norm);
  auto it = all.find(norm);
  return it == all.end() ? std::vector<std::vector<Int>>{} : it->second;
}

}  // namespace latkit::testing
