#pragma once

// Short-vector enumeration on negative-definite lattices: exact rational
// LDL^T quadratic completion with branch-and-bound over integer coordinates.
// Bounds use exact integer square roots of rationals, never floating point.
// Output is fully deterministic: both signs of every vector appear and the
// final list is sorted lexicographically by coordinates.

#include <algorithm>
#include <map>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"

namespace latkit {

struct NormQuery {
  Int norm;  // target pairing value, negative
};

namespace detail {

// largest integer u with u <= sqrt(bound) - off  (bound >= 0)
inline Int max_shift(const Rat& off, const Rat& bound) {
  const Int s = floor_sqrt(bound);
  Rat c = Rat(s) - off;
  Int u = floor_div(num(c), den(c));
  auto ok = [&](const Int& v) {
    Rat t = Rat(v) + off;
    return t <= 0 || t * t <= bound;
  };
  while (ok(u + 1)) ++u;
  while (!ok(u)) --u;
  return u;
}

struct Completion {
  // (x, Qx) = sum_i d[i] * (x_i + sum_{j>i} m[i][j] x_j)^2 with all d[i] > 0
  std::vector<Rat> d;
  Mat<Rat> m;
};

inline Completion complete_squares(const Mat<Int>& gram_neg) {
  const std::size_t n = gram_neg.rows();
  Mat<Rat> q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = Rat(-gram_neg(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) q(i, j) /= q(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l)
        q(k, l) -= q(i, i) * q(i, k) * q(i, l);
  }
  Completion c;
  c.d.resize(n);
  c.m = Mat<Rat>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c.d[i] = q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) c.m(i, j) = q(i, j);
  }
  return c;
}

}  // namespace detail

// All nonzero v with min_norm <= (v, v) < 0, grouped by norm, each group
// sorted lexicographically.  Requires a negative-definite lattice.
inline std::map<Int, std::vector<std::vector<Int>>> enumerate_vectors_within(
    const GramLattice& l, const Int& min_norm) {
  if (min_norm >= 0) throw std::invalid_argument("norm bound must be negative");
  std::map<Int, std::vector<std::vector<Int>>> out;
  const std::size_t n = l.rank();
  if (n == 0) return out;
  if (!l.is_negative_definite()) {
    auto [p, q] = l.signature();
    throw std::invalid_argument("short vector enumeration needs a negative-definite lattice; signature is (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  }
  detail::Completion c = detail::complete_squares(l.gram());
  const Rat cap = Rat(-min_norm);
  std::vector<Int> x(n, Int(0));
  std::vector<Rat> budget(n);   // remaining square budget at each level
  std::vector<Rat> offset(n);   // sum_{j>i} m(i,j) x_j
  // descend from the last coordinate
  const std::size_t top = n - 1;
  budget[top] = cap;
  offset[top] = 0;
  struct Frame {
    Int lo, hi, cur;
  };
  std::vector<Frame> st(n);
  auto open_level = [&](std::size_t i) -> bool {
    if (budget[i] < 0) return false;
    const Rat b = budget[i] / c.d[i];
    st[i].hi = detail::max_shift(offset[i], b);
    st[i].lo = -detail::max_shift(-offset[i], b);
    st[i].cur = st[i].lo;
    return st[i].lo <= st[i].hi;
  };
  std::size_t level = top;
  bool descending = open_level(top);
  while (true) {
    if (!descending || st[level].cur > st[level].hi) {
      // backtrack
      if (level == top) break;
      ++level;
      ++st[level].cur;
      descending = true;
      continue;
    }
    x[level] = st[level].cur;
    Rat t = Rat(x[level]) + offset[level];
    Rat used = c.d[level] * t * t;
    if (level == 0) {
      if (budget[0] - used < cap) {  // nonzero vector in range
        Int nrm = -(num(cap - (budget[0] - used)));  // cap - remaining = value of Q(x)
        out[nrm].push_back(x);
      }
      ++st[level].cur;
      continue;
    }
    // push level-1
    budget[level - 1] = budget[level] - used;
    Rat off = 0;
    for (std::size_t j = level; j < n; ++j)
      if (c.m(level - 1, j) != 0) off += c.m(level - 1, j) * Rat(x[j]);
    offset[level - 1] = off;
    --level;
    descending = open_level(level);
  }
  for (auto& [k, vecs] : out) std::sort(vecs.begin(), vecs.end());
  return out;
}

// All v with (v, v) exactly equal to `norm` (negative), sorted lexicographically.
inline std::vector<std::vector<Int>> enumerate_norm_vectors(const GramLattice& l,
                                                            const Int& norm) {
  if (norm >= 0) throw std::invalid_argument("target norm must be negative");
  auto grouped = enumerate_vectors_within(l, norm);
  auto it = grouped.find(norm);
  return it == grouped.end() ? std::vector<std::vector<Int>>{} : it->second;
}

inline std::vector<std::vector<Int>> enumerate_norm_vectors(const GramLattice& l,
                                                            const NormQuery& q) {
  return enumerate_norm_vectors(l, q.norm);
}

inline std::size_t count_roots(const GramLattice& l) {
  return enumerate_norm_vectors(l, Int(-2)).size();
}

}  // namespace latkit
