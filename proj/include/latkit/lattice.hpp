#pragma once

// Integral lattices presented by Gram matrices, and the handful of exact
// operations the rest of the toolkit needs: named root lattices, direct sums,
// rescaling, signature, discriminant groups, saturation, and orthogonal
// complements.  Vectors are rows in the basis implied by the Gram matrix.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"

namespace latkit {

struct DiscriminantGroup {
  std::vector<Int> elementary_divisors;  // > 1, each divides the next
  Int order;                             // product, equals |det|
};

class GramLattice {
 public:
  GramLattice() = default;  // the empty (rank-0) lattice

  // gram must be square, symmetric, and nondegenerate; rank 0 is the empty lattice.
  explicit GramLattice(Mat<Int> gram, std::string name = "")
      : gram_(std::move(gram)), name_(std::move(name)) {
    if (gram_.rows() != gram_.cols())
      throw std::invalid_argument("Gram matrix is not square: " +
                                  std::to_string(gram_.rows()) + "x" +
                                  std::to_string(gram_.cols()));
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (gram_(i, j) != gram_(j, i))
          throw std::invalid_argument("Gram matrix is not symmetric at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
    if (det_bareiss(gram_) == 0)
      throw std::invalid_argument("Gram matrix is degenerate (determinant 0)");
  }

  std::size_t rank() const { return gram_.rows(); }
  const Mat<Int>& gram() const { return gram_; }
  const std::string& name() const { return name_; }

  Int det() const { return det_bareiss(gram_); }

  // (positive, negative) inertia; entries sum to rank by nondegeneracy.
  std::pair<int, int> signature() const { return symmetric_signature(gram_); }

  bool is_negative_definite() const {
    auto [p, n] = signature();
    return p == 0 && static_cast<std::size_t>(n) == rank();
  }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }

  DiscriminantGroup discriminant_group() const {
    DiscriminantGroup g;
    g.order = 1;
    for (const Int& d : smith_divisors(gram_)) {
      g.order *= abs_val(d);
      if (abs_val(d) > 1) g.elementary_divisors.push_back(abs_val(d));
    }
    return g;
  }

  Int pairing(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (v.size() != rank() || w.size() != rank())
      throw std::invalid_argument("vector length does not match lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
    return s;
  }

  Int norm(const std::vector<Int>& v) const { return pairing(v, v); }

 private:
  Mat<Int> gram_;
  std::string name_;
};

namespace detail {

inline Mat<Int> neg_cartan_chain(std::size_t n) {
  Mat<Int> g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return g;
}

}  // namespace detail

// U, A<k>, D<l> (l >= 2), E<6|7|8>, and the rank-one lattice <m> written "<m>".
// Root lattices carry the standard negative-definite convention.
inline GramLattice named_lattice(const std::string& name) {
  auto fail = [&] { throw std::invalid_argument("unknown lattice name: " + name); };
  if (name == "U") return GramLattice(Mat<Int>{{0, 1}, {1, 0}}, "U");
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    Int m;
    try {
      m = Int(name.substr(1, name.size() - 2));
    } catch (const std::exception&) {
      fail();
    }
    if (m == 0) throw std::invalid_argument("rank-one lattice <0> is degenerate");
    Mat<Int> g(1, 1);
    g(0, 0) = m;
    return GramLattice(g, name);
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
    std::size_t pos = 1;
    if (name[pos] == '_') ++pos;
    const std::string digits = name.substr(pos);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) fail();
    const long n = std::stol(digits);
    const std::string canon = std::string(1, name[0]) + digits;
    if (name[0] == 'A' && n >= 1) return GramLattice(detail::neg_cartan_chain(n), canon);
    if (name[0] == 'D' && n >= 2) {
      // chain on nodes 1..n-1, fork node n attached to node n-2; D2 = A1+A1
      Mat<Int> g = detail::neg_cartan_chain(n);
      g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
      if (n >= 3) g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
      return GramLattice(g, canon);
    }
    if (name[0] == 'E' && n >= 6 && n <= 8) {
      // Bourbaki numbering: chain 1-3-4-...-n with node 2 attached to node 4.
      Mat<Int> g(n, n);
      for (long i = 0; i < n; ++i) g(i, i) = -2;
      auto link = [&](long i, long j) { g(i - 1, j - 1) = g(j - 1, i - 1) = 1; };
      link(1, 3);
      link(2, 4);
      for (long i = 3; i < n; ++i) link(i, i + 1);
      return GramLattice(g, canon);
    }
    fail();
  }
  fail();
  return GramLattice(Mat<Int>{});  // unreachable
}

inline GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  Mat<Int> g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return GramLattice(std::move(g), std::move(name));
}

inline GramLattice direct_sum(std::initializer_list<GramLattice> parts) {
  if (parts.size() == 0) return GramLattice(Mat<Int>{});
  auto it = parts.begin();
  GramLattice acc = *it;
  for (++it; it != parts.end(); ++it) acc = direct_sum(acc, *it);
  return acc;
}

inline GramLattice rescale(const GramLattice& l, const Int& m) {
  if (m == 0) throw std::invalid_argument("rescale by 0 degenerates the lattice");
  Mat<Int> g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= m;
  return GramLattice(std::move(g));
}

// Gram matrix of the span of the given row vectors (need not be independent).
inline Mat<Int> sublattice_gram(const GramLattice& l, const Mat<Int>& rows) {
  if (rows.cols() != l.rank())
    throw std::invalid_argument("sublattice vectors do not match lattice rank");
  return restrict_gram(rows, l.gram());
}

struct SaturationResult {
  Mat<Int> basis;  // rows span the saturation (span_Q intersect the lattice)
  Int index;       // [saturation : span of the input rows]
};

// Rows must be linearly independent.
inline SaturationResult saturate(const GramLattice& l, const Mat<Int>& rows) {
  if (rows.cols() != l.rank())
    throw std::invalid_argument("saturate: vectors do not match lattice rank");
  SnfResult<Int> snf = smith_normal_form(rows);
  if (snf.rank != rows.rows())
    throw std::invalid_argument("saturate: input vectors are linearly dependent");
  SaturationResult res;
  res.index = 1;
  for (std::size_t i = 0; i < snf.rank; ++i) res.index *= snf.divisors[i];
  Mat<Int> sat(snf.rank, l.rank());
  for (std::size_t i = 0; i < snf.rank; ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) sat(i, j) = snf.vinv(i, j);
  // canonical basis so equal saturations compare equal
  HnfResult<Int> canon = hermite_normal_form(sat);
  for (std::size_t i = 0; i < snf.rank; ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) sat(i, j) = canon.h(i, j);
  res.basis = std::move(sat);
  return res;
}

// Basis of {v : (v, s) = 0 for all rows s}; always saturated, canonical.
inline Mat<Int> orthogonal_complement(const GramLattice& l, const Mat<Int>& rows) {
  if (rows.cols() != l.rank())
    throw std::invalid_argument("orthogonal_complement: vectors do not match lattice rank");
  // v * (G * rows^T) = 0
  return kernel_basis(mul(l.gram(), rows.transposed()));
}

}  // namespace latkit
