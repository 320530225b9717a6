#pragma once

// Dense exact matrices over an integer or rational scalar, plus the exact
// normal forms everything else is built on: Bareiss determinants, canonical
// row-style Hermite form, Smith form with transforms, and symmetric
// congruence diagonalization.  All pivoting orders are fixed so results are
// reproducible byte-for-byte.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "latkit/numeric.hpp"

namespace latkit {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  // row_dst += q * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
bool lex_less(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

// Fraction-free elimination; every intermediate entry is a minor of the
// input, so the int64 instantiation stays exact whenever those minors fit.
template <typename T>
T det_bareiss(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return T(0);
      m.swap_rows(k, piv);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sgn < 0 ? T(-d) : d;
}

template <typename T>
struct HnfResult {
  Mat<T> h;        // canonical row Hermite form: positive pivots, entries above reduced into [0, pivot)
  Mat<T> u;        // unimodular, u * input = h
  std::size_t rank = 0;
};

template <typename T>
HnfResult<T> hermite_normal_form(const Mat<T>& input) {
  const std::size_t m = input.rows(), n = input.cols();
  HnfResult<T> res;
  res.h = input;
  res.u = Mat<T>::identity(m);
  Mat<T>&h = res.h, &u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs_val(h(i, c)) < abs_val(h(best, c))) best = i;
      }
      if (best == m) break;  // column exhausted below r
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      if (h(r, c) < 0) {
        h.negate_row(r);
        u.negate_row(r);
      }
      bool leftover = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        T q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) leftover = true;
      }
      if (!leftover) {
        for (std::size_t i = 0; i < r; ++i) {
          T q = floor_div(h(i, c), h(r, c));
          h.add_row_multiple(i, r, -q);
          u.add_row_multiple(i, r, -q);
        }
        ++r;
        break;
      }
    }
  }
  res.rank = r;
  return res;
}

// Canonical basis of {x : x * a = 0} as rows; the kernel of an integer map
// is saturated, and applying HNF to the transform rows makes it unique.
template <typename T>
Mat<T> kernel_basis(const Mat<T>& a) {
  HnfResult<T> hnf = hermite_normal_form(a);
  const std::size_t m = a.rows(), k = m - hnf.rank;
  Mat<T> ker(k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) ker(i, j) = hnf.u(hnf.rank + i, j);
  HnfResult<T> canon = hermite_normal_form(ker);
  Mat<T> out(k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = canon.h(i, j);
  return out;
}

template <typename T>
struct SnfResult {
  std::vector<T> divisors;  // nonnegative, d[i] | d[i+1], zeros trail for rank-deficient input
  Mat<T> u;                 // unimodular m x m
  Mat<T> vinv;              // unimodular n x n; u * input * vinv^{-1}... see note below
  std::size_t rank = 0;
};

// Smith form u * a * v = diag(divisors).  v itself is not returned; vinv holds
// v^{-1}, whose first `rank` rows form a basis of the saturation of the row
// span of `a` (that is what every caller here actually needs).
template <typename T>
SnfResult<T> smith_normal_form(const Mat<T>& input) {
  const std::size_t m = input.rows(), n = input.cols();
  Mat<T> a = input;
  SnfResult<T> res;
  res.u = Mat<T>::identity(m);
  res.vinv = Mat<T>::identity(n);
  Mat<T>&u = res.u, &vinv = res.vinv;
  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix, first position on ties
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          if (bi == m || abs_val(a(i, j)) < abs_val(a(bi, bj))) { bi = i; bj = j; }
        }
      if (bi == m) break;
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      vinv.swap_rows(t, bj);  // inverse of a column swap is the same swap
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        T q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        T q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        vinv.add_row_multiple(t, j, q);  // inverse of col_j -= q*col_t is row_t += q*row_j on vinv
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the submatrix for the divisor chain
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < m && chain_ok; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, T(1));
            u.add_row_multiple(t, i, T(1));
            chain_ok = false;
            break;
          }
        }
      if (chain_ok) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  res.divisors.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    res.divisors[t] = a(t, t);
    if (a(t, t) != 0) ++res.rank;
  }
  return res;
}

template <typename T>
std::vector<T> smith_divisors(const Mat<T>& a) {
  return smith_normal_form(a).divisors;
}

// Inertia of a symmetric matrix (positive count, negative count) by exact
// rational congruence; zero eigenvalue directions fall out of both counts.
inline std::pair<int, int> symmetric_signature(const Mat<Int>& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("signature of non-square matrix");
  const std::size_t n = g.rows();
  Mat<Rat> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(g(i, j));
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.swap_rows(k, j);
        a.swap_cols(k, j);
      } else {
        for (j = k + 1; j < n && a(k, j) == 0; ++j) {}
        if (j == n) continue;  // radical direction
        a.add_row_multiple(k, j, Rat(1));
        a.add_col_multiple(k, j, Rat(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, -f);
      a.add_col_multiple(i, k, -f);
    }
    if (a(k, k) > 0) ++pos;
    else if (a(k, k) < 0) ++neg;
  }
  return {pos, neg};
}

// Unique rational solution x of x * b = w for square nonsingular b.
inline std::optional<std::vector<Rat>> solve_left(const Mat<Int>& b, const std::vector<Int>& w) {
  const std::size_t n = b.rows();
  if (b.cols() != n || w.size() != n) throw std::invalid_argument("solve_left shape mismatch");
  // Augmented elimination on b^T | w^T.
  Mat<Rat> a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(b(j, i));
    a(i, n) = Rat(w[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(k, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, -f);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a(i, n) / a(i, i);
  return x;
}

// Gram matrix of the sublattice spanned by the rows of `basis` inside a
// lattice with Gram matrix `g`:  basis * g * basis^T.
template <typename T>
Mat<T> restrict_gram(const Mat<T>& basis, const Mat<T>& g) {
  return mul(mul(basis, g), basis.transposed());
}

}  // namespace latkit
