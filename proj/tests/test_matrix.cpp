#include <gtest/gtest.h>

#include <random>

#include "latkit/checked_int.hpp"
#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"

namespace latkit {
namespace {

TEST(Numeric, FloorCeilDivMatchRationalFloor) {
  for (int a = -20; a <= 20; ++a) {
    for (int b : {-7, -3, -2, -1, 1, 2, 3, 7}) {
      Int q = floor_div(Int(a), Int(b));
      // q = floor(a/b) exactly; stated on rationals so it holds for either sign of b
      const Rat exact = Rat(a) / Rat(b);
      EXPECT_LE(Rat(q), exact) << a << "/" << b;
      EXPECT_LT(exact, Rat(q + 1)) << a << "/" << b;
      EXPECT_EQ(ceil_div(Int(a), Int(b)), -floor_div(Int(-a), Int(b)));
    }
  }
}

TEST(Numeric, IntegerSquareRoots) {
  EXPECT_EQ(isqrt(Int(0)), 0);
  EXPECT_EQ(isqrt(Int(1)), 1);
  EXPECT_EQ(isqrt(Int(3)), 1);
  EXPECT_EQ(isqrt(Int(4)), 2);
  EXPECT_EQ(isqrt(Int(8)), 2);
  EXPECT_EQ(isqrt(Int(9)), 3);
  EXPECT_THROW(isqrt(Int(-1)), std::domain_error);
  EXPECT_EQ(floor_sqrt(Rat(9)), 3);
  EXPECT_EQ(floor_sqrt(Rat(17, 4)), 2);
  EXPECT_EQ(floor_sqrt(Rat(49, 4)), 3);  // sqrt = 3.5 exactly
  EXPECT_EQ(floor_sqrt(Rat(8, 9)), 0);
  EXPECT_THROW(floor_sqrt(Rat(-1, 2)), std::domain_error);
}

TEST(Numeric, CheckedNarrowing) {
  EXPECT_EQ(to_int64(Int(-5)), -5);
  Int big = Int(1) << 70;
  EXPECT_THROW(to_int64(big), std::overflow_error);
}

TEST(Matrix, ConstructionAndEquality) {
  Mat<Int> a{{1, 2}, {3, 4}};
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a(1, 0), 3);
  EXPECT_EQ(a, (Mat<Int>{{1, 2}, {3, 4}}));
  EXPECT_NE(a, (Mat<Int>{{1, 2}, {3, 5}}));
  EXPECT_THROW((Mat<Int>{{1, 2}, {3}}), std::invalid_argument);
}

TEST(Matrix, Determinants) {
  EXPECT_EQ(det_bareiss(Mat<Int>::identity(3)), 1);
  EXPECT_EQ(det_bareiss(Mat<Int>{}), 1);
  EXPECT_EQ(det_bareiss(Mat<Int>{{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(det_bareiss(Mat<Int>{{0, 1}, {1, 0}}), -1);  // swap path
  EXPECT_EQ(det_bareiss(Mat<Int>{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(det_bareiss(Mat<Int>{{-2, 1}, {1, -2}}), 3);
  EXPECT_EQ(det_bareiss(Mat<Int>{{2, 3, 1}, {0, 0, 2}, {1, 1, 1}}), 2);
  EXPECT_THROW(det_bareiss(Mat<Int>(2, 3)), std::invalid_argument);
}

TEST(Matrix, HermiteKnownForm) {
  HnfResult<Int> r = hermite_normal_form(Mat<Int>{{2, 0}, {1, 1}});
  EXPECT_EQ(r.h, (Mat<Int>{{1, 1}, {0, 2}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(mul(r.u, Mat<Int>{{2, 0}, {1, 1}}), r.h);
}

Mat<Int> random_matrix(std::mt19937& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<int> dist(-9, 9);
  Mat<Int> a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

TEST(Matrix, HermiteInvariantsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    Mat<Int> a = random_matrix(rng, m, n);
    if (trial % 5 == 0 && m >= 2) a.set_row(m - 1, a.row(0));  // force rank deficiency
    HnfResult<Int> r = hermite_normal_form(a);
    EXPECT_EQ(mul(r.u, a), r.h);
    EXPECT_EQ(abs_val(det_bareiss(r.u)), 1);
    // echelon shape with positive pivots, entries above reduced into [0, pivot)
    std::size_t prev_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < r.rank; ++i) {
      std::size_t c = 0;
      while (c < n && r.h(i, c) == 0) ++c;
      ASSERT_LT(c, n);
      EXPECT_TRUE(first || c > prev_col);
      first = false;
      prev_col = c;
      EXPECT_GT(r.h(i, c), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(r.h(k, c), 0);
        EXPECT_LT(r.h(k, c), r.h(i, c));
      }
    }
    for (std::size_t i = r.rank; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(r.h(i, j), 0);
  }
}

TEST(Matrix, KernelBasis) {
  // x * a = 0 for a = [[2], [-1]]: solutions are multiples of (1, 2)
  EXPECT_EQ(kernel_basis(Mat<Int>{{2}, {-1}}), (Mat<Int>{{1, 2}}));
  // full-rank square matrix has trivial kernel
  EXPECT_EQ(kernel_basis(Mat<Int>{{1, 0}, {0, 1}}).rows(), 0u);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 2 + trial % 3, n = 1 + (trial / 3) % 3;
    Mat<Int> a = random_matrix(rng, m, n);
    Mat<Int> k = kernel_basis(a);
    EXPECT_EQ(k.rows(), m - hermite_normal_form(a).rank);
    Mat<Int> prod = mul(k, a);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);
    // canonical: re-running HNF changes nothing
    if (k.rows() > 0) EXPECT_EQ(hermite_normal_form(k).h, k);
  }
}

TEST(Matrix, SmithKnownDivisors) {
  auto divisors = [](Mat<Int> a) { return smith_divisors(a); };
  EXPECT_EQ(divisors(Mat<Int>{{-2, 1}, {1, -2}}), (std::vector<Int>{1, 3}));
  EXPECT_EQ(divisors(Mat<Int>{{-2, 1}, {1, -6}}), (std::vector<Int>{1, 11}));
  EXPECT_EQ(divisors(Mat<Int>{{2, 0}, {0, 3}}), (std::vector<Int>{1, 6}));
  EXPECT_EQ(divisors(Mat<Int>{{2, 0}, {0, 4}}), (std::vector<Int>{2, 4}));
  EXPECT_EQ(divisors(Mat<Int>{{1, 2}, {2, 4}}), (std::vector<Int>{1, 0}));
}

TEST(Matrix, SmithInvariantsOnRandomInputs) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    Mat<Int> a = random_matrix(rng, m, n);
    SnfResult<Int> s = smith_normal_form(a);
    EXPECT_EQ(abs_val(det_bareiss(s.u)), 1);
    EXPECT_EQ(abs_val(det_bareiss(s.vinv)), 1);
    // u * a * v = D means u * a = D * vinv
    Mat<Int> diag(m, n);
    for (std::size_t t = 0; t < s.divisors.size(); ++t) diag(t, t) = s.divisors[t];
    EXPECT_EQ(mul(s.u, a), mul(diag, s.vinv));
    for (std::size_t t = 0; t < s.divisors.size(); ++t) {
      EXPECT_GE(s.divisors[t], 0);
      if (t + 1 < s.divisors.size() && s.divisors[t] != 0)
        EXPECT_EQ(s.divisors[t + 1] % s.divisors[t], 0);
      if (s.divisors[t] == 0 && t + 1 < s.divisors.size())
        EXPECT_EQ(s.divisors[t + 1], 0);  // zeros trail
    }
  }
}

TEST(Matrix, SymmetricSignature) {
  EXPECT_EQ(symmetric_signature(Mat<Int>{{0, 1}, {1, 0}}), (std::pair<int, int>{1, 1}));
  EXPECT_EQ(symmetric_signature(Mat<Int>{{-2, 1}, {1, -2}}), (std::pair<int, int>{0, 2}));
  EXPECT_EQ(symmetric_signature(Mat<Int>{{2, 0, 0}, {0, -3, 0}, {0, 0, 5}}),
            (std::pair<int, int>{2, 1}));
  EXPECT_EQ(symmetric_signature(Mat<Int>{{1, 1}, {1, 1}}), (std::pair<int, int>{1, 0}));
  EXPECT_THROW(symmetric_signature(Mat<Int>(2, 3)), std::invalid_argument);
}

TEST(Matrix, SolveLeft) {
  Mat<Int> b{{2, 1}, {0, 1}};
  auto x = solve_left(b, {Int(1), Int(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rat(1, 2));
  EXPECT_EQ((*x)[1], Rat(1, 2));
  EXPECT_FALSE(solve_left(Mat<Int>{{1, 1}, {1, 1}}, {Int(1), Int(2)}));
  EXPECT_THROW(solve_left(Mat<Int>(2, 3), {Int(1), Int(1)}), std::invalid_argument);
}

TEST(Matrix, RestrictGram) {
  Mat<Int> g{{-2, 1}, {1, -2}};
  Mat<Int> rows{{1, 1}};
  EXPECT_EQ(restrict_gram(rows, g), (Mat<Int>{{-2}}));
}

TEST(CheckedInt, OverflowRaises) {
  CheckedI64 max(INT64_MAX), min(INT64_MIN);
  EXPECT_THROW(max + CheckedI64(1), OverflowSignal);
  EXPECT_THROW(min - CheckedI64(1), OverflowSignal);
  EXPECT_THROW(max * CheckedI64(2), OverflowSignal);
  EXPECT_THROW(-min, OverflowSignal);
  EXPECT_THROW(min / CheckedI64(-1), OverflowSignal);
  EXPECT_THROW(min % CheckedI64(-1), OverflowSignal);
  EXPECT_THROW(max / CheckedI64(0), std::domain_error);
  EXPECT_EQ((CheckedI64(6) * CheckedI64(-7)).raw(), -42);
}

TEST(CheckedInt, FloorDivMatchesExact) {
  for (int a = -20; a <= 20; ++a)
    for (int b : {-7, -3, -1, 1, 3, 7})
      EXPECT_EQ(floor_div(CheckedI64(a), CheckedI64(b)).raw(),
                to_int64(floor_div(Int(a), Int(b))));
}

TEST(CheckedInt, MatrixTemplatesAgreeWithExact) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = 1 + trial % 3, n = 1 + (trial / 3) % 3;
    Mat<Int> a = random_matrix(rng, m, n);
    Mat<CheckedI64> ac(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) ac(i, j) = CheckedI64(to_int64(a(i, j)));
    HnfResult<Int> h = hermite_normal_form(a);
    HnfResult<CheckedI64> hc = hermite_normal_form(ac);
    EXPECT_EQ(h.rank, hc.rank);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(h.h(i, j), Int(hc.h(i, j).raw()));
    std::vector<Int> sd = smith_divisors(a);
    std::vector<CheckedI64> sdc = smith_divisors(ac);
    ASSERT_EQ(sd.size(), sdc.size());
    for (std::size_t i = 0; i < sd.size(); ++i) EXPECT_EQ(sd[i], Int(sdc[i].raw()));
  }
}

}  // namespace
}  // namespace latkit
