#include <gtest/gtest.h>

#include <algorithm>

#include "latkit/shortvec.hpp"
#include "oracle.hpp"

namespace latkit {
namespace {

// the rank <= 4 corpus every enumeration property is checked over
std::vector<GramLattice> corpus() {
  return {
      named_lattice("A1"),
      named_lattice("A2"),
      named_lattice("A3"),
      named_lattice("A4"),
      named_lattice("D2"),
      named_lattice("D3"),
      named_lattice("D4"),
      named_lattice("<-6>"),
      GramLattice(Mat<Int>{{-2, 1}, {1, -6}}),
      GramLattice(Mat<Int>{{-4, 1}, {1, -4}}),
      GramLattice(Mat<Int>{{-2, 0}, {0, -8}}),
  };
}

TEST(ShortVec, AgreesWithBruteForceOracle) {
  for (const GramLattice& l : corpus()) {
    auto fast = enumerate_vectors_within(l, Int(-8));
    auto slow = testing::brute_force_vectors(l, Int(-8));
    EXPECT_EQ(fast, slow) << l.name() << " rank " << l.rank();
  }
}

TEST(ShortVec, KnownRootCounts) {
  EXPECT_EQ(count_roots(named_lattice("A1")), 2u);
  EXPECT_EQ(count_roots(named_lattice("A2")), 6u);
  EXPECT_EQ(count_roots(named_lattice("A3")), 12u);
  EXPECT_EQ(count_roots(named_lattice("A4")), 20u);
  EXPECT_EQ(count_roots(named_lattice("D3")), 12u);
  EXPECT_EQ(count_roots(named_lattice("D4")), 24u);
  EXPECT_EQ(count_roots(named_lattice("D6")), 60u);
  EXPECT_EQ(count_roots(named_lattice("E6")), 72u);
  EXPECT_EQ(count_roots(named_lattice("E7")), 126u);
  EXPECT_EQ(count_roots(named_lattice("E8")), 240u);
}

TEST(ShortVec, GroupedEnumerationMatchesSinglePasses) {
  for (const GramLattice& l : corpus()) {
    auto grouped = enumerate_vectors_within(l, Int(-8));
    Int total = 0;
    for (Int norm = -2; norm >= -8; norm -= 2) {
      auto single = enumerate_norm_vectors(l, norm);
      auto it = grouped.find(norm);
      const auto& expect = it == grouped.end() ? std::vector<std::vector<Int>>{} : it->second;
      EXPECT_EQ(single, expect) << l.name() << " norm " << norm;
      total += Int(single.size());
    }
    // odd norms cannot appear in an even lattice
    if (l.is_even())
      for (const auto& [norm, vecs] : grouped) EXPECT_EQ(norm % 2, 0) << l.name();
  }
}

TEST(ShortVec, OutputContract) {
  for (const GramLattice& l : corpus()) {
    auto grouped = enumerate_vectors_within(l, Int(-8));
    for (const auto& [norm, vecs] : grouped) {
      EXPECT_TRUE(std::is_sorted(vecs.begin(), vecs.end()));
      EXPECT_EQ(std::adjacent_find(vecs.begin(), vecs.end()), vecs.end());  // no duplicates
      for (const auto& v : vecs) {
        EXPECT_EQ(l.norm(v), norm);
        std::vector<Int> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        EXPECT_TRUE(std::binary_search(vecs.begin(), vecs.end(), neg));  // sign closure
        EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; }));
      }
    }
  }
}

TEST(ShortVec, NormQueryOverload) {
  GramLattice a2 = named_lattice("A2");
  EXPECT_EQ(enumerate_norm_vectors(a2, NormQuery{Int(-2)}), enumerate_norm_vectors(a2, Int(-2)));
}

TEST(ShortVec, SparseNormsOfHexagonalPlane) {
  GramLattice a2 = named_lattice("A2");
  EXPECT_EQ(enumerate_norm_vectors(a2, Int(-4)).size(), 0u);  // 2 is not of the form x^2-xy+y^2
  EXPECT_EQ(enumerate_norm_vectors(a2, Int(-6)).size(), 6u);
  EXPECT_EQ(enumerate_norm_vectors(a2, Int(-8)).size(), 6u);
}

TEST(ShortVec, Rejections) {
  GramLattice a2 = named_lattice("A2");
  EXPECT_THROW(enumerate_norm_vectors(a2, Int(0)), std::invalid_argument);
  EXPECT_THROW(enumerate_norm_vectors(a2, Int(2)), std::invalid_argument);
  try {
    enumerate_norm_vectors(named_lattice("U"), Int(-2));
    FAIL() << "indefinite lattice accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos);
  }
  EXPECT_TRUE(enumerate_vectors_within(GramLattice{}, Int(-2)).empty());
  EXPECT_EQ(enumerate_norm_vectors(named_lattice("<-2>"), Int(-2)).size(), 2u);
}

}  // namespace
}  // namespace latkit
