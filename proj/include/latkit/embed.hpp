#pragma once

// Rank-2 embeddings of an even negative-definite binary form into E8, with
// the orthogonal-complement root count and the resulting modular-form weight
// 12 + r/2 (a cusp form precisely when r > 0).
//
// Two search modes.  `first_root_fixed` pins the first image vector to a
// fixed root; this loses nothing because the reflection group of E8 acts
// transitively on roots, and the assumption is cross-checked against
// `exhaustive` mode in the test suite.  Root counts are obtained by
// filtering the stored 240 roots, independently of the short-vector
// enumerator, so the two routes can be compared.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latkit/checked_int.hpp"
#include "latkit/e8.hpp"
#include "latkit/lattice.hpp"
#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"
#include "latkit/shortvec.hpp"

namespace latkit {

struct RankTwoForm {
  Int a, b, c;  // Gram matrix [[a, b], [b, c]]

  Mat<Int> gram() const { return Mat<Int>{{a, b}, {b, c}}; }

  void validate() const {
    if (a >= 0 || a % 2 != 0) throw std::invalid_argument("form entry a must be even and negative");
    if (c >= 0 || c % 2 != 0) throw std::invalid_argument("form entry c must be even and negative");
    if (a * c - b * b <= 0)
      throw std::invalid_argument("form must be definite: a*c - b^2 > 0 required");
  }
};

enum class EmbedMode { first_root_fixed, exhaustive };

struct EmbeddingResult {
  e8::E8Vector v1, v2;
  Int image_index;           // [saturation : Z v1 + Z v2]; 1 means the image is primitive
  Mat<Int> complement_basis; // rows: canonical basis of the orthogonal complement, simple-root coords
  Mat<Int> complement_gram;  // 6x6 Gram of that basis
  std::size_t root_count;    // roots of E8 orthogonal to both image vectors
  Int weight;                // 12 + root_count / 2
  bool is_cusp;              // root_count > 0
};

struct QuasiPullbackWeight {
  Int weight;
  bool is_cusp;
};

inline QuasiPullbackWeight quasi_pullback_weight(const Int& root_count) {
  if (root_count < 0) throw std::invalid_argument("root count cannot be negative");
  if (root_count % 2 != 0)
    throw std::invalid_argument("root count must be even (roots come in +/- pairs)");
  return {Int(12) + root_count / 2, root_count > 0};
}

inline std::vector<e8::E8Vector> orthogonal_roots(const e8::E8Vector& v1,
                                                  const e8::E8Vector& v2) {
  e8::validate(v1);
  e8::validate(v2);
  std::vector<e8::E8Vector> out;
  for (const e8::E8Vector& r : e8::all_roots()) {
    std::int64_t d1 = 0, d2 = 0;
    for (int i = 0; i < 8; ++i) {
      d1 += r.doubled[i] * v1.doubled[i];
      d2 += r.doubled[i] * v2.doubled[i];
    }
    if (d1 == 0 && d2 == 0) out.push_back(r);
  }
  return out;
}

namespace detail {

template <typename T>
Mat<T> convert_mat(const Mat<Int>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = T(to_int64(m(i, j)));
  return out;
}

inline Int to_big(const Int& v) { return v; }
inline Int to_big(const CheckedI64& v) { return Int(v.raw()); }

template <typename T>
Mat<Int> to_big_mat(const Mat<T>& m) {
  Mat<Int> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_big(m(i, j));
  return out;
}

struct PairOutcome {
  Mat<Int> complement_basis;
  Mat<Int> complement_gram;
  Int image_index;
  std::vector<std::int64_t> dedup_key;  // flattened HNF of the complement Gram
};

// Complement, its Gram, the saturation index, and the dedup key for one image
// pair given in simple-root coordinates.
template <typename T>
PairOutcome process_pair(const std::vector<Int>& c1, const std::vector<Int>& c2) {
  static const Mat<T> g = convert_mat<T>(e8::lattice().gram());
  Mat<T> span(2, 8);
  for (int j = 0; j < 8; ++j) {
    span(0, j) = T(to_int64(c1[j]));
    span(1, j) = T(to_int64(c2[j]));
  }
  Mat<T> pairing = mul(g, span.transposed());  // 8x2; complement = left kernel
  Mat<T> kern = kernel_basis(pairing);
  Mat<T> cgram = restrict_gram(kern, g);
  Mat<T> key_mat = hermite_normal_form(cgram).h;
  PairOutcome out;
  out.complement_basis = to_big_mat(kern);
  out.complement_gram = to_big_mat(cgram);
  out.image_index = 1;
  for (const T& d : smith_divisors(span)) out.image_index *= to_big(d);
  out.dedup_key.reserve(36);
  for (std::size_t i = 0; i < key_mat.rows(); ++i)
    for (std::size_t j = 0; j < key_mat.cols(); ++j)
      out.dedup_key.push_back(to_int64(to_big(key_mat(i, j))));
  return out;
}

inline PairOutcome process_pair_checked(const std::vector<Int>& c1, const std::vector<Int>& c2) {
  try {
    return process_pair<CheckedI64>(c1, c2);
  } catch (const OverflowSignal&) {
    return process_pair<Int>(c1, c2);
  }
}

inline std::size_t count_orthogonal_roots64(const std::array<std::int64_t, 8>& v1,
                                            const std::array<std::int64_t, 8>& v2) {
  std::size_t n = 0;
  for (const e8::E8Vector& r : e8::all_roots()) {
    std::int64_t d1 = 0, d2 = 0;
    for (int i = 0; i < 8; ++i) {
      d1 += r.doubled[i] * v1[i];
      d2 += r.doubled[i] * v2[i];
    }
    if (d1 == 0 && d2 == 0) ++n;
  }
  return n;
}

inline EmbeddingResult assemble_result(const e8::E8Vector& v1, const e8::E8Vector& v2,
                                       PairOutcome&& o, std::size_t rc) {
  EmbeddingResult res;
  res.v1 = v1;
  res.v2 = v2;
  res.image_index = std::move(o.image_index);
  res.complement_basis = std::move(o.complement_basis);
  res.complement_gram = std::move(o.complement_gram);
  res.root_count = rc;
  QuasiPullbackWeight w = quasi_pullback_weight(Int(rc));
  res.weight = w.weight;
  res.is_cusp = w.is_cusp;
  return res;
}

}  // namespace detail

// Resource guard: shells of norm -2m in E8 have 240*sigma_3(m) vectors, so
// unbounded entries would turn the search into minutes of shell enumeration.
inline constexpr std::int64_t kMaxEmbedNormMagnitude = 24;

inline std::vector<EmbeddingResult> find_embeddings(const RankTwoForm& k,
                                                    EmbedMode mode = EmbedMode::first_root_fixed) {
  k.validate();
  if (-k.a > kMaxEmbedNormMagnitude || -k.c > kMaxEmbedNormMagnitude)
    throw std::invalid_argument("embedding search limited to |a|, |c| <= " +
                                std::to_string(kMaxEmbedNormMagnitude));
  const std::int64_t want_dot = to_int64(-4 * k.b);  // doubled dot for pairing b

  struct Cand {
    e8::E8Vector vec;
    std::vector<Int> coords;
  };
  auto shell = [](const Int& norm) {
    std::vector<Cand> out;
    for (auto& coords : enumerate_norm_vectors(e8::lattice(), norm))
      out.push_back({e8::from_basis_coords(coords), coords});
    return out;
  };

  const std::vector<Cand> shell_c = shell(k.c);
  std::vector<Cand> shell_a;
  if (mode == EmbedMode::exhaustive) {
    shell_a = shell(k.a);
  } else {
    if (k.a != -2)
      throw std::invalid_argument("first_root_fixed pins v1 to a root and needs a = -2");
    Cand pinned{e8::delta_root(0, 1, +1, -1), {}};
    pinned.coords = e8::to_basis_coords(pinned.vec);
    shell_a.push_back(std::move(pinned));
  }

  std::vector<EmbeddingResult> results;
  std::set<std::pair<std::vector<std::int64_t>, std::size_t>> seen;
  for (const Cand& v1 : shell_a) {
    for (const Cand& v2 : shell_c) {
      std::int64_t dot = 0;
      for (int i = 0; i < 8; ++i) dot += v1.vec.doubled[i] * v2.vec.doubled[i];
      if (dot != want_dot) continue;
      const std::size_t rc = detail::count_orthogonal_roots64(v1.vec.doubled, v2.vec.doubled);
      detail::PairOutcome o = detail::process_pair_checked(v1.coords, v2.coords);
      auto key = std::make_pair(std::move(o.dedup_key), rc);
      if (!seen.insert(key).second) continue;
      results.push_back(detail::assemble_result(v1.vec, v2.vec, std::move(o), rc));
    }
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const EmbeddingResult& x, const EmbeddingResult& y) {
                     return x.root_count < y.root_count;
                   });
  return results;
}

// Catalog of specific embeddings whose complement data the rest of the
// toolkit consumes (family weights are derived from these, not stored blind).
enum class CatalogEmbedding { DV, IR, IR_alt1, IR_alt2, cub, EPW };

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"DV", "IR", "IR_alt1", "IR_alt2", "cub", "EPW"};
  return names;
}

inline CatalogEmbedding catalog_from_string(const std::string& s) {
  if (s == "DV") return CatalogEmbedding::DV;
  if (s == "IR") return CatalogEmbedding::IR;
  if (s == "IR_alt1") return CatalogEmbedding::IR_alt1;
  if (s == "IR_alt2") return CatalogEmbedding::IR_alt2;
  if (s == "cub") return CatalogEmbedding::cub;
  if (s == "EPW") return CatalogEmbedding::EPW;
  throw std::invalid_argument("unknown embedding name: " + s +
                              " (expected DV, IR, IR_alt1, IR_alt2, cub, or EPW)");
}

inline std::string catalog_to_string(CatalogEmbedding e) {
  return catalog_names()[static_cast<int>(e)];
}

// The fixed image pair for each catalog entry, in doubled model coordinates.
inline std::pair<e8::E8Vector, e8::E8Vector> catalog_vectors(CatalogEmbedding e) {
  const e8::E8Vector v1{{2, -2, 0, 0, 0, 0, 0, 0}};
  switch (e) {
    case CatalogEmbedding::DV:      return {v1, e8::E8Vector{{0, 2, 2, 4, 0, 0, 0, 0}}};
    case CatalogEmbedding::IR:      return {v1, e8::E8Vector{{0, 2, 6, 0, 0, 0, 0, 0}}};
    case CatalogEmbedding::IR_alt1: return {v1, e8::E8Vector{{0, 2, 2, 4, 4, 0, 0, 0}}};
    case CatalogEmbedding::IR_alt2: return {v1, e8::E8Vector{{0, 2, 2, 2, 2, 2, 2, 4}}};
    case CatalogEmbedding::cub:     return {v1, e8::E8Vector{{0, 2, -2, 0, 0, 0, 0, 0}}};
    case CatalogEmbedding::EPW:     return {v1, e8::E8Vector{{0, 0, 2, -2, 0, 0, 0, 0}}};
  }
  throw std::logic_error("unhandled catalog embedding");
}

inline RankTwoForm catalog_form(CatalogEmbedding e) {
  auto [v1, v2] = catalog_vectors(e);
  return RankTwoForm{e8::e8_norm(v1), e8::e8_pairing(v1, v2), e8::e8_norm(v2)};
}

inline EmbeddingResult catalog_embedding(CatalogEmbedding e) {
  auto [v1, v2] = catalog_vectors(e);
  const std::vector<Int> c1 = e8::to_basis_coords(v1);
  const std::vector<Int> c2 = e8::to_basis_coords(v2);
  const std::size_t rc = detail::count_orthogonal_roots64(v1.doubled, v2.doubled);
  detail::PairOutcome o = detail::process_pair<Int>(c1, c2);
  return detail::assemble_result(v1, v2, std::move(o), rc);
}

inline EmbeddingResult catalog_embedding(const std::string& name) {
  return catalog_embedding(catalog_from_string(name));
}

// [E8 : image + complement], the index of the full-rank direct sum; satisfies
// |det K| * |det complement_gram| = index^2 since E8 is unimodular.
inline Int direct_sum_index(const EmbeddingResult& r) {
  Mat<Int> stack(8, 8);
  const std::vector<Int> c1 = e8::to_basis_coords(r.v1);
  const std::vector<Int> c2 = e8::to_basis_coords(r.v2);
  for (int j = 0; j < 8; ++j) {
    stack(0, j) = c1[j];
    stack(1, j) = c2[j];
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (int j = 0; j < 8; ++j) stack(2 + i, j) = r.complement_basis(i, j);
  return abs_val(det_bareiss(stack));
}

}  // namespace latkit
