#pragma once

// Coordinate model of the negative-definite E8 lattice: vectors live in Q^8
// with all coordinates integral or all half-integral and even coordinate sum.
// Storage doubles every coordinate so everything stays integer; the pairing
// divides the doubled dot product by four and negates.
//
// A fixed simple-root basis (Bourbaki numbering) bridges the coordinate
// model and the Gram-matrix world of the other modules.

#include <array>
#include <cstdint>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/matrix.hpp"
#include "latkit/numeric.hpp"

namespace latkit::e8 {

struct E8Vector {
  std::array<std::int64_t, 8> doubled{};  // twice the model coordinates

  bool operator==(const E8Vector& o) const { return doubled == o.doubled; }
  bool operator<(const E8Vector& o) const { return doubled < o.doubled; }
};

// Lattice membership: uniform parity and doubled sum divisible by 4.
inline bool is_valid(const E8Vector& v) {
  std::int64_t sum = 0;
  const std::int64_t parity = ((v.doubled[0] % 2) + 2) % 2;
  for (std::int64_t d : v.doubled) {
    if ((((d % 2) + 2) % 2) != parity) return false;
    sum += d;
  }
  return ((sum % 4) + 4) % 4 == 0;
}

inline void validate(const E8Vector& v) {
  if (!is_valid(v))
    throw std::invalid_argument("not an E8 lattice vector (parity or sum condition fails)");
}

// true when all model coordinates are integers (doubled entries even)
inline bool has_integer_coords(const E8Vector& v) {
  return v.doubled[0] % 2 == 0;
}

inline Int e8_pairing(const E8Vector& v, const E8Vector& w) {
  validate(v);
  validate(w);
  Int dot = 0;
  for (int i = 0; i < 8; ++i) dot += Int(v.doubled[i]) * Int(w.doubled[i]);
  if (dot % 4 != 0) throw std::logic_error("doubled dot of lattice vectors must be divisible by 4");
  return -dot / 4;
}

inline Int e8_norm(const E8Vector& v) { return e8_pairing(v, v); }

// x_i = si, x_j = sj, all else 0 (si, sj in {+1, -1}, i != j)
inline E8Vector delta_root(int i, int j, int si, int sj) {
  E8Vector v;
  v.doubled[i] = 2 * si;
  v.doubled[j] = 2 * sj;
  return v;
}

// x_i = +1/2 for i in the even-cardinality set S, -1/2 elsewhere
inline E8Vector delta_prime_root(unsigned mask) {
  E8Vector v;
  for (int i = 0; i < 8; ++i) v.doubled[i] = (mask >> i) & 1 ? 1 : -1;
  return v;
}

// All 240 roots in a fixed order: the 112 integral ones (i < j, sign pairs
// ++, +-, -+, --), then the 128 half-integral ones by ascending mask.
inline const std::vector<E8Vector>& all_roots() {
  static const std::vector<E8Vector> roots = [] {
    std::vector<E8Vector> r;
    r.reserve(240);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int si : {+1, -1})
          for (int sj : {+1, -1}) r.push_back(delta_root(i, j, si, sj));
    for (unsigned mask = 0; mask < 256; ++mask)
      if (__builtin_popcount(mask) % 2 == 0) r.push_back(delta_prime_root(mask));
    return r;
  }();
  return roots;
}

// Doubled coordinates of the simple roots a1..a8 (Bourbaki numbering:
// chain 1-3-4-5-6-7-8 with 2 attached to 4).
inline const Mat<Int>& basis_doubled() {
  static const Mat<Int> b{{1, -1, -1, -1, -1, -1, -1, 1},
                          {2, 2, 0, 0, 0, 0, 0, 0},
                          {-2, 2, 0, 0, 0, 0, 0, 0},
                          {0, -2, 2, 0, 0, 0, 0, 0},
                          {0, 0, -2, 2, 0, 0, 0, 0},
                          {0, 0, 0, -2, 2, 0, 0, 0},
                          {0, 0, 0, 0, -2, 2, 0, 0},
                          {0, 0, 0, 0, 0, -2, 2, 0}};
  return b;
}

inline const GramLattice& lattice() {
  static const GramLattice l = named_lattice("E8");
  return l;
}

// Coordinates of v in the simple-root basis; exact, and integral for every
// valid lattice vector.
inline std::vector<Int> to_basis_coords(const E8Vector& v) {
  validate(v);
  std::vector<Int> w(8);
  for (int i = 0; i < 8; ++i) w[i] = Int(v.doubled[i]);
  auto x = solve_left(basis_doubled(), w);
  if (!x) throw std::logic_error("simple-root basis is singular");  // unreachable
  std::vector<Int> out(8);
  for (int i = 0; i < 8; ++i) {
    if (den((*x)[i]) != 1)
      throw std::invalid_argument("vector is not integral in the simple-root basis");
    out[i] = num((*x)[i]);
  }
  return out;
}

inline E8Vector from_basis_coords(const std::vector<Int>& coords) {
  if (coords.size() != 8) throw std::invalid_argument("E8 basis coordinates need length 8");
  const Mat<Int>& b = basis_doubled();
  E8Vector v;
  for (int col = 0; col < 8; ++col) {
    Int acc = 0;
    for (int row = 0; row < 8; ++row) acc += coords[row] * b(row, col);
    v.doubled[col] = to_int64(acc);
  }
  validate(v);
  return v;
}

}  // namespace latkit::e8
