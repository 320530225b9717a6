#pragma once

// Degree-polarized lattices of signature (2, 20) and the six built-in
// families whose modular-form bookkeeping the transition module consumes.
// Dimension counts for the relevant vector-valued form spaces are closed
// forms in odd k, stored per family; they are lookup data, not a general
// dimension algorithm.

#include <string>
#include <vector>

#include "latkit/embed.hpp"
#include "latkit/lattice.hpp"
#include "latkit/numeric.hpp"

namespace latkit {

struct PolarizationData {
  Int t;       // half the polarization norm: the distinguished vector has norm 2t
  Int D;       // discriminant parameter; |det| is t*D (non-split) or 4*t*D (split)
  bool split;  // split: <-2t> + <-2D>; non-split: [[-2t, t], [t, -(D+t)/2]]
};

// 2U + 2E8 + (rank-2 tail determined by p).  Requires t, D >= 1 coprime,
// and D + t even in the non-split case so the tail stays integral and even.
inline GramLattice polarized_lattice(const PolarizationData& p) {
  if (p.t < 1 || p.D < 1) throw std::invalid_argument("polarization needs t >= 1 and D >= 1");
  if (gcd(p.t, p.D) != 1)
    throw std::invalid_argument("polarization needs gcd(t, D) = 1; got gcd = " +
                                to_string(gcd(p.t, p.D)));
  GramLattice tail = [&] {
    if (p.split)
      return GramLattice(Mat<Int>{{-2 * p.t, 0}, {0, -2 * p.D}});
    if ((p.D + p.t) % 2 != 0)
      throw std::invalid_argument("non-split polarization needs D + t even; got t = " +
                                  to_string(p.t) + ", D = " + to_string(p.D));
    return GramLattice(Mat<Int>{{-2 * p.t, p.t}, {p.t, -(p.D + p.t) / 2}});
  }();
  const GramLattice u = named_lattice("U");
  const GramLattice e8 = named_lattice("E8");
  return direct_sum({u, u, e8, e8, tail});
}

enum class InvarianceMode { tilde_plain, parity, anti_invariant };

inline std::string invariance_mode_name(InvarianceMode m) {
  switch (m) {
    case InvarianceMode::tilde_plain: return "tilde_plain";
    case InvarianceMode::parity: return "parity";
    case InvarianceMode::anti_invariant: return "anti_invariant";
  }
  throw std::logic_error("unhandled invariance mode");
}

// Closed-form dimension tables, valid for odd k > 2.
enum class DimFormulaId { cub, dv, ir, epw };

inline std::string dim_formula_text(DimFormulaId f) {
  switch (f) {
    case DimFormulaId::cub: return "floor((k+3)/6)";
    case DimFormulaId::dv: return "(k-1)/2";
    case DimFormulaId::ir: return "floor((5k-3)/6)";
    case DimFormulaId::epw: return "floor(k/3)";
  }
  throw std::logic_error("unhandled dimension formula");
}

struct FamilySpec {
  std::string name;
  int d = 0;  // polarization degree step: candidate weights live in b + d*Z
  int b = 20; // weight offset; also the stable Kodaira value
  GramLattice lattice;
  Int w0;     // quasi-pullback weight of the chosen embedding
  bool w0_is_cusp = false;
  InvarianceMode invariance_mode = InvarianceMode::tilde_plain;
  DimFormulaId dim_formula = DimFormulaId::cub;
  int unirational_bound = 0;  // stored classical bound, not computed here
  CatalogEmbedding embedding = CatalogEmbedding::cub;
  std::vector<CatalogEmbedding> alternates;  // near-miss embeddings of the same form
};

inline const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names{"BD", "DV", "LLSS", "IR", "OG", "IKKR"};
  return names;
}

inline FamilySpec builtin_family(const std::string& name) {
  FamilySpec f;
  f.name = name;
  f.b = 20;
  auto lat = [](Int t, Int d, bool split, const char* tag) {
    GramLattice l = polarized_lattice({t, d, split});
    return GramLattice(l.gram(), tag);
  };
  if (name == "BD") {
    f.d = 2;
    f.lattice = lat(1, 3, false, "L_cub");
    f.invariance_mode = InvarianceMode::tilde_plain;
    f.dim_formula = DimFormulaId::cub;
    f.unirational_bound = 13;
    f.embedding = CatalogEmbedding::cub;
  } else if (name == "DV") {
    f.d = 2;
    f.lattice = lat(1, 11, false, "L_DV");
    f.invariance_mode = InvarianceMode::tilde_plain;
    f.dim_formula = DimFormulaId::dv;
    f.unirational_bound = 5;
    f.embedding = CatalogEmbedding::DV;
  } else if (name == "LLSS") {
    f.d = 4;
    f.lattice = lat(1, 3, false, "L_cub");
    f.invariance_mode = InvarianceMode::parity;
    f.dim_formula = DimFormulaId::cub;
    f.unirational_bound = 5;
    f.embedding = CatalogEmbedding::cub;
  } else if (name == "IR") {
    f.d = 2;
    f.lattice = lat(1, 19, false, "L_IR");
    f.invariance_mode = InvarianceMode::tilde_plain;
    f.dim_formula = DimFormulaId::ir;
    f.unirational_bound = 1;
    f.embedding = CatalogEmbedding::IR;
    f.alternates = {CatalogEmbedding::IR_alt1, CatalogEmbedding::IR_alt2};
  } else if (name == "OG") {
    f.d = 2;
    f.lattice = lat(1, 1, true, "L_EPW");
    f.invariance_mode = InvarianceMode::tilde_plain;
    f.dim_formula = DimFormulaId::epw;
    f.unirational_bound = 0;
    f.embedding = CatalogEmbedding::EPW;
  } else if (name == "IKKR") {
    // the (t, D) grid does not reach this lattice (t = D = 2 is not coprime),
    // so its 2U + 2E8 + 2A1 is set directly
    f.d = 3;
    GramLattice l = direct_sum({named_lattice("U"), named_lattice("U"), named_lattice("E8"),
                                named_lattice("E8"), named_lattice("A1"), named_lattice("A1")});
    f.lattice = GramLattice(l.gram(), "L_EPW");
    f.invariance_mode = InvarianceMode::anti_invariant;
    f.dim_formula = DimFormulaId::epw;
    f.unirational_bound = 0;
    f.embedding = CatalogEmbedding::EPW;
  } else {
    throw std::invalid_argument("unknown family: " + name +
                                " (expected BD, DV, LLSS, IR, OG, or IKKR)");
  }
  const EmbeddingResult e = catalog_embedding(f.embedding);
  f.w0 = e.weight;  // derived from the embedding's root count, not stored blind
  f.w0_is_cusp = e.is_cusp;
  return f;
}

namespace detail {
inline void require_odd_k(const Int& k) {
  if (k % 2 == 0 || k <= 2)
    throw std::invalid_argument("dimension formulas are defined for odd k > 2; got k = " +
                                to_string(k));
}
}  // namespace detail

// dim of the relevant space of vector-valued forms of weight k (odd, > 2).
inline Int dim_weil_forms(const FamilySpec& f, const Int& k) {
  detail::require_odd_k(k);
  switch (f.dim_formula) {
    case DimFormulaId::cub: return floor_div(k + 3, Int(6));
    case DimFormulaId::dv: return (k - 1) / 2;
    case DimFormulaId::ir: return floor_div(5 * k - 3, Int(6));
    case DimFormulaId::epw: return floor_div(k, Int(3));
  }
  throw std::logic_error("unhandled dimension formula");
}

// dim of the part anti-invariant under the order-two symmetry; only families
// in anti_invariant mode carry one.
inline Int dim_weil_forms_anti(const FamilySpec& f, const Int& k) {
  if (f.invariance_mode != InvarianceMode::anti_invariant)
    throw std::invalid_argument("family " + f.name + " has no anti-invariant splitting");
  detail::require_odd_k(k);
  return floor_div(k, Int(3)) - floor_div(k + 2, Int(4));
}

// Lift weight shift for rank-22 input: weight k forms lift to weight k + 9.
inline Int gritsenko_weight(const Int& k) { return k + 9; }

}  // namespace latkit
