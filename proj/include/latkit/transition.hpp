#pragma once

// Converts cusp-form weights into polarization-degree bounds: a cusp form of
// weight b + d*n (with multiplicity, i.e. space dimension, at least 1 or 2)
// witnesses non-negative resp. positive Kodaira dimension from degree n on.
// Candidate weights come from the family's quasi-pullback (weight w0) and
// from products of the quasi-pullback with weight-(k+9) lifts of weight-k
// forms counted by the family's dimension table.
//
// Multiplicities recorded here are lower bounds, never exact dimensions.
// The large-degree statement ("the value stabilizes to b") is reported as a
// qualitative flag on purpose; no numeric threshold is computed anywhere.

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "latkit/families.hpp"
#include "latkit/numeric.hpp"

namespace latkit {

enum class CandidateSource { quasi_pullback, product };

struct WeightCandidate {
  Int weight;
  Int multiplicity_lb;  // lower bound for the number of independent cusp forms
  CandidateSource source = CandidateSource::quasi_pullback;
  std::optional<Int> k;  // product candidates: the input weight of the lifted form
};

// Admissible candidate weights up to lift input weight k_max (k_max >= 3).
// Filters: (i) weight - b divisible by d with positive quotient,
// (ii) parity mode additionally needs weight == b mod 2,
// (iii) anti_invariant mode admits only product candidates with k == 2 mod 3
//       (the quasi-pullback alone is anti-invariant, hence never admissible).
inline std::vector<WeightCandidate> admissible_candidates(const FamilySpec& f, const Int& k_max) {
  if (k_max < 3) throw std::invalid_argument("k_max must be at least 3");
  std::vector<WeightCandidate> out;
  const bool anti = f.invariance_mode == InvarianceMode::anti_invariant;
  auto admit = [&](WeightCandidate cand) {
    const Int q = cand.weight - f.b;
    if (q % f.d != 0 || q / f.d < 1) return;
    if (f.invariance_mode == InvarianceMode::parity && q % 2 != 0) return;
    if (anti) {
      if (cand.source != CandidateSource::product) return;
      if ((*cand.k) % 3 != 2) return;
    }
    out.push_back(std::move(cand));
  };
  if (f.w0_is_cusp) admit({f.w0, 1, CandidateSource::quasi_pullback, std::nullopt});
  for (Int k = 3; k <= k_max; k += 2) {
    const Int dim = anti ? dim_weil_forms_anti(f, k) : dim_weil_forms(f, k);
    if (dim < 1) continue;
    admit({f.w0 + gritsenko_weight(k), dim, CandidateSource::product, k});
  }
  return out;
}

struct TransitionReport {
  std::string family;
  int b = 20;  // weight offset and the stable value
  int d = 0;   // weight step per polarization degree
  std::optional<Int> n_nonneg;  // least n witnessed for Kodaira dimension >= 0
  std::optional<Int> n_pos;     // least n witnessed for Kodaira dimension > 0
  std::optional<WeightCandidate> witness_nonneg;
  std::optional<WeightCandidate> witness_pos;
  Int searched_k_max;                // lift input ceiling the sweep ended at
  std::vector<Int> near_miss_weights;  // alternate-embedding weights failing the d-step filter
  bool stabilizes_to_b = true;       // qualitative: equals b for all large n; no threshold computed
  int unirational_bound = 0;         // echoed from the family's stored classical bound
};

namespace detail {

struct Minima {
  std::optional<Int> n_nonneg, n_pos;
  std::optional<WeightCandidate> w_nonneg, w_pos;

  bool operator==(const Minima& o) const {
    return n_nonneg == o.n_nonneg && n_pos == o.n_pos;
  }
};

// Tie-break: smaller k wins; a quasi-pullback witness counts as k = -infinity.
inline bool candidate_precedes(const WeightCandidate& a, const WeightCandidate& b) {
  const bool aq = a.source == CandidateSource::quasi_pullback;
  const bool bq = b.source == CandidateSource::quasi_pullback;
  if (aq != bq) return aq;
  if (aq) return false;
  return *a.k < *b.k;
}

inline Minima minima_for(const FamilySpec& f, const Int& k_max) {
  Minima m;
  for (const WeightCandidate& c : admissible_candidates(f, k_max)) {
    const Int n = (c.weight - f.b) / f.d;
    auto consider = [&](std::optional<Int>& slot, std::optional<WeightCandidate>& wit) {
      if (!slot || n < *slot || (n == *slot && candidate_precedes(c, *wit))) {
        slot = n;
        wit = c;
      }
    };
    if (c.multiplicity_lb >= 1) consider(m.n_nonneg, m.w_nonneg);
    if (c.multiplicity_lb >= 2) consider(m.n_pos, m.w_pos);
  }
  return m;
}

}  // namespace detail

inline constexpr long kLiftSearchCeiling = 1023;

// Sweeps k_max upward (15, 31, 63, ...) until two consecutive sweeps agree on
// both minima; reports "not found" via empty optionals if the hard ceiling is
// reached without agreement on a value.
inline TransitionReport kodaira_bounds(const FamilySpec& f) {
  TransitionReport rep;
  rep.family = f.name;
  rep.b = f.b;
  rep.d = f.d;
  rep.unirational_bound = f.unirational_bound;
  Int k_max = 15;
  detail::Minima prev = detail::minima_for(f, k_max);
  while (true) {
    const Int next = 2 * k_max + 1;
    if (next > kLiftSearchCeiling) break;
    detail::Minima cur = detail::minima_for(f, next);
    k_max = next;
    if (cur == prev && cur.n_nonneg && cur.n_pos) {
      prev = cur;
      break;
    }
    prev = cur;
  }
  rep.searched_k_max = k_max;
  rep.n_nonneg = prev.n_nonneg;
  rep.n_pos = prev.n_pos;
  rep.witness_nonneg = prev.w_nonneg;
  rep.witness_pos = prev.w_pos;
  for (CatalogEmbedding alt : f.alternates) {
    const Int w = catalog_embedding(alt).weight;
    const Int q = w - f.b;
    const bool admissible_step = q % f.d == 0 && q / f.d >= 1;
    if (!admissible_step &&
        std::find(rep.near_miss_weights.begin(), rep.near_miss_weights.end(), w) ==
            rep.near_miss_weights.end())
      rep.near_miss_weights.push_back(w);
  }
  return rep;
}

// Reports for every built-in family, in canonical order.  threads > 1 fans
// the independent families out via std::async; results keep their slots, so
// output is identical either way.
inline std::vector<TransitionReport> theorem_table(unsigned threads = 1) {
  const std::vector<std::string>& names = builtin_family_names();
  std::vector<TransitionReport> out(names.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i)
      out[i] = kodaira_bounds(builtin_family(names[i]));
    return out;
  }
  std::vector<std::future<TransitionReport>> futs;
  futs.reserve(names.size());
  for (const std::string& name : names)
    futs.push_back(std::async(std::launch::async,
                              [name] { return kodaira_bounds(builtin_family(name)); }));
  for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
  return out;
}

// Stored published values the computed table must reproduce (--check mode).
struct TableGolden {
  const char* family;
  long n_nonneg;
  long n_pos;
  int unirational_bound;
};

inline const std::vector<TableGolden>& table_golden() {
  static const std::vector<TableGolden> g{
      {"BD", 14, 23, 13}, {"DV", 6, 13, 5},  {"LLSS", 7, 12, 5},
      {"IR", 6, 12, 1},   {"OG", 11, 19, 0}, {"IKKR", 16, 20, 0},
  };
  return g;
}

struct TableMismatch {
  std::string family;
  std::string field;
  std::string expected;
  std::string got;
};

inline std::vector<TableMismatch> table_mismatches(const std::vector<TransitionReport>& reports) {
  std::vector<TableMismatch> out;
  const auto& golden = table_golden();
  auto show = [](const std::optional<Int>& v) { return v ? to_string(*v) : std::string("none"); };
  if (reports.size() != golden.size()) {
    out.push_back({"<table>", "rows", std::to_string(golden.size()),
                   std::to_string(reports.size())});
    return out;
  }
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const TransitionReport& r = reports[i];
    const TableGolden& g = golden[i];
    if (r.family != g.family) out.push_back({r.family, "family", g.family, r.family});
    if (!r.n_nonneg || *r.n_nonneg != g.n_nonneg)
      out.push_back({g.family, "n_nonneg", std::to_string(g.n_nonneg), show(r.n_nonneg)});
    if (!r.n_pos || *r.n_pos != g.n_pos)
      out.push_back({g.family, "n_pos", std::to_string(g.n_pos), show(r.n_pos)});
    if (r.unirational_bound != g.unirational_bound)
      out.push_back({g.family, "unirational_bound", std::to_string(g.unirational_bound),
                     std::to_string(r.unirational_bound)});
  }
  return out;
}

}  // namespace latkit
