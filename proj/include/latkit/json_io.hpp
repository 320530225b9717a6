#pragma once

// JSON schemas (schema_version 1) for lattices, E8 vectors, embedding
// results, families, and transition reports.  Integers are emitted as JSON
// numbers when they fit 53 bits (interoperable with double-based parsers)
// and as decimal strings beyond that; both forms are accepted on input.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latkit/e8.hpp"
#include "latkit/embed.hpp"
#include "latkit/families.hpp"
#include "latkit/lattice.hpp"
#include "latkit/transition.hpp"

namespace latkit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json int_to_json(const Int& v) {
  static const Int lim = Int(1) << 53;
  if (v >= -lim && v <= lim) return Json(to_int64(v));
  return Json(to_string(v));
}

inline Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument(where + ": not a valid integer string: " + j.dump());
    }
  }
  throw std::invalid_argument(where + ": expected an integer or integer string, got " + j.dump());
}

inline Json matrix_to_json(const Mat<Int>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat<Int> matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat<Int> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument(where + ": row " + std::to_string(i) +
                                  " is not an array of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = int_from_json(row[c], where + "[" + std::to_string(i) + "][" +
                                          std::to_string(c) + "]");
  }
  return m;
}

inline Json lattice_to_json(const GramLattice& l) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (!l.name().empty()) j["name"] = l.name();
  j["gram"] = matrix_to_json(l.gram());
  return j;
}

inline GramLattice lattice_from_json(const Json& j) {
  if (j.is_array()) return GramLattice(matrix_from_json(j, "gram"));  // bare Gram matrix
  if (!j.is_object()) throw std::invalid_argument("lattice: expected a JSON object or matrix");
  if (!j.contains("gram")) throw std::invalid_argument("lattice: missing \"gram\" field");
  std::string name = j.value("name", std::string{});
  return GramLattice(matrix_from_json(j.at("gram"), "gram"), std::move(name));
}

inline GramLattice lattice_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return lattice_from_json(j);
}

inline Json e8_vector_to_json(const e8::E8Vector& v) {
  Json j;
  j["doubled"] = true;
  j["coords"] = Json::array();
  for (int i = 0; i < 8; ++i) j["coords"].push_back(v.doubled[i]);
  return j;
}

inline e8::E8Vector e8_vector_from_json(const Json& j) {
  if (!j.is_object() || j.value("doubled", false) != true)
    throw std::invalid_argument("E8 vector: expected an object with \"doubled\": true");
  const Json& c = j.at("coords");
  if (!c.is_array() || c.size() != 8)
    throw std::invalid_argument("E8 vector: \"coords\" must have length 8");
  e8::E8Vector v;
  for (int i = 0; i < 8; ++i)
    v.doubled[i] = to_int64(int_from_json(c[i], "coords[" + std::to_string(i) + "]"));
  e8::validate(v);
  return v;
}

inline Json embedding_result_to_json(const EmbeddingResult& r) {
  Json j;
  j["v1"] = e8_vector_to_json(r.v1);
  j["v2"] = e8_vector_to_json(r.v2);
  j["image_index"] = int_to_json(r.image_index);
  j["complement_gram"] = matrix_to_json(r.complement_gram);
  j["root_count"] = r.root_count;
  j["weight"] = int_to_json(r.weight);
  j["is_cusp"] = r.is_cusp;
  return j;
}

inline Json family_to_json(const FamilySpec& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = f.name;
  j["d"] = f.d;
  j["b"] = f.b;
  j["lattice"] = lattice_to_json(f.lattice);
  j["w0"] = int_to_json(f.w0);
  j["w0_is_cusp"] = f.w0_is_cusp;
  j["invariance_mode"] = invariance_mode_name(f.invariance_mode);
  j["dim_formula"] = dim_formula_text(f.dim_formula);
  j["unirational_bound"] = f.unirational_bound;
  j["embedding"] = catalog_to_string(f.embedding);
  const DiscriminantGroup g = f.lattice.discriminant_group();
  Json divs = Json::array();
  for (const Int& d : g.elementary_divisors) divs.push_back(int_to_json(d));
  j["discriminant_group"] = {{"elementary_divisors", divs}, {"order", int_to_json(g.order)}};
  auto [p, q] = f.lattice.signature();
  j["signature"] = {p, q};
  return j;
}

inline Json candidate_to_json(const WeightCandidate& c) {
  Json j;
  j["weight"] = int_to_json(c.weight);
  j["multiplicity_lb"] = int_to_json(c.multiplicity_lb);
  j["source"] = c.source == CandidateSource::quasi_pullback ? "quasi_pullback" : "product";
  if (c.k) j["k"] = int_to_json(*c.k);
  return j;
}

inline Json report_to_json(const TransitionReport& r) {
  Json j;
  j["family"] = r.family;
  j["n_nonneg"] = r.n_nonneg ? int_to_json(*r.n_nonneg) : Json();
  j["n_pos"] = r.n_pos ? int_to_json(*r.n_pos) : Json();
  if (r.witness_nonneg) j["witness_nonneg"] = candidate_to_json(*r.witness_nonneg);
  if (r.witness_pos) j["witness_pos"] = candidate_to_json(*r.witness_pos);
  j["searched_k_max"] = int_to_json(r.searched_k_max);
  if (!r.n_nonneg || !r.n_pos)
    j["not_found_below_k_max"] = int_to_json(r.searched_k_max);
  Json nm = Json::array();
  for (const Int& w : r.near_miss_weights) nm.push_back(int_to_json(w));
  j["near_miss_weights"] = nm;
  // qualitative by design: the value for large n, with no threshold claimed
  j["stabilizes_to"] = r.stabilizes_to_b ? Json(r.b) : Json();
  j["unirational_bound"] = r.unirational_bound;
  return j;
}

inline Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace latkit
