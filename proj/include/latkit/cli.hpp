#pragma once

// Command-line front end.  Thin: parses arguments, dispatches to the library,
// serializes results.  Exit codes: 0 success, 1 table --check mismatch,
// 2 usage or input errors (malformed JSON, rejected domains, bad flags).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latkit/json_io.hpp"
#include "latkit/shortvec.hpp"

namespace latkit::cli {

inline constexpr const char* kVersion = "1.0.0";

namespace detail {

inline int do_roots(const std::string& file, const std::string& named, std::int64_t norm,
                    bool list, std::ostream& out) {
  if (file.empty() == named.empty())
    throw std::invalid_argument("provide exactly one lattice: a JSON file or --named NAME");
  GramLattice l = named.empty() ? lattice_from_file(file) : named_lattice(named);
  auto vectors = enumerate_norm_vectors(l, Int(norm));
  out << vectors.size() << "\n";
  if (list) {
    for (const auto& v : vectors) {
      Json row = Json::array();
      for (const Int& x : v) row.push_back(int_to_json(x));
      out << row.dump() << "\n";
    }
  }
  return 0;
}

inline int do_embed(const std::string& gram_text, const std::string& catalog,
                    const std::string& mode_name, const std::string& json_file,
                    std::ostream& out) {
  if (gram_text.empty() == catalog.empty())
    throw std::invalid_argument("provide exactly one of --gram or --catalog/--paper");
  Json result;
  result["schema_version"] = kSchemaVersion;
  if (!catalog.empty()) {
    EmbeddingResult r = catalog_embedding(catalog);
    result["catalog"] = catalog;
    result["form"] = matrix_to_json(catalog_form(catalog_from_string(catalog)).gram());
    result["results"] = Json::array({embedding_result_to_json(r)});
  } else {
    Json g;
    try {
      g = Json::parse(gram_text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("--gram: ") + e.what());
    }
    Mat<Int> m = matrix_from_json(g, "--gram");
    if (m.rows() != 2 || m.cols() != 2 || m(0, 1) != m(1, 0))
      throw std::invalid_argument("--gram must be a symmetric 2x2 matrix");
    RankTwoForm k{m(0, 0), m(0, 1), m(1, 1)};
    EmbedMode mode;
    if (mode_name == "first_root_fixed") mode = EmbedMode::first_root_fixed;
    else if (mode_name == "exhaustive") mode = EmbedMode::exhaustive;
    else throw std::invalid_argument("--mode must be first_root_fixed or exhaustive");
    result["form"] = matrix_to_json(k.gram());
    result["mode"] = mode_name;
    Json arr = Json::array();
    for (const EmbeddingResult& r : find_embeddings(k, mode))
      arr.push_back(embedding_result_to_json(r));
    result["results"] = std::move(arr);
  }
  result["result_count"] = result["results"].size();
  if (!json_file.empty()) {
    std::ofstream f(json_file);
    if (!f) throw std::invalid_argument("cannot write to " + json_file);
    f << result.dump(2) << "\n";
    out << "wrote " << result["results"].size() << " results to " << json_file << "\n";
  } else {
    out << result.dump(2) << "\n";
  }
  return 0;
}

inline int do_family(const std::string& name, const std::string& custom, std::ostream& out) {
  if (name.empty() == custom.empty())
    throw std::invalid_argument("provide exactly one of a family name or --custom JSON");
  if (!name.empty()) {
    out << family_to_json(builtin_family(name)).dump(2) << "\n";
    return 0;
  }
  Json spec;
  try {
    spec = Json::parse(custom);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("--custom: ") + e.what());
  }
  if (!spec.is_object() || !spec.contains("t") || !spec.contains("D") || !spec.contains("split"))
    throw std::invalid_argument("--custom needs fields t, D, split");
  PolarizationData p{int_from_json(spec.at("t"), "t"), int_from_json(spec.at("D"), "D"),
                     spec.at("split").get<bool>()};
  GramLattice l = polarized_lattice(p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["t"] = int_to_json(p.t);
  j["D"] = int_to_json(p.D);
  j["split"] = p.split;
  j["lattice"] = lattice_to_json(l);
  auto [pos, neg] = l.signature();
  j["signature"] = {pos, neg};
  j["det"] = int_to_json(l.det());
  const DiscriminantGroup g = l.discriminant_group();
  Json divs = Json::array();
  for (const Int& d : g.elementary_divisors) divs.push_back(int_to_json(d));
  j["discriminant_group"] = {{"elementary_divisors", divs}, {"order", int_to_json(g.order)}};
  out << j.dump(2) << "\n";
  return 0;
}

inline unsigned thread_count_from_env() {
  const char* v = std::getenv("LATKIT_THREADS");
  if (!v) return 1;
  try {
    const long n = std::stol(v);
    if (n < 1) return 1;
    return static_cast<unsigned>(n > 6 ? 6 : n);
  } catch (const std::exception&) {
    return 1;
  }
}

inline std::string opt_text(const std::optional<Int>& v) {
  return v ? to_string(*v) : std::string("-");
}

inline void render_md(const std::vector<TransitionReport>& rows, std::ostream& out) {
  auto cell = [&](const std::string& label, auto field) {
    out << "| " << label << " ";
    for (const TransitionReport& r : rows) out << "| " << field(r) << " ";
    out << "|\n";
  };
  out << "|  ";
  for (const TransitionReport& r : rows) out << "| " << r.family << " ";
  out << "|\n|---";
  for (std::size_t i = 0; i < rows.size(); ++i) out << "|---";
  out << "|\n";
  cell("unirational for n <=",
       [](const TransitionReport& r) { return std::to_string(r.unirational_bound); });
  cell("kappa >= 0 for n >=", [](const TransitionReport& r) { return opt_text(r.n_nonneg); });
  cell("kappa > 0 for n >=", [](const TransitionReport& r) { return opt_text(r.n_pos); });
  out << "\nwitnesses (weight = " << rows.front().b << " + d*n):\n";
  for (const TransitionReport& r : rows) {
    out << "  " << r.family << ": ";
    auto describe = [&](const char* tag, const std::optional<WeightCandidate>& w,
                        const std::optional<Int>& n) {
      if (!w || !n) {
        out << tag << " none below k_max " << r.searched_k_max;
        return;
      }
      out << tag << " weight " << w->weight << " = " << r.b << " + " << r.d << "*" << *n;
      if (w->source == CandidateSource::product)
        out << " (lift input k = " << *w->k << ", dim >= " << w->multiplicity_lb << ")";
      else
        out << " (quasi-pullback)";
    };
    describe("kappa>=0:", r.witness_nonneg, r.n_nonneg);
    out << "; ";
    describe("kappa>0:", r.witness_pos, r.n_pos);
    if (!r.near_miss_weights.empty()) {
      out << "; near-miss weights:";
      for (const Int& w : r.near_miss_weights) out << " " << w;
    }
    out << "\n";
  }
  out << "value stabilizes to " << rows.front().b << " for all sufficiently large n\n";
}

inline void render_csv(const std::vector<TransitionReport>& rows, std::ostream& out) {
  out << "family,unirational_bound,n_nonneg,n_pos,stabilizes_to\n";
  for (const TransitionReport& r : rows)
    out << r.family << "," << r.unirational_bound << "," << opt_text(r.n_nonneg) << ","
        << opt_text(r.n_pos) << "," << r.b << "\n";
}

inline int do_table(const std::string& format, bool check, std::ostream& out) {
  std::vector<TransitionReport> rows = theorem_table(thread_count_from_env());
  if (check) {
    const std::vector<TableMismatch> bad = table_mismatches(rows);
    if (bad.empty()) {
      out << "OK: computed table matches the stored values (" << rows.size() << " families)\n";
      return 0;
    }
    for (const TableMismatch& m : bad)
      out << "MISMATCH " << m.family << " " << m.field << ": expected " << m.expected
          << ", computed " << m.got << "\n";
    return 1;
  }
  if (format == "md") {
    render_md(rows, out);
  } else if (format == "csv") {
    render_csv(rows, out);
  } else if (format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json arr = Json::array();
    for (const TransitionReport& r : rows) arr.push_back(report_to_json(r));
    j["rows"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    throw std::invalid_argument("--format must be md, csv, or json");
  }
  return 0;
}

inline int do_info(std::ostream& out) {
  out << "latkit " << kVersion << " — exact lattice toolkit\n";
  out << "schema_version: " << kSchemaVersion << "\n";
  out << "commands: roots, embed, family, table, info\n";
  out << "named lattices: U, A<k>, D<l>, E<6|7|8>, <m> (rank one of norm m)\n";
  out << "builtin families:";
  for (const std::string& n : builtin_family_names()) out << " " << n;
  out << "\nembedding catalog:";
  for (const std::string& n : catalog_names()) out << " " << n;
  out << "\nembedding search bound: |a|, |c| <= " << kMaxEmbedNormMagnitude << "\n";
  out << "env: LATKIT_THREADS (table parallelism, default 1)\n";
  return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic lattice toolkit", "latkit"};
  app.require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "count (and list) vectors of a given norm");
  std::string roots_file, roots_named;
  std::int64_t roots_norm = -2;
  bool roots_list = false;
  roots->add_option("lattice", roots_file, "lattice JSON file ({\"gram\": [[...]]})");
  roots->add_option("--named", roots_named, "built-in lattice name (e.g. E8, A2, D6, U, <-2>)");
  roots->add_option("--norm", roots_norm, "target norm (negative; default -2)");
  roots->add_flag("--list", roots_list, "print the sorted vectors as JSON lines");

  auto* embed = app.add_subcommand("embed", "rank-2 embeddings into E8 with complement data");
  std::string embed_gram, embed_catalog, embed_mode = "first_root_fixed", embed_json;
  embed->add_option("--gram", embed_gram, "2x2 Gram matrix as JSON, e.g. [[-2,1],[1,-6]]");
  embed->add_option("--catalog,--paper", embed_catalog,
                    "catalog entry: DV, IR, IR_alt1, IR_alt2, cub, EPW");
  embed->add_option("--mode", embed_mode, "first_root_fixed (default) or exhaustive");
  embed->add_option("--json", embed_json, "write full results to this file");

  auto* family = app.add_subcommand("family", "built-in or custom polarized family data");
  std::string family_name, family_custom;
  family->add_option("name", family_name, "family name: BD, DV, LLSS, IR, OG, IKKR");
  family->add_option("--custom", family_custom,
                     "polarization JSON, e.g. {\"t\":1,\"D\":7,\"split\":false}");

  auto* table = app.add_subcommand("table", "degree bounds for all built-in families");
  std::string table_format = "md";
  bool table_check = false;
  table->add_option("--format", table_format, "md (default), csv, or json");
  table->add_flag("--check", table_check, "verify computed values against the stored table");

  auto* info = app.add_subcommand("info", "toolkit capabilities and limits");

  args.insert(args.begin(), "latkit");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (roots->parsed())
      return detail::do_roots(roots_file, roots_named, roots_norm, roots_list, out);
    if (embed->parsed())
      return detail::do_embed(embed_gram, embed_catalog, embed_mode, embed_json, out);
    if (family->parsed()) return detail::do_family(family_name, family_custom, out);
    if (table->parsed()) return detail::do_table(table_format, table_check, out);
    if (info->parsed()) return detail::do_info(out);
    err << "no command given (try --help)\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    out << error_json("invalid_input", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    out << error_json("invalid_input", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << error_json("internal_error", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace latkit::cli
