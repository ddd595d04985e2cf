#pragma once

// Command-line front end. run_cli() is the whole program; tools/semibrace.cpp
// only forwards argv. Exit codes are the ErrorKind values.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "constructions.hpp"
#include "document.hpp"
#include "ideals.hpp"
#include "semibrace.hpp"
#include "structure_monoid.hpp"
#include "ybe.hpp"

namespace semibrace {
namespace cli {

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io, "IoError", "cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error(ErrorKind::io, "IoError", "cannot write '" + path + "'");
  }
}

inline void emit(std::string const& path, std::string const& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline LeftSemiBrace load_semibrace(std::string const& path) {
  return to_semibrace(parse_document(read_file(path))).value();
}

inline std::string set_string(SubsetMask const& s) { return format_elems(s.members()); }

inline std::string tuple_string(Triple const& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

inline std::vector<Elem> parse_element_list(std::string const& text, std::size_t n) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string       item;
  while (std::getline(ss, item, ',')) {
    auto const first = item.find_first_not_of(' ');
    auto const last  = item.find_last_not_of(' ');
    if (first == std::string::npos) {
      throw Error(ErrorKind::validation, "SchemaError", "empty entry in element list");
    }
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long   v    = -1;
    try {
      v = std::stoll(item, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != item.size()) {
      throw Error(ErrorKind::validation, "SchemaError", "'" + item + "' is not an element index");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::validation, "RangeError",
                  "element " + item + " outside [0, " + std::to_string(n) + ")");
    }
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

// ---- subcommands ----------------------------------------------------------

inline int cmd_verify(std::string const& path, std::ostream& out) {
  auto const doc = parse_document(read_file(path));
  auto const sb  = to_semibrace(doc);
  if (!sb) {
    out << "valid: false\n";
    out << "violation: " << sb.failure().to_string() << '\n';
    return static_cast<int>(ErrorKind::validation);
  }
  auto const& B = sb.value();
  out << "valid: true\n";
  out << "size: " << B.size() << '\n';
  out << "identity: " << B.one() << '\n';
  return 0;
}

inline void print_rees(std::ostream& out, CornerData const& cd) {
  auto const& rs = cd.rees;
  out << "rees: group order " << rs.group.size() << ", |I| = " << rs.rows
      << ", |J| = " << rs.cols << ", normalized " << flag(rs.normalized) << '\n';
  out << "rees_coordinates:\n";
  for (Elem x = 0; x < rs.coords.size(); ++x) {
    auto const c = rs.coords[x];
    out << "  " << x << " = (" << c.g + 1 << ',' << c.i + 1 << ',' << c.j + 1 << ")\n";
  }
}

inline int cmd_analyze(std::string const& path, std::size_t ideal_cap, std::ostream& out) {
  auto const doc = parse_document(read_file(path));
  auto const B   = to_semibrace(doc).value();
  auto const cd  = corners(B);
  auto const ah  = is_rho_antihomomorphism(B);

  out << "name: " << doc.name << '\n';
  out << "size: " << B.size() << '\n';
  out << "identity: " << B.one() << '\n';
  out << "skew_brace: " << flag(is_skew_brace(B)) << '\n';
  out << "rho_antihom: " << flag(ah.holds) << '\n';
  if (ah.witness) {
    out << "rho_antihom_witness: " << tuple_string(*ah.witness) << '\n';
  }
  out << "idempotents: " << cd.idempotents_B.count() << '\n';
  out << "idempotent_set: " << set_string(cd.idempotents_B) << '\n';
  out << "idempotents_circ_closed: " << flag(is_circ_subgroup(B, cd.idempotents_B)) << '\n';
  out << "K: " << cd.K.count() << ' ' << set_string(cd.K) << '\n';
  out << "R: " << cd.R.count() << ' ' << set_string(cd.R) << '\n';
  out << "G: " << cd.G.count() << ' ' << set_string(cd.G) << '\n';
  out << "idempotents_K: " << set_string(cd.idempotents_K) << '\n';
  out << "idempotents_R: " << set_string(cd.idempotents_R) << '\n';
  print_rees(out, cd);
  out << "socle: " << set_string(socle(B)) << '\n';

  if (!ah.holds) {
    out << "decomposition: skipped (rho is not an anti-homomorphism)\n";
    out << "ideals: skipped (rho is not an anti-homomorphism)\n";
    return 0;
  }
  auto const dec = decompose(B);
  out << "decomposition: K " << dec.K.elements.size() << " x E(R) "
      << dec.R.elements.size() << ", matched " << flag(dec.report.valid())
      << ", isomorphic " << flag(dec.isomorphism_verified) << '\n';
  out << "inner_decomposition: G " << dec.inner.G.elements.size() << " x E(K) "
      << dec.inner.E.elements.size() << ", matched " << flag(dec.inner.report.valid())
      << ", isomorphic " << flag(dec.inner.isomorphism_verified) << '\n';
  if (B.size() > ideal_cap) {
    out << "ideals: skipped (size " << B.size() << " exceeds cap " << ideal_cap << ")\n";
    return 0;
  }
  auto const ideals = all_ideals(B, ideal_cap);
  out << "ideals: " << ideals.size() << '\n';
  for (auto const& I : ideals) {
    out << "  " << set_string(I) << '\n';
  }
  return 0;
}

struct SolveOptions {
  bool        check_ybe  = false;
  bool        powers     = false;
  bool        degeneracy = false;
  bool        force      = false;
  std::string export_path;
};

inline int cmd_solve(std::string const& path, SolveOptions const& o, std::ostream& out) {
  auto const B = load_semibrace(path);
  auto const s = solution_from_semibrace(B, o.force);
  std::ostringstream table;
  write_pair_table(table, s);
  if (o.export_path.empty()) {
    out << table.str();
  } else {
    write_file(o.export_path, table.str());
  }
  out << "provenance: " << s.provenance() << '\n';
  if (o.check_ybe) {
    auto const rep = verify_ybe(s);
    out << "ybe: " << (rep.holds ? "holds" : "fails");
    if (rep.witness) {
      out << " at " << tuple_string(*rep.witness);
    }
    out << '\n';
  }
  if (o.powers) {
    auto const p = power_properties(s);
    out << "bijective: " << flag(p.bijective) << '\n';
    out << "involutive: " << flag(p.involutive) << '\n';
    out << "r2_equals_r: " << flag(p.idempotent_r2) << '\n';
    out << "r3_equals_r: " << flag(p.cubic_r3) << '\n';
  }
  if (o.degeneracy) {
    auto const d = degeneracy_report(s);
    out << "left_nondegenerate: " << flag(d.left_nondegenerate);
    if (d.left_witness) {
      out << " (fails at " << *d.left_witness << ')';
    }
    out << '\n';
    out << "right_nondegenerate: " << flag(d.right_nondegenerate);
    if (d.right_witness) {
      out << " (fails at " << *d.right_witness << ')';
    }
    out << '\n';
  }
  return 0;
}

inline int cmd_growth(std::string const& path,
                      std::size_t        max_degree,
                      std::string const& csv,
                      std::size_t        word_cap,
                      bool               force,
                      std::ostream&      out) {
  auto const B   = load_semibrace(path);
  auto const s   = solution_from_semibrace(B, force);
  auto const rep = growth_series(presentation(s), max_degree, {word_cap, Traversal::forward});
  out << "degree count cumulative\n";
  for (std::size_t d = 0; d < rep.per_degree.size(); ++d) {
    out << d << ' ' << rep.per_degree[d] << ' ' << rep.cumulative[d] << '\n';
  }
  out << std::fixed << std::setprecision(4);
  if (rep.gk_estimate) {
    out << "gk_estimate: " << *rep.gk_estimate << '\n';
    out << "cumulative_doubling: " << *rep.cumulative_doubling << '\n';
  } else {
    out << "gk_estimate: n/a\n";
  }
  out << "method: " << rep.method << '\n';
  if (!csv.empty()) {
    std::ostringstream os;
    write_growth_csv(os, rep);
    write_file(csv, os.str());
  }
  return 0;
}

inline int cmd_enumerate(std::string const& path,
                         std::size_t        cap,
                         bool               classes_only,
                         std::string const& output,
                         std::ostream&      out) {
  auto const doc  = parse_document(read_file(path), false);
  auto const all  = enumerate_circ(OpTable::from_rows(doc.dot), cap);
  std::vector<std::size_t> picks;
  if (classes_only) {
    picks = isomorphism_class_representatives(all);
  } else {
    for (std::size_t k = 0; k < all.size(); ++k) {
      picks.push_back(k);
    }
  }
  std::string text = "[\n";
  for (std::size_t k = 0; k < picks.size(); ++k) {
    auto d = to_document(all[picks[k]], doc.name + "-circ-" + std::to_string(picks[k]),
                         doc.labels);
    text += serialize(d);
    if (k + 1 < picks.size()) {
      text.back() = ',';
      text += '\n';
    }
  }
  text += "]\n";
  emit(output, text, out);
  return 0;
}

inline int cmd_quotient(std::string const& path,
                        std::string const& ideal,
                        std::string const& output,
                        std::ostream&      out) {
  auto const doc = parse_document(read_file(path));
  auto const B   = to_semibrace(doc).value();
  auto const I   = SubsetMask(B.size(), parse_element_list(ideal, B.size()));
  auto const q   = quotient(B, I);
  emit(output, serialize(to_document(q.brace, doc.name + "/" + set_string(I))), out);
  return 0;
}

inline ZeroSide parse_side(std::string const& s) {
  if (s == "l" || s == "left") {
    return ZeroSide::left;
  }
  if (s == "r" || s == "right") {
    return ZeroSide::right;
  }
  throw Error(ErrorKind::validation, "SchemaError", "side must be 'l' or 'r'");
}

// ---- dispatch -------------------------------------------------------------

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite left semi-braces: verification, analysis and Yang-Baxter solutions",
               "semibrace"};
  app.require_subcommand(1);

  std::string file, output;

  auto* verify = app.add_subcommand("verify", "check that a document is a left semi-brace");
  verify->add_option("file", file, "semi-brace document")->required();

  std::size_t ideal_cap = kIdealCap;
  auto*       analyze   = app.add_subcommand("analyze", "corners, idempotents, socle, ideals");
  analyze->add_option("file", file, "semi-brace document")->required();
  analyze->add_option("--ideal-cap", ideal_cap, "largest size for ideal enumeration")
      ->capture_default_str();

  SolveOptions so;
  auto*        solve = app.add_subcommand("solve", "tabulate r(x,y) = (lambda_x(y), rho_y(x))");
  solve->add_option("file", file, "semi-brace document")->required();
  solve->add_flag("--check-ybe", so.check_ybe, "verify the braid relation");
  solve->add_flag("--powers", so.powers, "report r^2 and r^3 laws");
  solve->add_flag("--degeneracy", so.degeneracy, "report left/right non-degeneracy");
  solve->add_flag("--force", so.force, "tabulate even if rho is not an anti-homomorphism");
  solve->add_option("--export", so.export_path, "write the pair table here");

  std::size_t max_degree = 0, word_cap = kDefaultWordCap;
  std::string csv;
  bool        growth_force = false;
  auto*       growth = app.add_subcommand("growth", "degree counts of the structure monoid");
  growth->add_option("file", file, "semi-brace document")->required();
  growth->add_option("--max-degree", max_degree, "largest word length")->required();
  growth->add_option("--csv", csv, "write degree,count,cumulative rows here");
  growth->add_option("--word-cap", word_cap, "largest number of words per degree")
      ->capture_default_str();
  growth->add_flag("--force", growth_force, "allow rho not anti-homomorphic");

  auto* construct = app.add_subcommand("construct", "build a semi-brace document");
  construct->require_subcommand(1);
  construct->add_option("-o,--output", output, "output path (default stdout)");
  construct->fallthrough();
  auto* c6 = construct->add_subcommand("c6", "the order 6 example");
  std::string group_name, side = "r";
  auto*       zero = construct->add_subcommand("zero", "left or right zero semigroup with a group");
  zero->add_option("--group", group_name, "group name, e.g. C3, S3")->required();
  zero->add_option("--side", side, "l or r")->capture_default_str();
  std::string g_file, i_name, j_name;
  std::size_t size_cap = kDefaultSizeCap;
  auto*       product = construct->add_subcommand("product", "M(G, I, J) with component-wise o");
  product->add_option("--g", g_file, "skew brace document for G")->required();
  product->add_option("--i", i_name, "group on the row index set")->required();
  product->add_option("--j", j_name, "group on the column index set")->required();
  product->add_option("--size-cap", size_cap, "largest carrier")->capture_default_str();
  std::string data_file;
  auto*       matched = construct->add_subcommand("matched", "matched product from a data file");
  matched->add_option("datafile", data_file, "JSON with B, S, delta, sigma")->required();
  for (auto* sub : {c6, zero, product, matched}) {
    sub->fallthrough();
  }

  std::size_t enum_cap     = kEnumerateCap;
  bool        classes_only = false;
  auto*       enumerate = app.add_subcommand("enumerate", "all circ tables compatible with a dot");
  enumerate->add_option("--dot", file, "document with at least name, size, dot")->required();
  enumerate->add_option("--cap", enum_cap, "largest carrier")->capture_default_str();
  enumerate->add_flag("--classes", classes_only, "one structure per isomorphism class");
  enumerate->add_option("-o,--output", output, "output path (default stdout)");

  std::string ideal;
  auto*       quot = app.add_subcommand("quotient", "quotient by an ideal");
  quot->add_option("file", file, "semi-brace document")->required();
  quot->add_option("--ideal", ideal, "comma-separated element list")->required();
  quot->add_option("-o,--output", output, "output path (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::validation);
  }

  if (verify->parsed()) {
    return cmd_verify(file, out);
  }
  if (analyze->parsed()) {
    return cmd_analyze(file, ideal_cap, out);
  }
  if (solve->parsed()) {
    return cmd_solve(file, so, out);
  }
  if (growth->parsed()) {
    return cmd_growth(file, max_degree, csv, word_cap, growth_force, out);
  }
  if (construct->parsed()) {
    LeftSemiBrace B;
    std::string   name;
    if (c6->parsed()) {
      B    = example_c6();
      name = "c6";
    } else if (zero->parsed()) {
      auto const s = parse_side(side);
      B    = zero_semibrace(group_by_name(group_name), s);
      name = std::string(s == ZeroSide::left ? "left" : "right") + "-zero-" + group_name;
    } else if (product->parsed()) {
      auto const G = load_semibrace(g_file);
      B    = product_semibrace(G, group_by_name(i_name), group_by_name(j_name), size_cap);
      name = "product-" + i_name + "-" + j_name;
    } else {
      B    = matched_product(parse_matched_data(read_file(data_file)));
      name = "matched";
    }
    emit(output, serialize(to_document(B, name)), out);
    return 0;
  }
  if (enumerate->parsed()) {
    return cmd_enumerate(file, enum_cap, classes_only, output, out);
  }
  return cmd_quotient(file, ideal, output, out);
}

}  // namespace cli

/// Runs one command. `args` excludes the program name.
inline int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  try {
    return cli::dispatch(args, out, err);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (std::bad_alloc const&) {
    err << "error: CapExceeded: out of memory\n";
    return static_cast<int>(ErrorKind::cap);
  }
}

}  // namespace semibrace
