#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dlat/enumerate.hpp"
#include "dlat/errors.hpp"
#include "dlat/hibi.hpp"
#include "dlat/invariants.hpp"
#include "dlat/io.hpp"
#include "dlat/lattice.hpp"
#include "dlat/structure.hpp"

namespace dlat::cli {

// exit codes: 0 ok, 1 usage, 2 invalid input, 3 proved-theorem violation
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitTheorem = 3;

namespace detail {

/// Sorted `key = value` lines; the one report format every command shares.
inline std::string render_report(std::vector<std::pair<std::string, std::string>> kv) {
  std::sort(kv.begin(), kv.end());
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

inline std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += ' ';
    s += n;
  }
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << bytes;
}

struct LoadedLattice {
  DistLattice lattice;
  int redundant_covers = 0;
};

inline LoadedLattice load_lattice(const std::string& path) {
  InputDocument doc = parse_input(read_file(path));
  if (doc.kind != DocKind::lattice)
    throw Error("expected a `type lattice` file: " + path);
  BuiltPoset b = build_from_document(doc);
  return {validate_distributive_lattice(std::move(b.poset)),
          static_cast<int>(b.redundant_covers.size())};
}

inline std::string bool_str(bool v) { return v ? "true" : "false"; }

}  // namespace detail

inline int run_command(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"finite distributive lattice toolkit"};
  app.name("dlat");
  std::int64_t max_elements = kDefaultDownsetCap;
  app.add_option("--max-elements", max_elements,
                 "cap on lattice size built from a poset");
  app.require_subcommand(1);

  std::string file, at_name, out_path, tsv_path;
  int max_size = 0, jobs = 1, poset_cap = kDefaultPosetCap;

  CLI::App* check = app.add_subcommand("check", "validate an input file");
  check->add_option("file", file)->required();
  CLI::App* analyze = app.add_subcommand("analyze", "invariants, bounds, and CI verdict");
  analyze->add_option("file", file)->required();
  CLI::App* decompose = app.add_subcommand("decompose", "thick factors and their classes");
  decompose->add_option("file", file)->required();
  CLI::App* prune_cmd = app.add_subcommand("prune", "emit the pruned lattice");
  prune_cmd->add_option("file", file)->required();
  prune_cmd->add_option("--at", at_name, "maximal nonzero join irreducible to prune at");
  CLI::App* ideal = app.add_subcommand("ideal", "emit the generators of I(L)");
  ideal->add_option("file", file)->required();
  ideal->add_option("-o,--output", out_path, "write to file instead of stdout");
  CLI::App* birkhoff = app.add_subcommand("birkhoff", "lattice to poset, or poset to lattice");
  birkhoff->add_option("file", file)->required();
  CLI::App* enumerate = app.add_subcommand("enumerate", "verify all lattices up to a poset size");
  enumerate->add_option("--max", max_size, "largest Birkhoff-dual size")->required();
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--tsv", tsv_path, "write per-lattice summary here");
  enumerate->add_option("--cap", poset_cap, "raise the poset size cap");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) {
      InputDocument doc = parse_input(detail::read_file(file));
      BuiltPoset b = build_from_document(doc);
      std::vector<std::pair<std::string, std::string>> kv = {
          {"redundant_covers", std::to_string(b.redundant_covers.size())},
          {"size", std::to_string(b.poset.size())},
          {"status", "ok"},
      };
      if (doc.kind == DocKind::lattice) {
        DistLattice L = validate_distributive_lattice(std::move(b.poset));
        kv.emplace_back("type", "lattice");
        kv.emplace_back("e", std::to_string(L.edge_count()));
        kv.emplace_back("j_size", std::to_string(L.j_size()));
      } else {
        kv.emplace_back("type", "poset");
        kv.emplace_back("covers", std::to_string(b.poset.covers().size()));
      }
      out << detail::render_report(std::move(kv));
    } else if (*analyze) {
      auto [L, redundant] = detail::load_lattice(file);
      InvariantRecord r = bounds_report(L);
      CIVerdict v = complete_intersection_verdict(L);
      TheoremReport::Conjecture conj =
          !r.thick ? TheoremReport::Conjecture::not_applicable
          : r.n >= r.conjecture_rhs ? TheoremReport::Conjecture::holds
                                    : TheoremReport::Conjecture::violated;
      std::string fvec;
      for (int f : r.f_vector) fvec += (fvec.empty() ? "" : " ") + std::to_string(f);
      out << detail::render_report({
          {"codim", std::to_string(v.codim)},
          {"complete_intersection", detail::bool_str(v.is_complete_intersection)},
          {"conjecture", to_string(conj)},
          {"conjecture_rhs", std::to_string(r.conjecture_rhs)},
          {"dim", std::to_string(v.variety_dim)},
          {"dim_proper", std::to_string(v.variety_dim - 1)},
          {"e", std::to_string(r.e)},
          {"elements", detail::join_names(L.order().names())},
          {"f_sum", std::to_string(r.f_sum)},
          {"f_vector", fvec},
          {"generators", std::to_string(v.generator_count)},
          {"j_size", std::to_string(r.j_size)},
          {"lower_edge", std::to_string(r.lower_edge)},
          {"lower_rank", std::to_string(r.lower_rank)},
          {"n", std::to_string(r.n)},
          {"size", std::to_string(r.size)},
          {"thick", detail::bool_str(r.thick)},
          {"upper", std::to_string(r.upper)},
      });
    } else if (*decompose) {
      auto [L, redundant] = detail::load_lattice(file);
      Decomposition d = decompose_thick(L);
      ShapeClassification shape = classify_ci_shape(L);
      std::vector<std::pair<std::string, std::string>> kv = {
          {"equality_case", detail::bool_str(shape.is_equality_case)},
          {"factors", std::to_string(d.factors.size())},
      };
      if (!d.cut_elements.empty()) {
        std::vector<std::string> cut_names;
        for (int c : d.cut_elements) cut_names.push_back(L.name(c));
        kv.emplace_back("cuts", detail::join_names(cut_names));
      }
      for (std::size_t k = 0; k < d.factors.size(); ++k) {
        std::string prefix = "factor[" + std::to_string(k) + "]";
        kv.emplace_back(prefix + ".class", to_string(shape.factor_classes[k]));
        std::vector<std::string> elems;
        for (int v : d.embeddings[k]) elems.push_back(L.name(v));
        kv.emplace_back(prefix + ".elements", detail::join_names(elems));
      }
      out << detail::render_report(std::move(kv));
    } else if (*prune_cmd) {
      auto [L, redundant] = detail::load_lattice(file);
      int alpha = -1;
      if (!at_name.empty()) {
        alpha = L.order().index_of(at_name);
        if (alpha < 0) throw Error("no element named " + at_name);
      } else {
        // default: the maximal nonzero join irreducible with smallest index
        for (int a : L.join_irreducibles()) {
          if (a == L.bottom()) continue;
          bool maximal = true;
          for (int b : L.join_irreducibles())
            if (b != L.bottom() && b != a && L.leq(a, b)) maximal = false;
          if (maximal) {
            alpha = a;
            break;
          }
        }
        if (alpha < 0) throw Error("lattice has no nonzero join irreducible");
      }
      out << render_document(document_from_lattice(prune(L, alpha)));
    } else if (*ideal) {
      auto [L, redundant] = detail::load_lattice(file);
      std::string text = render_ideal(L, ideal_generators(L));
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
    } else if (*birkhoff) {
      InputDocument doc = parse_input(detail::read_file(file));
      BuiltPoset b = build_from_document(doc);
      if (doc.kind == DocKind::lattice) {
        DistLattice L = validate_distributive_lattice(std::move(b.poset));
        out << render_document(document_from_poset(birkhoff_poset(L), DocKind::poset));
      } else {
        DistLattice L = ideal_lattice(b.poset, max_elements);
        out << render_document(document_from_lattice(L));
      }
    } else if (*enumerate) {
      ScanReport report = conjecture_scan(max_size, jobs, poset_cap, max_elements);
      if (!tsv_path.empty()) detail::write_file(tsv_path, render_scan_tsv(report));
      out << render_scan_report(report);
      if (!report.failures.empty()) return kExitTheorem;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    out << detail::render_report(
        {{"error", "parse"}, {"detail", e.what()}, {"status", "invalid"}});
    return kExitInvalid;
  } catch (const CycleDetected& e) {
    out << detail::render_report({{"error", "cycle"},
                                  {"witness", detail::join_names(e.witness)},
                                  {"status", "invalid"}});
    return kExitInvalid;
  } catch (const DuplicateName& e) {
    out << detail::render_report(
        {{"error", "duplicate_name"}, {"witness", e.name}, {"status", "invalid"}});
    return kExitInvalid;
  } catch (const NotALattice& e) {
    out << detail::render_report({{"error", "not_a_lattice"},
                                  {"witness", e.a + " " + e.b},
                                  {"status", "invalid"}});
    return kExitInvalid;
  } catch (const NotDistributive& e) {
    out << detail::render_report({{"error", "not_distributive"},
                                  {"witness", e.a + " " + e.b + " " + e.c},
                                  {"status", "invalid"}});
    return kExitInvalid;
  } catch (const NotMaximalJoinIrreducible& e) {
    out << detail::render_report({{"error", "not_maximal_join_irreducible"},
                                  {"detail", e.what()},
                                  {"status", "invalid"}});
    return kExitInvalid;
  } catch (const SizeLimitExceeded& e) {
    out << detail::render_report(
        {{"error", "size_limit"}, {"detail", e.what()}, {"status", "invalid"}});
    return kExitInvalid;
  } catch (const TheoremViolation& e) {
    out << detail::render_report(
        {{"error", "theorem_violation"}, {"detail", e.what()}, {"status", "bug"}});
    return kExitTheorem;
  } catch (const Error& e) {
    out << detail::render_report(
        {{"error", "invalid_input"}, {"detail", e.what()}, {"status", "invalid"}});
    return kExitInvalid;
  }
}

}  // namespace dlat::cli
