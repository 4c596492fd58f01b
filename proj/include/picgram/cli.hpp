#pragma once

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "picgram/oracle.hpp"
#include "picgram/parser.hpp"
#include "picgram/pipeline.hpp"

namespace picgram {

namespace detail {

/// One layer of a derivation: every pixel labeled by the deepest node of
/// depth <= `depth` covering it, with the owning node's id for outlining.
inline void paint(const DerivationNode& n, std::size_t depth, std::size_t& next_id, Picture& labels,
                  std::vector<std::size_t>& owner, std::size_t cols, bool& deeper) {
  const std::size_t id = next_id++;
  for (std::size_t i = n.domain.top; i <= n.domain.bottom; ++i)
    for (std::size_t j = n.domain.left; j <= n.domain.right; ++j) {
      labels(i, j) = n.terminal ? terminal(*n.terminal) : nonterminal(n.nonterminal);
      owner[(i - 1) * cols + (j - 1)] = id;
    }
  if (depth == 0) {
    if (!n.children.empty()) deeper = true;
    return;
  }
  for (const DerivationNode& c : n.children) paint(c, depth - 1, next_id, labels, owner, cols, deeper);
}

/// Picture of labels with block boundaries drawn as `|` and `-`.
inline std::string outline(const Picture& labels, const std::vector<std::size_t>& owner, const SymbolNamer& name) {
  const std::size_t m = labels.rows(), n = labels.cols();
  std::size_t w = 1;
  for (Symbol s : labels.cells()) w = std::max(w, name(s).size());
  auto own = [&](std::size_t i, std::size_t j) { return owner[(i - 1) * n + (j - 1)]; };
  std::ostringstream out;
  for (std::size_t i = 1; i <= m; ++i) {
    if (i > 1) {
      for (std::size_t j = 1; j <= n; ++j) {
        const bool cut = own(i - 1, j) != own(i, j);
        out << std::string(w, cut ? '-' : ' ');
        if (j < n) {
          const bool any = cut || own(i - 1, j) != own(i - 1, j + 1) || own(i, j) != own(i, j + 1) ||
                           own(i - 1, j + 1) != own(i, j + 1);
          out << (any ? '+' : ' ');
        }
      }
      out << "\n";
    }
    for (std::size_t j = 1; j <= n; ++j) {
      out << std::left << std::setw(static_cast<int>(w)) << name(labels(i, j));
      if (j < n) out << (own(i, j) != own(i, j + 1) ? '|' : ' ');
    }
    out << "\n";
  }
  return out.str();
}

inline void render_tree(const DerivationNode& n, const TileGrammar& g, std::size_t indent, std::ostream& out) {
  out << std::string(indent, ' ') << g.nonterminals[n.nonterminal] << " " << to_string(n.domain);
  if (n.terminal) out << " -> '" << *n.terminal << "'";
  out << "\n";
  for (const DerivationNode& c : n.children) render_tree(c, g, indent + 2, out);
}

}  // namespace detail

/// Derivation steps as successively refined outlined partitions, then the tree.
inline std::string render_derivation(const DerivationNode& root, const TileGrammar& g) {
  std::ostringstream out;
  const std::size_t rows = root.domain.rows(), cols = root.domain.cols();
  Picture start(rows, cols, nonterminal(root.nonterminal));
  std::vector<std::size_t> owner(rows * cols, 0);
  out << detail::outline(start, owner, g.namer()) << "\n";
  for (std::size_t depth = 1;; ++depth) {
    Picture labels = start;
    std::size_t id = 0;
    bool deeper = false;
    detail::paint(root, depth, id, labels, owner, cols, deeper);
    out << detail::outline(labels, owner, g.namer()) << "\n";
    if (!deeper) break;
  }
  detail::render_tree(root, g, 0, out);
  return out.str();
}

namespace detail {

inline void print_report(const TileGrammar& g, const ValidationReport& report, std::ostream& out) {
  for (const RuleFinding& f : report.findings) {
    out << "rule " << f.rule << " (" << g.nonterminals[rule_lhs(g.rules[f.rule])] << "): ";
    if (f.fixed) {
      out << "fixed size\n";
      continue;
    }
    out << (f.simple_regional ? "simple regional" : "not simple regional");
    if (f.full_chain) out << ", renaming chain rule";
    else if (f.chain) out << ", restricted chain rule";
    if (f.decomposed) out << ", decomposed into " << f.replacement.size() << " simple regional rules";
    if (f.failed) out << ", no regional decomposition";
    out << "\n";
  }
  out << (report.rtg_valid ? "verdict: regional tile grammar\n" : "verdict: tile grammar, not regional\n");
}

inline void print_relation(const char* name, const Relation& rel, const SymbolNamer& namer, std::ostream& out) {
  out << "  " << name << ":";
  for (const auto& [x, y] : rel) out << " (" << namer(x) << "," << namer(y) << ")";
  out << "\n";
}

inline void analyze(const TileSet& theta, const SymbolNamer& namer, SizeBound bound, std::uint64_t budget,
                    std::ostream& out) {
  const AdjacencyRelations rel = adjacency_relations(theta);
  out << "  tiles: " << theta.size() << "\n";
  print_relation("H", rel.H, namer, out);
  print_relation("V", rel.V, namer, out);
  auto cycle_text = [&](const Relation& r) {
    const auto c = find_cycle(r);
    if (c.empty()) return std::string("acyclic");
    std::string s = "cycle";
    for (const auto& [x, y] : c) s += " " + namer(x) + "->" + namer(y);
    return s;
  };
  out << "  A: " << cycle_text(rel.A) << "\n";
  out << "  A': " << cycle_text(rel.A_prime) << "\n";
  out << "  concave tiles: " << (has_concave_tile(theta) ? "yes" : "no") << "\n";
  out << "  simple regional: " << (is_simple_regional(theta) ? "yes" : "no") << "\n";
  if (is_simple_regional(theta)) return;
  Budget b(budget);
  try {
    const bool regional = is_regional_up_to(theta, bound, &b);
    out << "  regional up to (" << bound.max_rows << "," << bound.max_cols << "): " << (regional ? "yes" : "no") << "\n";
    if (!regional) return;
  } catch (const Error& e) {
    if (e.code() != errc::budget_exceeded) throw;
    out << "  regional up to (" << bound.max_rows << "," << bound.max_cols << "): indeterminate\n";
    return;
  }
  const auto parts = decompose_regional(theta, bound);
  if (!parts) {
    out << "  decomposition: none\n";
    return;
  }
  out << "  decomposition: " << parts->size() << " simple regional sets\n";
  for (std::size_t i = 0; i < parts->size(); ++i) {
    out << "    set " << i + 1 << ":";
    for (const Tile& t : (*parts)[i]) out << " [" << to_string(t, namer) << "]";
    out << "\n";
  }
}

}  // namespace detail

/// Command-line entry point. Exit status: 0 success or member, 1 non-member
/// or negative verdict, 2 error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regional tile grammar toolkit", "picgram"};
  app.require_subcommand(1);

  std::string grammar_path, picture_path, in_path, out_path, to_format;
  bool show_derivation = false, show_matrix = false, with_oracle = false;
  std::size_t max_rows = 3, max_cols = 3, region_rows = 4, region_cols = 4;
  std::uint64_t budget = Oracle::kDefaultBudget;

  auto* validate = app.add_subcommand("validate", "Check a grammar and report regionality");
  validate->add_option("grammar", grammar_path, "Grammar file")->required();

  auto* parse_cmd = app.add_subcommand("parse", "Decide membership of a picture");
  parse_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  parse_cmd->add_option("picture", picture_path, "Picture file")->required();
  parse_cmd->add_flag("--derivation", show_derivation, "Print a derivation of the picture");
  parse_cmd->add_flag("--matrix", show_matrix, "Print the recognition matrix");
  parse_cmd->add_flag("--oracle", with_oracle, "Check the verdict against the brute-force oracle");
  parse_cmd->add_option("--budget", budget, "Node budget for the oracle");

  auto* generate_cmd = app.add_subcommand("generate", "List the pictures of the language up to a size");
  generate_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  generate_cmd->add_option("--max-rows", max_rows, "Largest row count")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--max-cols", max_cols, "Largest column count")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--budget", budget, "Node budget for the enumeration");

  auto* convert = app.add_subcommand("convert", "Translate a grammar into another formalism");
  convert->add_option("--to", to_format, "Target format")->required()->check(CLI::IsMember({"tg", "rtg", "kolam"}));
  convert->add_option("input", in_path, "Source grammar file")->required();
  convert->add_option("output", out_path, "Destination file (- for standard output)")->required();

  auto* analyze = app.add_subcommand("analyze-tileset", "Adjacency relations, cycles and decompositions");
  analyze->add_option("file", grammar_path, "Tiling system or tile grammar file")->required();
  analyze->add_option("--max-rows", region_rows, "Row bound of the regionality check")->check(CLI::PositiveNumber);
  analyze->add_option("--max-cols", region_cols, "Column bound of the regionality check")->check(CLI::PositiveNumber);
  analyze->add_option("--budget", budget, "Node budget for the regionality check");

  std::vector<std::string> argv_store{"picgram"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      const LoadedGrammar loaded = load_grammar(grammar_path);
      const TileGrammar g = to_tile_grammar(loaded);
      if (loaded.format != Format::rtg && loaded.format != Format::tg)
        out << "translated from " << to_string(loaded.format) << " to a tile grammar\n";
      const auto [validated, report] = validate_grammar(g);
      detail::print_report(g, report, out);
      return report.rtg_valid ? 0 : 1;
    }

    if (parse_cmd->parsed()) {
      const TileGrammar g = to_tile_grammar(load_grammar(grammar_path));
      const Picture p = load_picture(picture_path);
      const Parser parser(g);
      for (const auto& n : parser.notices()) out << "note: " << n << "\n";
      const RecognitionMatrix M = parser.parse(p);
      const bool member = parser.accepts(M);
      out << (member ? "member" : "not a member") << "\n";
      if (show_matrix) {
        for (std::size_t i = 1; i <= p.rows(); ++i)
          for (std::size_t j = 1; j <= p.cols(); ++j)
            for (std::size_t k = i; k <= p.rows(); ++k)
              for (std::size_t l = j; l <= p.cols(); ++l) {
                const auto e = M.entries(Subdomain{i, j, k, l});
                if (e.empty()) continue;
                out << to_string(Subdomain{i, j, k, l}) << ":";
                for (std::size_t nt : e) out << " " << parser.grammar().nonterminals[nt];
                out << "\n";
              }
      }
      if (show_derivation && member) out << render_derivation(*extract_derivation(parser, p, M), parser.grammar());
      if (with_oracle) {
        const Verdict v = derive_membership_tg(g, p, budget);
        out << "oracle: " << to_string(v) << "\n";
        if (v != Verdict::indeterminate && (v == Verdict::yes) != member) {
          err << "oracle disagrees with the parser\n";
          return 2;
        }
      }
      return member ? 0 : 1;
    }

    if (generate_cmd->parsed()) {
      const auto pictures = generate(load_grammar(grammar_path), {max_rows, max_cols}, budget);
      bool first = true;
      for (const Picture& p : pictures) {
        if (!first) out << "\n";
        first = false;
        out << to_text(p) << "\n";
      }
      return 0;
    }

    if (convert->parsed()) {
      const LoadedGrammar loaded = load_grammar(in_path);
      std::string text;
      if (to_format == "kolam") {
        text = write_kolam(kolam_to_cnf(to_kolam(loaded)));
      } else {
        const TileGrammar g = to_tile_grammar(loaded);
        if (to_format == "rtg") {
          auto [validated, report] = validate_grammar(g);
          if (!report.rtg_valid) {
            err << "result is not a regional tile grammar; use --to tg\n";
            return 2;
          }
          text = write_tile_grammar(validated, Format::rtg);
        } else {
          text = write_tile_grammar(g, Format::tg);
        }
      }
      if (out_path == "-") {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) throw Error(errc::syntax, "cannot write " + out_path);
      }
      return 0;
    }

    if (analyze->parsed()) {
      const LoadedGrammar loaded = load_grammar(grammar_path);
      const SizeBound bound{region_rows, region_cols};
      if (loaded.format == Format::ts) {
        const auto& t = std::get<TilingSystem>(loaded.grammar);
        out << "theta\n";
        detail::analyze(t.theta, t.namer(), bound, budget, out);
        return 0;
      }
      const TileGrammar g = to_tile_grammar(loaded);
      for (std::size_t k = 0; k < g.rules.size(); ++k) {
        const auto* v = std::get_if<VariableRule>(&g.rules[k]);
        if (!v) continue;
        out << "rule " << k << " (" << g.nonterminals[v->lhs] << ")\n";
        detail::analyze(v->tiles, g.namer(), bound, budget, out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace picgram
