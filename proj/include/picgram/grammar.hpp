#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "picgram/tileset_analysis.hpp"

namespace picgram {

/// A -> t for a single terminal pixel.
struct FixedRule {
  std::size_t lhs = 0;
  char terminal = 'a';

  friend auto operator<=>(const FixedRule&, const FixedRule&) = default;
};

/// A -> omega. `exemplars` are the bordered pictures the tile set was read
/// from, kept only so the rule can be written back the same way.
struct VariableRule {
  std::size_t lhs = 0;
  TileSet tiles;
  std::vector<Picture> exemplars;

  friend bool operator==(const VariableRule& a, const VariableRule& b) { return a.lhs == b.lhs && a.tiles == b.tiles; }
  friend auto operator<=>(const VariableRule& a, const VariableRule& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.tiles <=> b.tiles;
  }
};

using Rule = std::variant<FixedRule, VariableRule>;

inline std::size_t rule_lhs(const Rule& r) {
  return std::visit([](const auto& x) { return x.lhs; }, r);
}

/// Tile grammar in nonterminal normal form. Nonterminal i is Symbol nonterminal(i).
struct TileGrammar {
  std::vector<char> terminals;
  std::vector<std::string> nonterminals;
  std::size_t start = 0;
  std::vector<Rule> rules;

  std::optional<std::size_t> find_nonterminal(const std::string& name) const {
    auto it = std::find(nonterminals.begin(), nonterminals.end(), name);
    if (it == nonterminals.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nonterminals.begin());
  }

  std::size_t nonterminal_id(const std::string& name) {
    if (auto i = find_nonterminal(name)) return *i;
    nonterminals.push_back(name);
    return nonterminals.size() - 1;
  }

  void add_terminal(char c) {
    auto it = std::lower_bound(terminals.begin(), terminals.end(), c);
    if (it == terminals.end() || *it != c) terminals.insert(it, c);
  }

  bool has_terminal(char c) const { return std::binary_search(terminals.begin(), terminals.end(), c); }

  std::string symbol_name(Symbol s) const {
    if (is_nonterminal(s) && nonterminal_index(s) < nonterminals.size()) return nonterminals[nonterminal_index(s)];
    return default_symbol_name(s);
  }

  SymbolNamer namer() const {
    return [this](Symbol s) { return symbol_name(s); };
  }

  friend bool operator==(const TileGrammar&, const TileGrammar&) = default;
};

/// Nonterminals mentioned by a tile set, sorted.
inline std::vector<Symbol> nonterminals_of(const TileSet& tiles) { return tiles.alphabet(); }

/// The tiles of the bordered 2x2 picture over B alone: LOC of this set is every B-picture.
inline TileSet chain_tiles(Symbol b) { return tiles_of(bordered(Picture(2, 2, b))); }

inline bool is_chain_rule(const Rule& r) {
  const auto* v = std::get_if<VariableRule>(&r);
  return v && nonterminals_of(v->tiles).size() == 1;
}

/// A chain rule whose local language is every picture over its nonterminal,
/// i.e. a plain renaming A -> B.
inline bool is_full_chain_rule(const Rule& r) {
  if (!is_chain_rule(r)) return false;
  const auto& v = std::get<VariableRule>(r);
  return chain_tiles(nonterminals_of(v.tiles).front()).is_subset_of(v.tiles);
}

/// Checks the structural invariants; throws on alphabet violations or concave tiles.
inline void check_grammar(const TileGrammar& g) {
  for (char c : g.terminals)
    if (!is_valid_terminal_char(c)) throw Error(errc::alphabet, std::string("invalid terminal '") + c + "'");
  for (const auto& name : g.nonterminals)
    if (name.empty() || name.find('#') != std::string::npos)
      throw Error(errc::alphabet, "invalid nonterminal name '" + name + "'");
  if (g.nonterminals.empty() || g.start >= g.nonterminals.size())
    throw Error(errc::alphabet, "start symbol is not a declared nonterminal");
  for (const Rule& r : g.rules) {
    if (rule_lhs(r) >= g.nonterminals.size()) throw Error(errc::alphabet, "rule for an undeclared nonterminal");
    if (const auto* f = std::get_if<FixedRule>(&r)) {
      if (!g.has_terminal(f->terminal))
        throw Error(errc::alphabet, std::string("terminal '") + f->terminal + "' is not declared");
      continue;
    }
    const auto& v = std::get<VariableRule>(r);
    for (const Tile& t : v.tiles) {
      for (Symbol s : t.cells) {
        if (is_boundary(s)) continue;
        if (!is_nonterminal(s) || nonterminal_index(s) >= g.nonterminals.size())
          throw Error(errc::alphabet, "rule for " + g.nonterminals[v.lhs] + " mentions a symbol outside N");
      }
      if (is_concave(t))
        throw Error(errc::concave_tile, "rule for " + g.nonterminals[v.lhs] + " has concave tile " +
                                            to_string(t, g.namer()));
    }
  }
}

struct RuleFinding {
  std::size_t rule = 0;  // index into the input grammar's rules
  bool fixed = false;
  bool simple_regional = true;
  bool chain = false;
  bool full_chain = false;
  bool decomposed = false;
  bool failed = false;  // not regional within the checked bound
  std::vector<TileSet> replacement;
};

struct ValidationReport {
  std::vector<RuleFinding> findings;
  bool rtg_valid = true;
};

/// Replaces every variable-size rule that is not simple regional by its
/// decomposition. Rules that cannot be decomposed are kept and make the
/// grammar RTG-invalid.
inline std::pair<TileGrammar, ValidationReport> validate_grammar(const TileGrammar& g, SizeBound bound = {4, 4}) {
  check_grammar(g);
  TileGrammar out = g;
  out.rules.clear();
  ValidationReport report;
  for (std::size_t k = 0; k < g.rules.size(); ++k) {
    const Rule& r = g.rules[k];
    RuleFinding f;
    f.rule = k;
    if (std::holds_alternative<FixedRule>(r)) {
      f.fixed = true;
      out.rules.push_back(r);
      report.findings.push_back(f);
      continue;
    }
    const auto& v = std::get<VariableRule>(r);
    f.chain = is_chain_rule(r);
    f.full_chain = is_full_chain_rule(r);
    f.simple_regional = is_simple_regional(v.tiles);
    if (f.simple_regional) {
      out.rules.push_back(r);
    } else if (auto parts = decompose_regional(v.tiles, bound)) {
      f.decomposed = true;
      f.replacement = *parts;
      for (const TileSet& part : *parts) out.rules.push_back(VariableRule{v.lhs, part, {}});
    } else {
      f.failed = true;
      report.rtg_valid = false;
      out.rules.push_back(r);
    }
    report.findings.push_back(f);
  }
  return {out, report};
}

namespace detail {

/// Over-approximates productivity: a variable rule counts once its tiles
/// over productive symbols still contain a top-left corner tile.
inline std::vector<bool> productive_nonterminals(const TileGrammar& g) {
  std::vector<bool> prod(g.nonterminals.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules) {
      const std::size_t a = rule_lhs(r);
      if (prod[a]) continue;
      bool ok = std::holds_alternative<FixedRule>(r);
      if (!ok) {
        for (const Tile& t : std::get<VariableRule>(r).tiles) {
          if (!(is_boundary(t.top_left()) && is_boundary(t.top_right()) && is_boundary(t.bottom_left()) &&
                is_nonterminal(t.bottom_right())))
            continue;
          if (prod[nonterminal_index(t.bottom_right())]) {
            ok = true;
            break;
          }
        }
      }
      if (ok) prod[a] = changed = true;
    }
  }
  return prod;
}

}  // namespace detail

/// Removes nonterminals that derive nothing or are unreachable from the start.
/// Throws degenerate_grammar when the start symbol itself derives nothing.
inline TileGrammar prune_grammar(const TileGrammar& g) {
  const std::vector<bool> prod = detail::productive_nonterminals(g);
  if (!prod[g.start])
    throw Error(errc::degenerate_grammar, "start symbol " + g.nonterminals[g.start] + " derives no picture");
  std::vector<Rule> rules;
  for (const Rule& r : g.rules) {
    if (!prod[rule_lhs(r)]) continue;
    if (const auto* v = std::get_if<VariableRule>(&r)) {
      std::vector<Tile> kept;
      for (const Tile& t : v->tiles)
        if (std::all_of(t.cells.begin(), t.cells.end(),
                        [&](Symbol s) { return is_boundary(s) || prod[nonterminal_index(s)]; }))
          kept.push_back(t);
      VariableRule nv{v->lhs, TileSet(kept), {}};
      if (nv.tiles == v->tiles) nv.exemplars = v->exemplars;
      bool corner = std::any_of(kept.begin(), kept.end(), [](const Tile& t) {
        return is_boundary(t.top_left()) && is_boundary(t.top_right()) && is_boundary(t.bottom_left()) &&
               !is_boundary(t.bottom_right());
      });
      if (corner) rules.push_back(std::move(nv));
    } else {
      rules.push_back(r);
    }
  }
  std::vector<bool> reach(g.nonterminals.size(), false);
  std::vector<std::size_t> stack{g.start};
  reach[g.start] = true;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (const Rule& r : rules) {
      if (rule_lhs(r) != a) continue;
      if (const auto* v = std::get_if<VariableRule>(&r))
        for (Symbol s : nonterminals_of(v->tiles))
          if (!reach[nonterminal_index(s)]) {
            reach[nonterminal_index(s)] = true;
            stack.push_back(nonterminal_index(s));
          }
    }
  }
  std::vector<std::size_t> renumber(g.nonterminals.size(), 0);
  TileGrammar out;
  out.terminals = g.terminals;
  for (std::size_t a = 0; a < g.nonterminals.size(); ++a)
    if (reach[a]) {
      renumber[a] = out.nonterminals.size();
      out.nonterminals.push_back(g.nonterminals[a]);
    }
  out.start = renumber[g.start];
  auto map_symbol = [&](Symbol s) { return is_boundary(s) ? s : nonterminal(renumber[nonterminal_index(s)]); };
  for (const Rule& r : rules) {
    if (!reach[rule_lhs(r)]) continue;
    if (const auto* f = std::get_if<FixedRule>(&r)) {
      out.rules.push_back(FixedRule{renumber[f->lhs], f->terminal});
      continue;
    }
    const auto& v = std::get<VariableRule>(r);
    std::vector<Tile> tiles;
    for (Tile t : v.tiles) {
      for (Symbol& s : t.cells) s = map_symbol(s);
      tiles.push_back(t);
    }
    VariableRule nv{renumber[v.lhs], TileSet(tiles), {}};
    for (Picture e : v.exemplars) {
      for (std::size_t i = 1; i <= e.rows(); ++i)
        for (std::size_t j = 1; j <= e.cols(); ++j) e(i, j) = map_symbol(e(i, j));
      nv.exemplars.push_back(std::move(e));
    }
    out.rules.push_back(std::move(nv));
  }
  return out;
}

/// Replaces renaming rules A -> B by copies of B's other rules, then prunes.
/// Chain rules restricted to some shapes of B-pictures are not renamings and stay.
inline TileGrammar eliminate_chain_rules(const TileGrammar& g) {
  const std::size_t n = g.nonterminals.size();
  std::vector<std::vector<bool>> unit(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) unit[a][a] = true;
  for (const Rule& r : g.rules)
    if (is_full_chain_rule(r))
      unit[rule_lhs(r)][nonterminal_index(nonterminals_of(std::get<VariableRule>(r).tiles).front())] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (unit[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (unit[k][b]) unit[a][b] = true;

  TileGrammar out = g;
  out.rules.clear();
  auto add = [&](const Rule& r) {
    if (std::find(out.rules.begin(), out.rules.end(), r) == out.rules.end()) out.rules.push_back(r);
  };
  for (const Rule& r : g.rules) {
    if (!is_full_chain_rule(r)) {
      add(r);
      continue;
    }
    const std::size_t a = rule_lhs(r);
    for (const Rule& s : g.rules) {
      const std::size_t b = rule_lhs(s);
      if (b == a || !unit[a][b] || is_full_chain_rule(s)) continue;
      Rule copy = s;
      std::visit([&](auto& x) { x.lhs = a; }, copy);
      add(copy);
    }
  }
  return prune_grammar(out);
}

/// Rules rendered with nonterminal names, so grammars that differ only in
/// nonterminal numbering and rule order compare equal.
inline std::multiset<std::string> canonical_rules(const TileGrammar& g) {
  std::multiset<std::string> out;
  const SymbolNamer name = g.namer();
  for (const Rule& r : g.rules) {
    std::string s = g.nonterminals[rule_lhs(r)] + " ->";
    if (const auto* f = std::get_if<FixedRule>(&r)) {
      s += std::string(" '") + f->terminal + "'";
    } else {
      std::set<std::string> tiles;
      for (const Tile& t : std::get<VariableRule>(r).tiles) tiles.insert(to_string(t, name));
      for (const auto& t : tiles) s += " " + t;
    }
    out.insert(std::move(s));
  }
  return out;
}

inline bool same_up_to_numbering(const TileGrammar& a, const TileGrammar& b) {
  auto names = [](const TileGrammar& g) { return std::set<std::string>(g.nonterminals.begin(), g.nonterminals.end()); };
  return a.terminals == b.terminals && names(a) == names(b) && a.nonterminals[a.start] == b.nonterminals[b.start] &&
         canonical_rules(a) == canonical_rules(b);
}

}  // namespace picgram
