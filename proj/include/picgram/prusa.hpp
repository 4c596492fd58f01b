#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "picgram/grammar.hpp"
#include "picgram/local_language.hpp"
#include "picgram/names.hpp"

namespace picgram {

/// One cell of a rule body: a terminal pixel or a stretchable nonterminal.
struct PrusaCell {
  bool is_terminal = false;
  char terminal = 0;
  std::size_t nonterminal = 0;

  static PrusaCell term(char t) { return {true, t, 0}; }
  static PrusaCell var(std::size_t n) { return {false, 0, n}; }

  friend bool operator==(const PrusaCell&, const PrusaCell&) = default;
};

struct PrusaRule {
  std::size_t lhs = 0;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<PrusaCell> cells;  // row-major

  const PrusaCell& at(std::size_t i, std::size_t j) const { return cells[(i - 1) * cols + (j - 1)]; }
  bool all_terminal() const {
    return std::all_of(cells.begin(), cells.end(), [](const PrusaCell& c) { return c.is_terminal; });
  }

  friend bool operator==(const PrusaRule&, const PrusaRule&) = default;
};

struct PrusaGrammar {
  std::vector<char> terminals;
  std::vector<std::string> nonterminals;
  std::size_t start = 0;
  std::vector<PrusaRule> rules;

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

  friend bool operator==(const PrusaGrammar&, const PrusaGrammar&) = default;
};

inline bool is_nnf(const PrusaGrammar& g) {
  for (const PrusaRule& r : g.rules) {
    if (r.cells.size() == 1 && r.cells[0].is_terminal) continue;
    if (std::any_of(r.cells.begin(), r.cells.end(), [](const PrusaCell& c) { return c.is_terminal; })) return false;
  }
  return true;
}

/// Terminal cells of multi-cell bodies become fresh nonterminals, one per terminal.
inline PrusaGrammar prusa_to_nnf(const PrusaGrammar& input) {
  if (is_nnf(input)) return input;
  PrusaGrammar g = input;
  std::map<char, std::size_t> wrapper;
  std::vector<PrusaRule> extra;
  for (PrusaRule& r : g.rules) {
    if (r.cells.size() == 1) continue;
    for (PrusaCell& c : r.cells) {
      if (!c.is_terminal) continue;
      auto it = wrapper.find(c.terminal);
      if (it == wrapper.end()) {
        const std::string base(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c.terminal))));
        g.nonterminals.push_back(fresh_name(base, g.nonterminals));
        it = wrapper.emplace(c.terminal, g.nonterminals.size() - 1).first;
        extra.push_back(PrusaRule{it->second, 1, 1, {PrusaCell::term(c.terminal)}});
      }
      c = PrusaCell::var(it->second);
    }
  }
  for (PrusaRule& r : extra) g.rules.push_back(std::move(r));
  return g;
}

/// Regional tile grammar: repeated body nonterminals are renamed apart
/// through chain rules, then every body cell becomes a 2x2 block.
inline TileGrammar prusa_to_rtg(const PrusaGrammar& p) {
  if (!is_nnf(p)) throw Error(errc::not_normal_form, "Prusa grammar is not in nonterminal normal form");
  TileGrammar g;
  g.terminals = p.terminals;
  std::sort(g.terminals.begin(), g.terminals.end());
  g.nonterminals = p.nonterminals;
  g.start = p.start;
  std::vector<Rule> chains;
  for (const PrusaRule& r : p.rules) {
    if (r.cells.size() == 1 && r.cells[0].is_terminal) {
      g.rules.push_back(FixedRule{r.lhs, r.cells[0].terminal});
      continue;
    }
    std::set<std::size_t> seen;
    Picture blown(2 * r.rows, 2 * r.cols, kBoundary);
    for (std::size_t i = 1; i <= r.rows; ++i)
      for (std::size_t j = 1; j <= r.cols; ++j) {
        std::size_t x = r.at(i, j).nonterminal;
        if (!seen.insert(x).second) {
          const std::size_t copy = g.nonterminals.size();
          g.nonterminals.push_back(fresh_name(p.nonterminals[x], g.nonterminals));
          Picture e = bordered(Picture(2, 2, nonterminal(x)));
          chains.push_back(VariableRule{copy, tiles_of(e), {e}});
          x = copy;
        }
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) blown(2 * i - 1 + a, 2 * j - 1 + b) = nonterminal(x);
      }
    const Picture e = bordered(blown);
    g.rules.push_back(VariableRule{r.lhs, tiles_of(e), {e}});
  }
  for (Rule& c : chains) g.rules.push_back(std::move(c));
  return g;
}

namespace detail {

/// Positive compositions of `total` into `parts` summands.
inline void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(cur);
    return;
  }
  for (std::size_t x = 1; x + parts - 1 <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts - 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace detail

/// All pictures up to the bound in L(G, S), by the grid-of-subpictures semantics.
inline std::set<Picture> enumerate_prusa(const PrusaGrammar& g, SizeBound bound, Budget* budget = nullptr) {
  const std::size_t R = bound.max_rows, C = bound.max_cols, n = g.nonterminals.size();
  std::vector<std::vector<std::set<Picture>>> lang(n, std::vector<std::set<Picture>>(R * C));
  auto cell_lang = [&](const PrusaCell& cell, std::size_t r, std::size_t c) -> std::set<Picture> {
    if (cell.is_terminal) {
      if (r == 1 && c == 1) return {Picture(1, 1, terminal(cell.terminal))};
      return {};
    }
    return lang[cell.nonterminal][(r - 1) * C + (c - 1)];
  };
  auto apply = [&](const PrusaRule& rule, std::size_t r, std::size_t c) {
    std::set<Picture> out;
    if (rule.rows > r || rule.cols > c) return out;
    std::vector<std::size_t> hs, ws;
    detail::compositions(r, rule.rows, hs, [&](const std::vector<std::size_t>& heights) {
      detail::compositions(c, rule.cols, ws, [&](const std::vector<std::size_t>& widths) {
        std::vector<std::vector<Picture>> options(rule.cells.size());
        for (std::size_t i = 0; i < rule.rows; ++i)
          for (std::size_t j = 0; j < rule.cols; ++j) {
            auto s = cell_lang(rule.cells[i * rule.cols + j], heights[i], widths[j]);
            if (s.empty()) return;
            options[i * rule.cols + j].assign(s.begin(), s.end());
          }
        std::vector<std::size_t> pick(options.size(), 0);
        while (true) {
          if (budget) budget->spend();
          Picture p(r, c, kBoundary);
          std::size_t top = 1;
          for (std::size_t i = 0; i < rule.rows; ++i) {
            std::size_t left = 1;
            for (std::size_t j = 0; j < rule.cols; ++j) {
              const Picture& q = options[i * rule.cols + j][pick[i * rule.cols + j]];
              for (std::size_t a = 1; a <= q.rows(); ++a)
                for (std::size_t b = 1; b <= q.cols(); ++b) p(top + a - 1, left + b - 1) = q(a, b);
              left += widths[j];
            }
            top += heights[i];
          }
          out.insert(std::move(p));
          std::size_t k = pick.size();
          while (k > 0 && ++pick[k - 1] == options[k - 1].size()) pick[--k] = 0;
          if (k == 0) break;
        }
      });
    });
    return out;
  };
  for (std::size_t r = 1; r <= R; ++r)
    for (std::size_t c = 1; c <= C; ++c)
      for (bool changed = true; changed;) {
        changed = false;
        for (const PrusaRule& rule : g.rules)
          for (const Picture& p : apply(rule, r, c))
            if (lang[rule.lhs][(r - 1) * C + (c - 1)].insert(p).second) changed = true;
      }
  std::set<Picture> out;
  for (const auto& s : lang[g.start]) out.insert(s.begin(), s.end());
  return out;
}

}  // namespace picgram
