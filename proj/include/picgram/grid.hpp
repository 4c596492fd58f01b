#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "picgram/kolam.hpp"
#include "picgram/local_language.hpp"
#include "picgram/names.hpp"

namespace picgram {

/// Grid cell: a terminal atom (every homogeneous square of it) or a nonterminal.
struct GridCell {
  bool is_terminal = false;
  char terminal = 0;
  std::size_t nonterminal = 0;

  static GridCell term(char t) { return {true, t, 0}; }
  static GridCell var(std::size_t n) { return {false, 0, n}; }

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// A -> t when k == 0; otherwise A -> [c(1,1) .. c(1,k) .. c(k,k)] where
/// row 1 is the bottom row of the picture.
struct GridRule {
  std::size_t lhs = 0;
  std::size_t k = 0;
  char terminal = 0;
  std::vector<GridCell> cells;  // bottom-left first

  bool is_terminal() const noexcept { return k == 0; }
  const GridCell& at(std::size_t i, std::size_t j) const { return cells[(i - 1) * k + (j - 1)]; }

  friend bool operator==(const GridRule&, const GridRule&) = default;
};

struct GridGrammar {
  std::vector<char> terminals;
  std::vector<std::string> nonterminals;
  std::size_t start = 0;
  std::vector<GridRule> rules;

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

  friend bool operator==(const GridGrammar&, const GridGrammar&) = default;
};

inline bool is_nnf(const GridGrammar& g) {
  for (const GridRule& r : g.rules)
    if (std::any_of(r.cells.begin(), r.cells.end(), [](const GridCell& c) { return c.is_terminal; })) return false;
  return true;
}

inline GridGrammar grid_to_nnf(const GridGrammar& input) {
  if (is_nnf(input)) return input;
  GridGrammar g = input;
  std::map<char, std::size_t> wrapper;
  std::vector<GridRule> extra;
  for (GridRule& r : g.rules)
    for (GridCell& c : r.cells) {
      if (!c.is_terminal) continue;
      auto it = wrapper.find(c.terminal);
      if (it == wrapper.end()) {
        const std::string base(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c.terminal))));
        g.nonterminals.push_back(fresh_name(base, g.nonterminals));
        it = wrapper.emplace(c.terminal, g.nonterminals.size() - 1).first;
        extra.push_back(GridRule{it->second, 0, c.terminal, {}});
      }
      c = GridCell::var(it->second);
    }
  for (GridRule& r : extra) g.rules.push_back(std::move(r));
  return g;
}

/// Kolam grammar generating the same squares. A terminal rule A -> t becomes
/// the recursive square generator over A, A_h, A_v. When A has further rules
/// the generator lives on a fresh nonterminal reached through A -> gen, since
/// reusing A itself would mix the square recursion with A's other bodies.
inline KolamGrammar grid_to_kolam(const GridGrammar& input) {
  if (!is_nnf(input)) throw Error(errc::not_normal_form, "grid grammar is not in nonterminal normal form");
  KolamGrammar k;
  k.terminals = input.terminals;
  k.nonterminals = input.nonterminals;
  k.start = input.start;
  std::vector<std::size_t> rule_count(input.nonterminals.size(), 0);
  for (const GridRule& r : input.rules) ++rule_count[r.lhs];
  auto fresh = [&](const std::string& preferred) {
    k.nonterminals.push_back(free_name(preferred, k.nonterminals));
    return k.nonterminals.size() - 1;
  };
  using F = KolamForm;
  for (const GridRule& r : input.rules) {
    if (r.is_terminal()) {
      std::size_t a = r.lhs;
      if (rule_count[r.lhs] > 1) {
        a = k.add_fresh(input.nonterminals[r.lhs]);
        k.rules.push_back({r.lhs, F::var(a)});
      }
      const std::string base = k.nonterminals[a];
      const std::size_t h = fresh(base + "_h");
      const std::size_t v = fresh(base + "_v");
      const F t = F::term(r.terminal);
      k.rules.push_back({a, F::row(F::column(F::var(a), F::var(v)), F::column(F::var(h), t))});
      k.rules.push_back({a, t});
      k.rules.push_back({h, F::column(F::var(h), t)});
      k.rules.push_back({h, t});
      k.rules.push_back({v, F::row(t, F::var(v))});
      k.rules.push_back({v, t});
      continue;
    }
    std::optional<F> body;
    for (std::size_t i = r.k; i >= 1; --i) {
      F row = F::var(r.at(i, 1).nonterminal);
      for (std::size_t j = 2; j <= r.k; ++j) row = F::column(std::move(row), F::var(r.at(i, j).nonterminal));
      body = body ? F::row(std::move(*body), std::move(row)) : std::move(row);
    }
    k.rules.push_back({r.lhs, std::move(*body)});
  }
  return k;
}

/// All square pictures up to the bound in the grammar's own semantics.
inline std::set<Picture> enumerate_grid(const GridGrammar& g, SizeBound bound, Budget* budget = nullptr) {
  const std::size_t N = std::min(bound.max_rows, bound.max_cols), n = g.nonterminals.size();
  std::vector<std::vector<std::set<Picture>>> lang(n, std::vector<std::set<Picture>>(N + 1));
  auto cell_lang = [&](const GridCell& c, std::size_t size) -> std::set<Picture> {
    if (c.is_terminal) return {Picture(size, size, terminal(c.terminal))};
    return lang[c.nonterminal][size];
  };
  for (std::size_t size = 1; size <= N; ++size)
    for (bool changed = true; changed;) {
      changed = false;
      for (const GridRule& r : g.rules) {
        std::set<Picture>& target = lang[r.lhs][size];
        if (r.is_terminal()) {
          if (target.insert(Picture(size, size, terminal(r.terminal))).second) changed = true;
          continue;
        }
        if (size % r.k != 0) continue;
        const std::size_t m = size / r.k;
        std::vector<std::vector<Picture>> options;
        bool empty = false;
        for (const GridCell& c : r.cells) {
          auto s = cell_lang(c, m);
          if (s.empty()) empty = true;
          options.emplace_back(s.begin(), s.end());
        }
        if (empty) continue;
        std::vector<std::size_t> pick(options.size(), 0);
        while (true) {
          if (budget) budget->spend();
          Picture p(size, size, kBoundary);
          for (std::size_t i = 1; i <= r.k; ++i)
            for (std::size_t j = 1; j <= r.k; ++j) {
              const std::size_t idx = (i - 1) * r.k + (j - 1);
              const Picture& q = options[idx][pick[idx]];
              const std::size_t top = (r.k - i) * m, left = (j - 1) * m;
              for (std::size_t a = 1; a <= m; ++a)
                for (std::size_t b = 1; b <= m; ++b) p(top + a, left + b) = q(a, b);
            }
          if (target.insert(std::move(p)).second) changed = true;
          std::size_t x = pick.size();
          while (x > 0 && ++pick[x - 1] == options[x - 1].size()) pick[--x] = 0;
          if (x == 0) break;
        }
      }
    }
  std::set<Picture> out;
  for (const auto& s : lang[g.start]) out.insert(s.begin(), s.end());
  return out;
}

}  // namespace picgram
