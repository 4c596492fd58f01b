#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "picgram/kolam.hpp"
#include "picgram/local_language.hpp"

namespace picgram {

/// Symbol of a context-free string rule. Terminal ids are character codes in
/// vertical grammars and column indices in the horizontal one.
struct StringSymbol {
  bool is_terminal = false;
  std::size_t id = 0;

  static StringSymbol term(std::size_t t) { return {true, t}; }
  static StringSymbol var(std::size_t n) { return {false, n}; }

  friend auto operator<=>(const StringSymbol&, const StringSymbol&) = default;
};

struct StringRule {
  std::size_t lhs = 0;
  std::vector<StringSymbol> body;

  friend bool operator==(const StringRule&, const StringRule&) = default;
};

struct StringGrammar {
  std::vector<std::string> nonterminals;
  std::size_t start = 0;
  std::vector<StringRule> rules;

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

  friend bool operator==(const StringGrammar&, const StringGrammar&) = default;
};

/// H emits strings of column indices; column index i is the start symbol
/// `columns[i]` of grammar `vertical[i]`, whose strings are read top to bottom.
struct MatrixGrammar {
  std::vector<char> terminals;
  StringGrammar horizontal;
  std::vector<std::string> columns;
  std::vector<StringGrammar> vertical;

  friend bool operator==(const MatrixGrammar&, const MatrixGrammar&) = default;
};

/// Strings of each length 1..max_length derivable from every nonterminal.
inline std::vector<std::vector<std::set<std::vector<std::size_t>>>> string_languages(const StringGrammar& g,
                                                                                      std::size_t max_length,
                                                                                      Budget* budget = nullptr) {
  using Str = std::vector<std::size_t>;
  std::vector<std::vector<std::set<Str>>> lang(g.nonterminals.size(), std::vector<std::set<Str>>(max_length + 1));
  for (std::size_t len = 1; len <= max_length; ++len)
    for (bool changed = true; changed;) {
      changed = false;
      for (const StringRule& r : g.rules) {
        if (r.body.empty() || r.body.size() > len) continue;
        Str cur;
        std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t k, std::size_t left) {
          if (k == r.body.size()) {
            if (left == 0 && lang[r.lhs][len].insert(cur).second) changed = true;
            return;
          }
          const std::size_t rest = r.body.size() - k - 1;
          const StringSymbol& s = r.body[k];
          if (s.is_terminal) {
            if (left < 1 + rest) return;
            cur.push_back(s.id);
            extend(k + 1, left - 1);
            cur.pop_back();
            return;
          }
          for (std::size_t part = 1; part + rest <= left; ++part) {
            const auto options = lang[s.id][part];
            for (const Str& piece : options) {
              if (budget) budget->spend();
              cur.insert(cur.end(), piece.begin(), piece.end());
              extend(k + 1, left - part);
              cur.resize(cur.size() - piece.size());
            }
          }
        };
        extend(0, len);
      }
    }
  return lang;
}

/// All pictures up to the bound: an H string of column starts, then one
/// column per start, all of equal height.
inline std::set<Picture> enumerate_matrix(const MatrixGrammar& g, SizeBound bound, Budget* budget = nullptr) {
  const auto h = string_languages(g.horizontal, bound.max_cols, budget);
  std::vector<std::vector<std::set<std::vector<std::size_t>>>> columns;
  for (const StringGrammar& v : g.vertical) columns.push_back(string_languages(v, bound.max_rows, budget)[v.start]);
  std::set<Picture> out;
  for (std::size_t width = 1; width <= bound.max_cols; ++width)
    for (const auto& starts : h[g.horizontal.start][width])
      for (std::size_t height = 1; height <= bound.max_rows; ++height) {
        std::vector<std::vector<std::vector<std::size_t>>> options;
        for (std::size_t c : starts) options.emplace_back(columns[c][height].begin(), columns[c][height].end());
        if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;
        std::vector<std::size_t> pick(width, 0);
        while (true) {
          if (budget) budget->spend();
          Picture p(height, width, kBoundary);
          for (std::size_t j = 0; j < width; ++j)
            for (std::size_t i = 0; i < height; ++i)
              p(i + 1, j + 1) = terminal(static_cast<char>(options[j][pick[j]][i]));
          out.insert(std::move(p));
          std::size_t x = width;
          while (x > 0 && ++pick[x - 1] == options[x - 1].size()) pick[--x] = 0;
          if (x == 0) break;
        }
      }
  return out;
}

/// Horizontal rules become column concatenations over the column starts,
/// vertical rules become row concatenations. H nonterminal X is named "H.X"
/// and nonterminal Y of the grammar started by Ai is named "Ai.Y".
inline KolamGrammar matrix_to_kolam(const MatrixGrammar& m) {
  KolamGrammar k;
  k.terminals = m.terminals;
  auto h_name = [&](std::size_t x) { return "H." + m.horizontal.nonterminals[x]; };
  auto v_name = [&](std::size_t col, std::size_t y) { return m.columns[col] + "." + m.vertical[col].nonterminals[y]; };
  auto fold = [](std::vector<KolamForm> items, bool columns) {
    KolamForm f = std::move(items[0]);
    for (std::size_t i = 1; i < items.size(); ++i)
      f = columns ? KolamForm::column(std::move(f), std::move(items[i])) : KolamForm::row(std::move(f), std::move(items[i]));
    return f;
  };
  k.start = k.nonterminal_id(h_name(m.horizontal.start));
  for (const StringRule& r : m.horizontal.rules) {
    if (r.body.empty()) throw Error(errc::syntax, "empty horizontal rule for " + m.horizontal.nonterminals[r.lhs]);
    std::vector<KolamForm> items;
    for (const StringSymbol& s : r.body)
      items.push_back(KolamForm::var(s.is_terminal ? k.nonterminal_id(v_name(s.id, m.vertical[s.id].start))
                                                   : k.nonterminal_id(h_name(s.id))));
    k.rules.push_back({k.nonterminal_id(h_name(r.lhs)), fold(std::move(items), true)});
  }
  for (std::size_t col = 0; col < m.vertical.size(); ++col)
    for (const StringRule& r : m.vertical[col].rules) {
      if (r.body.empty()) throw Error(errc::syntax, "empty vertical rule for " + m.vertical[col].nonterminals[r.lhs]);
      std::vector<KolamForm> items;
      for (const StringSymbol& s : r.body)
        items.push_back(s.is_terminal ? KolamForm::term(static_cast<char>(s.id))
                                      : KolamForm::var(k.nonterminal_id(v_name(col, s.id))));
      k.rules.push_back({k.nonterminal_id(v_name(col, r.lhs)), fold(std::move(items), false)});
    }
  return k;
}

}  // namespace picgram
