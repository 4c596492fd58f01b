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
#include "picgram/names.hpp"

namespace picgram {

/// Sentential form: a symbol, a column concatenation (left || right) or a
/// row concatenation (top -- bottom).
struct KolamForm {
  enum class Op { terminal, nonterminal, column, row };

  Op op = Op::terminal;
  char terminal = 0;
  std::size_t nonterminal = 0;
  std::vector<KolamForm> parts;

  static KolamForm term(char t) { return KolamForm{Op::terminal, t, 0, {}}; }
  static KolamForm var(std::size_t n) { return KolamForm{Op::nonterminal, 0, n, {}}; }
  static KolamForm column(KolamForm a, KolamForm b) { return KolamForm{Op::column, 0, 0, {std::move(a), std::move(b)}}; }
  static KolamForm row(KolamForm a, KolamForm b) { return KolamForm{Op::row, 0, 0, {std::move(a), std::move(b)}}; }

  bool is_atom() const noexcept { return op == Op::terminal || op == Op::nonterminal; }

  friend bool operator==(const KolamForm&, const KolamForm&) = default;
};

struct KolamRule {
  std::size_t lhs = 0;
  KolamForm body;

  friend bool operator==(const KolamRule&, const KolamRule&) = default;
};

struct KolamGrammar {
  std::vector<char> terminals;
  std::vector<std::string> nonterminals;
  std::size_t start = 0;
  std::vector<KolamRule> rules;

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
  std::size_t add_fresh(const std::string& base) {
    nonterminals.push_back(fresh_name(base, nonterminals));
    return nonterminals.size() - 1;
  }

  friend bool operator==(const KolamGrammar&, const KolamGrammar&) = default;
};

/// The picture denoted by a form over terminals only; absent when some
/// concatenation has mismatched sides.
inline std::optional<Picture> evaluate(const KolamForm& f) {
  switch (f.op) {
    case KolamForm::Op::terminal: return Picture(1, 1, terminal(f.terminal));
    case KolamForm::Op::nonterminal: return std::nullopt;
    case KolamForm::Op::column:
    case KolamForm::Op::row: {
      auto a = evaluate(f.parts[0]), b = evaluate(f.parts[1]);
      if (!a || !b) return std::nullopt;
      if (f.op == KolamForm::Op::column) {
        if (a->rows() != b->rows()) return std::nullopt;
        return hcat(*a, *b);
      }
      if (a->cols() != b->cols()) return std::nullopt;
      return vcat(*a, *b);
    }
  }
  return std::nullopt;
}

inline bool is_cnf(const KolamGrammar& g) {
  for (const KolamRule& r : g.rules) {
    const KolamForm& b = r.body;
    if (b.op == KolamForm::Op::terminal) continue;
    if (b.op == KolamForm::Op::nonterminal) return false;
    if (b.parts[0].op != KolamForm::Op::nonterminal || b.parts[1].op != KolamForm::Op::nonterminal) return false;
  }
  return true;
}

namespace detail {

inline void kolam_nonterminals(const KolamForm& f, std::vector<std::size_t>& out) {
  if (f.op == KolamForm::Op::nonterminal) out.push_back(f.nonterminal);
  for (const KolamForm& p : f.parts) kolam_nonterminals(p, out);
}

/// Drops nonterminals that generate no terminal form or are unreachable.
inline KolamGrammar prune_kolam(const KolamGrammar& g) {
  const std::size_t n = g.nonterminals.size();
  std::vector<bool> prod(n, false);
  std::function<bool(const KolamForm&)> productive = [&](const KolamForm& f) {
    if (f.op == KolamForm::Op::terminal) return true;
    if (f.op == KolamForm::Op::nonterminal) return static_cast<bool>(prod[f.nonterminal]);
    return productive(f.parts[0]) && productive(f.parts[1]);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const KolamRule& r : g.rules)
      if (!prod[r.lhs] && productive(r.body)) prod[r.lhs] = changed = true;
  }
  if (!prod[g.start])
    throw Error(errc::degenerate_grammar, "start symbol " + g.nonterminals[g.start] + " derives no picture");
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> stack{g.start};
  reach[g.start] = true;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (const KolamRule& r : g.rules) {
      if (r.lhs != a || !productive(r.body)) continue;
      std::vector<std::size_t> used;
      kolam_nonterminals(r.body, used);
      for (std::size_t b : used)
        if (!reach[b]) {
          reach[b] = true;
          stack.push_back(b);
        }
    }
  }
  std::vector<std::size_t> renumber(n, 0);
  KolamGrammar out;
  out.terminals = g.terminals;
  for (std::size_t a = 0; a < n; ++a)
    if (reach[a]) {
      renumber[a] = out.nonterminals.size();
      out.nonterminals.push_back(g.nonterminals[a]);
    }
  out.start = renumber[g.start];
  std::function<KolamForm(const KolamForm&)> remap = [&](const KolamForm& f) {
    KolamForm c = f;
    if (c.op == KolamForm::Op::nonterminal) c.nonterminal = renumber[c.nonterminal];
    for (KolamForm& p : c.parts) p = remap(p);
    return c;
  };
  for (const KolamRule& r : g.rules)
    if (reach[r.lhs] && productive(r.body)) out.rules.push_back({renumber[r.lhs], remap(r.body)});
  return out;
}

}  // namespace detail

/// Chomsky normal form: A -> t, A -> B -- C, A -> B || C.
inline KolamGrammar kolam_to_cnf(const KolamGrammar& input) {
  if (is_cnf(input)) return detail::prune_kolam(input);
  KolamGrammar g = input;
  g.rules.clear();
  std::map<char, std::size_t> wrapper;
  auto wrap = [&](char t) {
    auto it = wrapper.find(t);
    if (it != wrapper.end()) return it->second;
    const std::size_t w = g.add_fresh(std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(t)))));
    wrapper[t] = w;
    g.rules.push_back({w, KolamForm::term(t)});
    return w;
  };
  // Binarize: operands of a concatenation become single nonterminals.
  std::vector<KolamRule> work(input.rules.rbegin(), input.rules.rend());
  std::vector<KolamRule> binary;
  while (!work.empty()) {
    KolamRule r = std::move(work.back());
    work.pop_back();
    if (!r.body.is_atom()) {
      for (KolamForm& part : r.body.parts) {
        if (part.op == KolamForm::Op::terminal) {
          part = KolamForm::var(wrap(part.terminal));
        } else if (!part.is_atom()) {
          const std::size_t fresh = g.add_fresh(g.nonterminals[r.lhs]);
          work.push_back({fresh, std::move(part)});
          part = KolamForm::var(fresh);
        }
      }
    }
    binary.push_back(std::move(r));
  }
  // Unit closure.
  const std::size_t n = g.nonterminals.size();
  std::vector<std::vector<bool>> unit(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) unit[a][a] = true;
  for (const KolamRule& r : binary)
    if (r.body.op == KolamForm::Op::nonterminal) unit[r.lhs][r.body.nonterminal] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (unit[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (unit[k][b]) unit[a][b] = true;
  auto add = [&](const KolamRule& r) {
    if (std::find(g.rules.begin(), g.rules.end(), r) == g.rules.end()) g.rules.push_back(r);
  };
  std::vector<KolamRule> wrappers = g.rules;
  g.rules.clear();
  for (const KolamRule& r : binary) {
    if (r.body.op != KolamForm::Op::nonterminal) {
      add(r);
      continue;
    }
    for (const auto& source : {binary, wrappers})
      for (const KolamRule& s : source)
        if (s.lhs != r.lhs && unit[r.lhs][s.lhs] && s.body.op != KolamForm::Op::nonterminal) add({r.lhs, s.body});
  }
  for (const KolamRule& r : wrappers) add(r);
  return detail::prune_kolam(g);
}

/// Regional tile grammar with one two-block rule per concatenation rule.
/// A rule concatenating B with itself goes through a fresh copy B'k -> B.
inline TileGrammar kolam_to_rtg(const KolamGrammar& k) {
  if (!is_cnf(k)) throw Error(errc::not_normal_form, "Kolam grammar is not in Chomsky normal form");
  TileGrammar g;
  g.terminals = k.terminals;
  std::sort(g.terminals.begin(), g.terminals.end());
  g.nonterminals = k.nonterminals;
  g.start = k.start;
  std::map<std::size_t, std::size_t> copies;
  std::vector<Rule> chains;
  auto copy_of = [&](std::size_t b) {
    auto it = copies.find(b);
    if (it != copies.end()) return it->second;
    const std::size_t c = g.nonterminals.size();
    g.nonterminals.push_back(fresh_name(g.nonterminals[b], g.nonterminals));
    copies[b] = c;
    Picture e = bordered(Picture(2, 2, nonterminal(b)));
    chains.push_back(VariableRule{c, tiles_of(e), {e}});
    return c;
  };
  for (const KolamRule& r : k.rules) {
    if (r.body.op == KolamForm::Op::terminal) {
      g.rules.push_back(FixedRule{r.lhs, r.body.terminal});
      continue;
    }
    const std::size_t b = r.body.parts[0].nonterminal;
    std::size_t c = r.body.parts[1].nonterminal;
    if (b == c) c = copy_of(b);
    const Picture pb(2, 2, nonterminal(b)), pc(2, 2, nonterminal(c));
    const Picture e = bordered(r.body.op == KolamForm::Op::column ? hcat(pb, pc) : vcat(pb, pc));
    g.rules.push_back(VariableRule{r.lhs, tiles_of(e), {e}});
  }
  for (Rule& c : chains) g.rules.push_back(std::move(c));
  return g;
}

/// All pictures up to the bound generated by the Kolam grammar, per its own semantics.
inline std::set<Picture> enumerate_kolam(const KolamGrammar& g, SizeBound bound, Budget* budget = nullptr) {
  const std::size_t R = bound.max_rows, C = bound.max_cols, n = g.nonterminals.size();
  // lang[a][(r-1)*C + (c-1)]
  std::vector<std::vector<std::set<Picture>>> lang(n, std::vector<std::set<Picture>>(R * C));
  std::function<std::set<Picture>(const KolamForm&, std::size_t, std::size_t)> eval =
      [&](const KolamForm& f, std::size_t r, std::size_t c) -> std::set<Picture> {
    switch (f.op) {
      case KolamForm::Op::terminal:
        if (r == 1 && c == 1) return {Picture(1, 1, terminal(f.terminal))};
        return {};
      case KolamForm::Op::nonterminal: return lang[f.nonterminal][(r - 1) * C + (c - 1)];
      case KolamForm::Op::column: {
        std::set<Picture> out;
        for (std::size_t c1 = 1; c1 < c; ++c1) {
          auto left = eval(f.parts[0], r, c1);
          if (left.empty()) continue;
          auto right = eval(f.parts[1], r, c - c1);
          for (const Picture& a : left)
            for (const Picture& b : right) {
              if (budget) budget->spend();
              out.insert(hcat(a, b));
            }
        }
        return out;
      }
      case KolamForm::Op::row: {
        std::set<Picture> out;
        for (std::size_t r1 = 1; r1 < r; ++r1) {
          auto top = eval(f.parts[0], r1, c);
          if (top.empty()) continue;
          auto bottom = eval(f.parts[1], r - r1, c);
          for (const Picture& a : top)
            for (const Picture& b : bottom) {
              if (budget) budget->spend();
              out.insert(vcat(a, b));
            }
        }
        return out;
      }
    }
    return {};
  };
  for (std::size_t r = 1; r <= R; ++r)
    for (std::size_t c = 1; c <= C; ++c)
      for (bool changed = true; changed;) {
        changed = false;
        for (const KolamRule& rule : g.rules)
          for (const Picture& p : eval(rule.body, r, c))
            if (lang[rule.lhs][(r - 1) * C + (c - 1)].insert(p).second) changed = true;
      }
  std::set<Picture> out;
  for (const auto& s : lang[g.start])
    out.insert(s.begin(), s.end());
  return out;
}

}  // namespace picgram
