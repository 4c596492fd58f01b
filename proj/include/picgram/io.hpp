#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "picgram/grammar.hpp"
#include "picgram/grid.hpp"
#include "picgram/kolam.hpp"
#include "picgram/lexer.hpp"
#include "picgram/matrix.hpp"
#include "picgram/prusa.hpp"
#include "picgram/tiling_system.hpp"

namespace picgram {

enum class Format { rtg, tg, ts, kolam, prusa, grid, matrix };

inline const char* to_string(Format f) {
  switch (f) {
    case Format::rtg: return "rtg";
    case Format::tg: return "tg";
    case Format::ts: return "ts";
    case Format::kolam: return "kolam";
    case Format::prusa: return "prusa";
    case Format::grid: return "grid";
    case Format::matrix: return "matrix";
  }
  return "?";
}

inline std::optional<Format> parse_format(std::string_view s) {
  for (Format f : {Format::rtg, Format::tg, Format::ts, Format::kolam, Format::prusa, Format::grid, Format::matrix})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

using AnyGrammar = std::variant<TileGrammar, TilingSystem, KolamGrammar, PrusaGrammar, GridGrammar, MatrixGrammar>;

struct LoadedGrammar {
  Format format = Format::rtg;
  AnyGrammar grammar;
};

namespace detail {

/// Directives shared by all formats, collected while reading statements.
struct Header {
  std::optional<Token> start;
  std::optional<std::vector<char>> terminals;
  std::vector<std::string> nonterminals;
};

inline char terminal_of(const Token& t) {
  if (!is_valid_terminal_char(t.text[0])) throw syntax_error(t, "invalid terminal '" + t.text + "'");
  return t.text[0];
}

/// `%start`, `%terminals`, `%nonterminals`; returns false for other directives.
inline bool read_common_directive(TokenStream& ts, const Token& d, Header& h) {
  if (d.text == "start") {
    h.start = ts.expect(Token::Kind::name, "after %start");
  } else if (d.text == "terminals") {
    h.terminals.emplace();
    while (ts.at(Token::Kind::name) || ts.at(Token::Kind::terminal)) {
      const Token& t = ts.next();
      if (t.text.size() != 1) throw syntax_error(t, "terminal '" + t.text + "' is not a single character");
      h.terminals->push_back(terminal_of(t));
    }
  } else if (d.text == "nonterminals") {
    while (ts.at(Token::Kind::name)) h.nonterminals.push_back(ts.next().text);
  } else {
    return false;
  }
  return true;
}

inline void end_statement(TokenStream& ts, const char* what) {
  if (!ts.at(Token::Kind::end)) ts.expect(Token::Kind::newline, what);
}

/// Rows of cells up to the closing brace; cells are `#`, names, or terminals.
inline std::vector<std::vector<Token>> read_braced_rows(TokenStream& ts) {
  const Token open = ts.expect(Token::Kind::lbrace, "to open a picture");
  std::vector<std::vector<Token>> rows(1);
  while (!ts.at(Token::Kind::rbrace)) {
    const Token& t = ts.next();
    if (t.kind == Token::Kind::slash) {
      if (!rows.back().empty()) rows.emplace_back();
    } else if (t.kind == Token::Kind::boundary || t.kind == Token::Kind::name || t.kind == Token::Kind::terminal) {
      rows.back().push_back(t);
    } else {
      throw syntax_error(t, std::string("unexpected ") + describe(t.kind) + " inside a picture");
    }
  }
  ts.next();
  if (rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw syntax_error(open, "empty picture");
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw syntax_error(row.front(), "ragged picture rows");
  return rows;
}

/// A bordered exemplar over `#` and nonterminal names.
inline Picture read_exemplar(TokenStream& ts, TileGrammar& g) {
  const Token& open = ts.peek();
  const auto rows = read_braced_rows(ts);
  const std::size_t m = rows.size(), n = rows.front().size();
  if (m < 3 || n < 3) throw syntax_error(open, "exemplar must be a picture framed by '#'");
  Picture e(m, n, kBoundary);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Token& t = rows[i][j];
      const bool frame = i == 0 || j == 0 || i + 1 == m || j + 1 == n;
      if (frame != (t.kind == Token::Kind::boundary))
        throw syntax_error(t, frame ? "exemplar must be framed by '#'" : "'#' inside an exemplar");
      if (t.kind == Token::Kind::terminal)
        throw Error(errc::alphabet, syntax_error(t, "terminal inside a variable-size rule").what());
      if (!frame) e(i + 1, j + 1) = nonterminal(g.nonterminal_id(t.text));
    }
  return e;
}

/// A literal tile `[ x y / z w ]`.
inline Tile read_tile(TokenStream& ts, TileGrammar& g) {
  const Token open = ts.expect(Token::Kind::lbracket, "to open a tile");
  std::vector<Symbol> cells;
  while (!ts.at(Token::Kind::rbracket)) {
    const Token& t = ts.next();
    if (t.kind == Token::Kind::slash) continue;
    if (t.kind == Token::Kind::boundary) cells.push_back(kBoundary);
    else if (t.kind == Token::Kind::name) cells.push_back(nonterminal(g.nonterminal_id(t.text)));
    else if (t.kind == Token::Kind::terminal)
      throw Error(errc::alphabet, syntax_error(t, "terminal inside a variable-size rule").what());
    else throw syntax_error(t, std::string("unexpected ") + describe(t.kind) + " inside a tile");
  }
  ts.next();
  if (cells.size() != 4) throw syntax_error(open, "a tile has exactly four cells");
  return make_tile(cells[0], cells[1], cells[2], cells[3]);
}

/// `item (+ item)*` where an item is an exemplar or a literal tile.
inline VariableRule read_tile_union(TokenStream& ts, TileGrammar& g, std::size_t lhs) {
  VariableRule rule{lhs, {}, {}};
  std::vector<Tile> tiles;
  do {
    if (ts.at(Token::Kind::lbracket)) {
      tiles.push_back(read_tile(ts, g));
    } else {
      Picture e = read_exemplar(ts, g);
      for (const Tile& t : tiles_of(e)) tiles.push_back(t);
      rule.exemplars.push_back(std::move(e));
    }
  } while (ts.accept(Token::Kind::plus));
  rule.tiles = TileSet(tiles);
  return rule;
}

inline std::vector<char> sorted_unique(std::vector<char> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class G>
void finish_header(G& g, const Header& h, const std::vector<char>& used_terminals, const std::optional<std::string>& first_lhs) {
  g.terminals = sorted_unique(h.terminals ? *h.terminals : used_terminals);
  for (char c : used_terminals)
    if (!std::binary_search(g.terminals.begin(), g.terminals.end(), c))
      throw Error(errc::alphabet, std::string("terminal '") + c + "' is not declared in %terminals");
  if (h.start) {
    auto s = g.find_nonterminal(h.start->text);
    if (!s) throw syntax_error(*h.start, "start symbol '" + h.start->text + "' has no rules");
    g.start = *s;
  } else if (first_lhs) {
    g.start = *g.find_nonterminal(*first_lhs);
  } else {
    throw Error(errc::syntax, "grammar has no rules");
  }
}

inline TileGrammar read_tile_grammar(TokenStream& ts) {
  TileGrammar g;
  Header h;
  std::vector<char> used;
  std::optional<std::string> first_lhs;
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (!read_common_directive(ts, d, h)) throw syntax_error(d, "unknown directive %" + d.text);
      if (d.text == "nonterminals")
        for (const auto& n : h.nonterminals) g.nonterminal_id(n);
      end_statement(ts, "after directive");
      continue;
    }
    const Token lhs_tok = ts.expect(Token::Kind::name, "at start of rule");
    const std::size_t lhs = g.nonterminal_id(lhs_tok.text);
    if (!first_lhs) first_lhs = lhs_tok.text;
    ts.expect(Token::Kind::arrow, "after left-hand side");
    do {
      if (ts.at(Token::Kind::terminal)) {
        const char c = terminal_of(ts.next());
        used.push_back(c);
        g.rules.push_back(FixedRule{lhs, c});
      } else if (ts.at(Token::Kind::name)) {
        const Symbol b = nonterminal(g.nonterminal_id(ts.next().text));
        g.rules.push_back(VariableRule{lhs, chain_tiles(b), {bordered(Picture(2, 2, b))}});
      } else if (ts.at(Token::Kind::lbrace) || ts.at(Token::Kind::lbracket)) {
        g.rules.push_back(read_tile_union(ts, g, lhs));
      } else {
        ts.expect(Token::Kind::lbrace, "as rule body");
      }
    } while (ts.accept(Token::Kind::bar));
    end_statement(ts, "after rule");
  }
  finish_header(g, h, used, first_lhs);
  check_grammar(g);
  return g;
}

inline TilingSystem read_tiling_system(TokenStream& ts) {
  TilingSystem t;
  Header h;
  std::vector<char> used;
  TileGrammar scratch;  // holds the local alphabet while tiles are read
  std::vector<std::optional<char>> projection;
  bool have_theta = false;
  auto gamma_id = [&](const std::string& name) {
    const std::size_t id = scratch.nonterminal_id(name);
    if (projection.size() <= id) projection.resize(id + 1);
    return id;
  };
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (d.text == "project") {
        const Token g = ts.expect(Token::Kind::name, "after %project");
        ts.expect(Token::Kind::arrow, "in projection");
        const Token a = ts.at(Token::Kind::terminal) ? ts.next() : ts.expect(Token::Kind::name, "as projection target");
        if (a.text.size() != 1) throw syntax_error(a, "projection target must be a single character");
        const std::size_t id = gamma_id(g.text);
        projection[id] = terminal_of(a);
        used.push_back(terminal_of(a));
      } else if (!read_common_directive(ts, d, h)) {
        throw syntax_error(d, "unknown directive %" + d.text);
      }
      end_statement(ts, "after directive");
      continue;
    }
    const Token name = ts.expect(Token::Kind::name, "at start of statement");
    if (name.text != "theta") throw syntax_error(name, "expected 'theta = ...'");
    if (have_theta) throw syntax_error(name, "theta given twice");
    ts.expect(Token::Kind::equals, "after theta");
    VariableRule r = read_tile_union(ts, scratch, 0);
    t.theta = r.tiles;
    t.exemplars = std::move(r.exemplars);
    have_theta = true;
    end_statement(ts, "after tile set");
  }
  if (!have_theta) throw Error(errc::syntax, "tiling system has no 'theta = ...' statement");
  t.gamma = scratch.nonterminals;
  projection.resize(t.gamma.size());
  for (std::size_t i = 0; i < t.gamma.size(); ++i) {
    if (!projection[i]) throw Error(errc::alphabet, "no %project line for local symbol " + t.gamma[i]);
    t.projection.push_back(*projection[i]);
  }
  t.terminals = sorted_unique(h.terminals ? *h.terminals : used);
  check_tiling_system(t);
  return t;
}

inline KolamForm read_kolam_form(TokenStream& ts, KolamGrammar& g, std::vector<char>& used) {
  if (ts.at(Token::Kind::terminal)) {
    const char c = terminal_of(ts.next());
    used.push_back(c);
    return KolamForm::term(c);
  }
  if (ts.at(Token::Kind::name)) return KolamForm::var(g.nonterminal_id(ts.next().text));
  ts.expect(Token::Kind::lparen, "to open a sentential form");
  KolamForm f = read_kolam_form(ts, g, used);
  std::optional<Token::Kind> op;
  while (!ts.at(Token::Kind::rparen)) {
    const Token& t = ts.peek();
    if (t.kind != Token::Kind::col_concat && t.kind != Token::Kind::row_concat)
      throw syntax_error(t, "expected '||' or '--' in sentential form");
    if (op && *op != t.kind) throw syntax_error(t, "mixed '||' and '--' need parentheses");
    op = t.kind;
    ts.next();
    KolamForm rhs = read_kolam_form(ts, g, used);
    f = t.kind == Token::Kind::col_concat ? KolamForm::column(std::move(f), std::move(rhs))
                                          : KolamForm::row(std::move(f), std::move(rhs));
  }
  ts.next();
  return f;
}

inline KolamGrammar read_kolam(TokenStream& ts) {
  KolamGrammar g;
  Header h;
  std::vector<char> used;
  std::optional<std::string> first_lhs;
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (!read_common_directive(ts, d, h)) throw syntax_error(d, "unknown directive %" + d.text);
      if (d.text == "nonterminals")
        for (const auto& n : h.nonterminals) g.nonterminal_id(n);
      end_statement(ts, "after directive");
      continue;
    }
    const Token lhs_tok = ts.expect(Token::Kind::name, "at start of rule");
    const std::size_t lhs = g.nonterminal_id(lhs_tok.text);
    if (!first_lhs) first_lhs = lhs_tok.text;
    ts.expect(Token::Kind::arrow, "after left-hand side");
    do g.rules.push_back({lhs, read_kolam_form(ts, g, used)});
    while (ts.accept(Token::Kind::bar));
    end_statement(ts, "after rule");
  }
  finish_header(g, h, used, first_lhs);
  return g;
}

inline PrusaGrammar read_prusa(TokenStream& ts) {
  PrusaGrammar g;
  Header h;
  std::vector<char> used;
  std::optional<std::string> first_lhs;
  auto cell = [&](const Token& t) {
    if (t.kind == Token::Kind::terminal) {
      used.push_back(terminal_of(t));
      return PrusaCell::term(terminal_of(t));
    }
    if (t.kind == Token::Kind::boundary) throw syntax_error(t, "'#' inside a rule body");
    return PrusaCell::var(g.nonterminal_id(t.text));
  };
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (!read_common_directive(ts, d, h)) throw syntax_error(d, "unknown directive %" + d.text);
      if (d.text == "nonterminals")
        for (const auto& n : h.nonterminals) g.nonterminal_id(n);
      end_statement(ts, "after directive");
      continue;
    }
    const Token lhs_tok = ts.expect(Token::Kind::name, "at start of rule");
    const std::size_t lhs = g.nonterminal_id(lhs_tok.text);
    if (!first_lhs) first_lhs = lhs_tok.text;
    ts.expect(Token::Kind::arrow, "after left-hand side");
    do {
      PrusaRule r{lhs, 1, 1, {}};
      if (ts.at(Token::Kind::terminal) || ts.at(Token::Kind::name)) {
        r.cells.push_back(cell(ts.next()));
      } else {
        const auto rows = read_braced_rows(ts);
        r.rows = rows.size();
        r.cols = rows.front().size();
        for (const auto& row : rows)
          for (const Token& t : row) r.cells.push_back(cell(t));
      }
      g.rules.push_back(std::move(r));
    } while (ts.accept(Token::Kind::bar));
    end_statement(ts, "after rule");
  }
  finish_header(g, h, used, first_lhs);
  return g;
}

inline GridGrammar read_grid(TokenStream& ts) {
  GridGrammar g;
  Header h;
  std::vector<char> used;
  std::optional<std::string> first_lhs;
  auto cell = [&](const Token& t) {
    if (t.kind == Token::Kind::terminal) {
      used.push_back(terminal_of(t));
      return GridCell::term(terminal_of(t));
    }
    if (t.kind != Token::Kind::name) throw syntax_error(t, std::string("unexpected ") + describe(t.kind) + " in grid");
    return GridCell::var(g.nonterminal_id(t.text));
  };
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (!read_common_directive(ts, d, h)) throw syntax_error(d, "unknown directive %" + d.text);
      if (d.text == "nonterminals")
        for (const auto& n : h.nonterminals) g.nonterminal_id(n);
      end_statement(ts, "after directive");
      continue;
    }
    const Token lhs_tok = ts.expect(Token::Kind::name, "at start of rule");
    const std::size_t lhs = g.nonterminal_id(lhs_tok.text);
    if (!first_lhs) first_lhs = lhs_tok.text;
    ts.expect(Token::Kind::arrow, "after left-hand side");
    do {
      if (ts.at(Token::Kind::terminal)) {
        const char c = terminal_of(ts.next());
        used.push_back(c);
        g.rules.push_back(GridRule{lhs, 0, c, {}});
        continue;
      }
      const Token open = ts.expect(Token::Kind::lbracket, "to open a grid");
      GridRule r{lhs, 0, 0, {}};
      do r.cells.push_back(cell(ts.next()));
      while (ts.accept(Token::Kind::comma));
      ts.expect(Token::Kind::rbracket, "to close a grid");
      const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(r.cells.size()))));
      r.k = side;
      if (ts.at(Token::Kind::name) && ts.peek().text == "k") {
        ts.next();
        ts.expect(Token::Kind::equals, "after k");
        const Token kt = ts.expect(Token::Kind::name, "as grid size");
        try {
          r.k = std::stoul(kt.text);
        } catch (const std::exception&) {
          throw syntax_error(kt, "grid size must be a number");
        }
      }
      if (r.k * r.k != r.cells.size() || r.k == 0)
        throw syntax_error(open, "grid has " + std::to_string(r.cells.size()) + " cells, not k*k");
      g.rules.push_back(std::move(r));
    } while (ts.accept(Token::Kind::bar));
    end_statement(ts, "after rule");
  }
  finish_header(g, h, used, first_lhs);
  return g;
}

inline MatrixGrammar read_matrix(TokenStream& ts) {
  MatrixGrammar m;
  Header h;
  std::vector<char> used;
  struct RawRule {
    Token lhs;
    std::vector<Token> body;
  };
  std::vector<RawRule> horizontal;
  std::optional<std::string> first_h;
  std::optional<std::size_t> section;  // nullopt: horizontal
  bool in_section = false;
  while (true) {
    ts.skip_newlines();
    if (ts.at(Token::Kind::end)) break;
    if (ts.at(Token::Kind::directive)) {
      const Token d = ts.next();
      if (d.text == "section") {
        const Token kind = ts.expect(Token::Kind::name, "after %section");
        if (kind.text == "horizontal") {
          section.reset();
        } else if (kind.text == "vertical") {
          const Token col = ts.expect(Token::Kind::name, "after %section vertical");
          if (std::find(m.columns.begin(), m.columns.end(), col.text) != m.columns.end())
            throw syntax_error(col, "vertical section " + col.text + " given twice");
          m.columns.push_back(col.text);
          m.vertical.emplace_back();
          m.vertical.back().nonterminal_id(col.text);
          section = m.vertical.size() - 1;
        } else {
          throw syntax_error(kind, "expected 'horizontal' or 'vertical'");
        }
        in_section = true;
      } else if (!read_common_directive(ts, d, h)) {
        throw syntax_error(d, "unknown directive %" + d.text);
      }
      end_statement(ts, "after directive");
      continue;
    }
    const Token lhs = ts.expect(Token::Kind::name, "at start of rule");
    if (!in_section) throw syntax_error(lhs, "rule outside a %section");
    ts.expect(Token::Kind::arrow, "after left-hand side");
    do {
      std::vector<Token> body;
      while (ts.at(Token::Kind::name) || ts.at(Token::Kind::terminal)) body.push_back(ts.next());
      if (body.empty()) throw syntax_error(ts.peek(), "empty rule body");
      if (!section) {
        if (!first_h) first_h = lhs.text;
        horizontal.push_back({lhs, std::move(body)});
        continue;
      }
      StringGrammar& v = m.vertical[*section];
      StringRule r{v.nonterminal_id(lhs.text), {}};
      for (const Token& t : body) {
        if (t.kind == Token::Kind::terminal) {
          used.push_back(terminal_of(t));
          r.body.push_back(StringSymbol::term(static_cast<unsigned char>(terminal_of(t))));
        } else {
          r.body.push_back(StringSymbol::var(v.nonterminal_id(t.text)));
        }
      }
      v.rules.push_back(std::move(r));
    } while (ts.accept(Token::Kind::bar));
    end_statement(ts, "after rule");
  }
  if (!first_h) throw Error(errc::syntax, "matrix grammar has no horizontal rules");
  for (std::size_t c = 0; c < m.columns.size(); ++c)
    if (m.vertical[c].rules.empty()) throw Error(errc::syntax, "vertical section " + m.columns[c] + " has no rules");
  auto column_of = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(m.columns.begin(), m.columns.end(), name);
    if (it == m.columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - m.columns.begin());
  };
  StringGrammar& H = m.horizontal;
  for (const auto& n : h.nonterminals)
    if (!column_of(n)) H.nonterminal_id(n);
  for (const RawRule& raw : horizontal) {
    if (column_of(raw.lhs.text)) throw syntax_error(raw.lhs, "column start " + raw.lhs.text + " used as horizontal left part");
    StringRule r{H.nonterminal_id(raw.lhs.text), {}};
    for (const Token& t : raw.body) {
      if (t.kind == Token::Kind::terminal) throw syntax_error(t, "terminal in a horizontal rule");
      if (auto c = column_of(t.text)) r.body.push_back(StringSymbol::term(*c));
      else r.body.push_back(StringSymbol::var(H.nonterminal_id(t.text)));
    }
    H.rules.push_back(std::move(r));
  }
  std::vector<bool> has_rule(H.nonterminals.size(), false);
  for (const StringRule& r : H.rules) has_rule[r.lhs] = true;
  for (std::size_t i = 0; i < H.nonterminals.size(); ++i)
    if (!has_rule[i]) throw Error(errc::syntax, "horizontal symbol " + H.nonterminals[i] + " is neither a rule nor a column");
  const std::string start = h.start ? h.start->text : *first_h;
  auto s = H.find_nonterminal(start);
  if (!s) throw Error(errc::syntax, "start symbol " + start + " has no horizontal rules");
  H.start = *s;
  for (StringGrammar& v : m.vertical) v.start = 0;
  m.terminals = sorted_unique(h.terminals ? *h.terminals : used);
  return m;
}

}  // namespace detail

/// Reads any grammar file; the `%format` line picks the formalism.
inline LoadedGrammar read_grammar(std::string_view text) {
  TokenStream ts(tokenize(text));
  ts.skip_newlines();
  const Token& d = ts.peek();
  if (d.kind != Token::Kind::directive || d.text != "format") throw syntax_error(d, "expected %format as first line");
  ts.next();
  const Token name = ts.expect(Token::Kind::name, "after %format");
  const auto format = parse_format(name.text);
  if (!format) throw syntax_error(name, "unknown format '" + name.text + "'");
  detail::end_statement(ts, "after %format");
  switch (*format) {
    case Format::rtg:
    case Format::tg: return {*format, detail::read_tile_grammar(ts)};
    case Format::ts: return {*format, detail::read_tiling_system(ts)};
    case Format::kolam: return {*format, detail::read_kolam(ts)};
    case Format::prusa: return {*format, detail::read_prusa(ts)};
    case Format::grid: return {*format, detail::read_grid(ts)};
    case Format::matrix: return {*format, detail::read_matrix(ts)};
  }
  throw syntax_error(name, "unknown format");
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::syntax, "cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline LoadedGrammar load_grammar(const std::filesystem::path& path) {
  try {
    return read_grammar(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

inline Picture load_picture(const std::filesystem::path& path) {
  try {
    return parse_picture(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

namespace detail {

inline std::string quoted(char c) { return std::string("'") + c + "'"; }

inline std::string join_terminals(const std::vector<char>& ts) {
  std::string out;
  for (char c : ts) out += " " + quoted(c);
  return out;
}

inline std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

inline std::string write_header(Format f, const std::vector<char>& terminals, const std::vector<std::string>& nts,
                                const std::string& start) {
  std::string out = std::string("%format ") + to_string(f) + "\n";
  out += "%terminals" + join_terminals(terminals) + "\n";
  if (!nts.empty()) out += "%nonterminals" + join_names(nts) + "\n";
  out += "%start " + start + "\n";
  return out;
}

/// Picture with columns padded to equal width, rows on separate lines.
inline std::string write_block(const Picture& p, const SymbolNamer& name, const std::string& indent) {
  std::vector<std::size_t> width(p.cols() + 1, 0);
  for (std::size_t i = 1; i <= p.rows(); ++i)
    for (std::size_t j = 1; j <= p.cols(); ++j) width[j] = std::max(width[j], name(p(i, j)).size());
  std::string out = "{ ";
  for (std::size_t i = 1; i <= p.rows(); ++i) {
    if (i > 1) out += "\n" + indent + "  ";
    for (std::size_t j = 1; j <= p.cols(); ++j) {
      std::string s = name(p(i, j));
      if (j < p.cols()) s.resize(width[j] + 1, ' ');
      out += s;
    }
  }
  return out + " }";
}

inline std::string write_tile(const Tile& t, const SymbolNamer& name) {
  return "[ " + name(t.cells[0]) + " " + name(t.cells[1]) + " / " + name(t.cells[2]) + " " + name(t.cells[3]) + " ]";
}

inline std::string write_tile_union(const VariableRule& r, const SymbolNamer& name, const std::string& indent) {
  std::vector<Tile> from;
  for (const Picture& e : r.exemplars)
    for (const Tile& t : tiles_of(e)) from.push_back(t);
  std::string out;
  if (!r.exemplars.empty() && TileSet(from) == r.tiles) {
    for (std::size_t i = 0; i < r.exemplars.size(); ++i) {
      if (i > 0) out += "\n" + indent + "+ ";
      out += write_block(r.exemplars[i], name, indent);
    }
    return out;
  }
  bool first = true;
  for (const Tile& t : r.tiles) {
    if (!first) out += "\n" + indent + "+ ";
    first = false;
    out += write_tile(t, name);
  }
  return out;
}

inline std::string write_form(const KolamForm& f, const std::vector<std::string>& names) {
  switch (f.op) {
    case KolamForm::Op::terminal: return quoted(f.terminal);
    case KolamForm::Op::nonterminal: return names[f.nonterminal];
    case KolamForm::Op::column: return "(" + write_form(f.parts[0], names) + " || " + write_form(f.parts[1], names) + ")";
    case KolamForm::Op::row: return "(" + write_form(f.parts[0], names) + " -- " + write_form(f.parts[1], names) + ")";
  }
  return "";
}

}  // namespace detail

inline std::string write_tile_grammar(const TileGrammar& g, Format f = Format::rtg) {
  std::string out = detail::write_header(f, g.terminals, g.nonterminals, g.nonterminals[g.start]);
  const SymbolNamer name = g.namer();
  for (const Rule& r : g.rules) {
    const std::string lhs = g.nonterminals[rule_lhs(r)];
    out += lhs + " -> ";
    if (const auto* fx = std::get_if<FixedRule>(&r)) {
      out += detail::quoted(fx->terminal) + "\n";
      continue;
    }
    const auto& v = std::get<VariableRule>(r);
    const auto nts = nonterminals_of(v.tiles);
    if (nts.size() == 1 && v.tiles == chain_tiles(nts.front())) {
      out += name(nts.front()) + "\n";
      continue;
    }
    out += detail::write_tile_union(v, name, std::string(lhs.size() + 4, ' ')) + "\n";
  }
  return out;
}

inline std::string write_tiling_system(const TilingSystem& t) {
  std::string out = "%format ts\n%terminals" + detail::join_terminals(t.terminals) + "\n";
  for (std::size_t i = 0; i < t.gamma.size(); ++i)
    out += "%project " + t.gamma[i] + " -> " + detail::quoted(t.projection[i]) + "\n";
  out += "theta = " + detail::write_tile_union(VariableRule{0, t.theta, t.exemplars}, t.namer(), "        ") + "\n";
  return out;
}

inline std::string write_kolam(const KolamGrammar& g) {
  std::string out = detail::write_header(Format::kolam, g.terminals, g.nonterminals, g.nonterminals[g.start]);
  for (const KolamRule& r : g.rules) out += g.nonterminals[r.lhs] + " -> " + detail::write_form(r.body, g.nonterminals) + "\n";
  return out;
}

inline std::string write_prusa(const PrusaGrammar& g) {
  std::string out = detail::write_header(Format::prusa, g.terminals, g.nonterminals, g.nonterminals[g.start]);
  auto cell = [&](const PrusaCell& c) { return c.is_terminal ? detail::quoted(c.terminal) : g.nonterminals[c.nonterminal]; };
  for (const PrusaRule& r : g.rules) {
    out += g.nonterminals[r.lhs] + " -> ";
    if (r.cells.size() == 1) {
      out += cell(r.cells[0]) + "\n";
      continue;
    }
    out += "{";
    for (std::size_t i = 1; i <= r.rows; ++i) {
      if (i > 1) out += " /";
      for (std::size_t j = 1; j <= r.cols; ++j) out += " " + cell(r.at(i, j));
    }
    out += " }\n";
  }
  return out;
}

inline std::string write_grid(const GridGrammar& g) {
  std::string out = detail::write_header(Format::grid, g.terminals, g.nonterminals, g.nonterminals[g.start]);
  for (const GridRule& r : g.rules) {
    out += g.nonterminals[r.lhs] + " -> ";
    if (r.is_terminal()) {
      out += detail::quoted(r.terminal) + "\n";
      continue;
    }
    out += "[";
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      if (i > 0) out += ",";
      out += r.cells[i].is_terminal ? detail::quoted(r.cells[i].terminal) : g.nonterminals[r.cells[i].nonterminal];
    }
    out += "] k=" + std::to_string(r.k) + "\n";
  }
  return out;
}

inline std::string write_matrix(const MatrixGrammar& m) {
  std::string out = "%format matrix\n%terminals" + detail::join_terminals(m.terminals) + "\n";
  out += "%nonterminals" + detail::join_names(m.horizontal.nonterminals) + "\n";
  out += "%start " + m.horizontal.nonterminals[m.horizontal.start] + "\n%section horizontal\n";
  for (const StringRule& r : m.horizontal.rules) {
    out += m.horizontal.nonterminals[r.lhs] + " ->";
    for (const StringSymbol& s : r.body) out += " " + (s.is_terminal ? m.columns[s.id] : m.horizontal.nonterminals[s.id]);
    out += "\n";
  }
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    out += "%section vertical " + m.columns[c] + "\n";
    const StringGrammar& v = m.vertical[c];
    for (const StringRule& r : v.rules) {
      out += v.nonterminals[r.lhs] + " ->";
      for (const StringSymbol& s : r.body)
        out += " " + (s.is_terminal ? detail::quoted(static_cast<char>(s.id)) : v.nonterminals[s.id]);
      out += "\n";
    }
  }
  return out;
}

inline std::string write_grammar(const LoadedGrammar& g) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TileGrammar>) return write_tile_grammar(x, g.format);
        else if constexpr (std::is_same_v<T, TilingSystem>) return write_tiling_system(x);
        else if constexpr (std::is_same_v<T, KolamGrammar>) return write_kolam(x);
        else if constexpr (std::is_same_v<T, PrusaGrammar>) return write_prusa(x);
        else if constexpr (std::is_same_v<T, GridGrammar>) return write_grid(x);
        else return write_matrix(x);
      },
      g.grammar);
}

}  // namespace picgram
