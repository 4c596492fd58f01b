#pragma once

#include <string>
#include <vector>

#include "picgram/grammar.hpp"
#include "picgram/local_language.hpp"

namespace picgram {

/// Local language over Gamma (symbol nonterminal(i) stands for gamma[i])
/// followed by the pixelwise projection to terminals.
struct TilingSystem {
  std::vector<char> terminals;
  std::vector<std::string> gamma;
  TileSet theta;
  std::vector<char> projection;   // indexed like gamma
  std::vector<Picture> exemplars;  // bordered pictures theta was read from, if any

  friend bool operator==(const TilingSystem&, const TilingSystem&) = default;

  SymbolNamer namer() const {
    return [this](Symbol s) {
      return is_nonterminal(s) && nonterminal_index(s) < gamma.size() ? gamma[nonterminal_index(s)]
                                                                       : default_symbol_name(s);
    };
  }
};

inline void check_tiling_system(const TilingSystem& t) {
  if (t.projection.size() != t.gamma.size()) throw Error(errc::alphabet, "projection is not total on the local alphabet");
  for (char c : t.projection)
    if (std::find(t.terminals.begin(), t.terminals.end(), c) == t.terminals.end())
      throw Error(errc::alphabet, std::string("projection target '") + c + "' is not a terminal");
  for (const Tile& tile : t.theta)
    for (Symbol s : tile.cells)
      if (!is_boundary(s) && (!is_nonterminal(s) || nonterminal_index(s) >= t.gamma.size()))
        throw Error(errc::alphabet, "tile symbol outside the local alphabet");
}

/// Whether some pre-image of p under the projection lies in LOC(theta).
inline bool membership_ts(const TilingSystem& t, const Picture& p, Budget* budget = nullptr) {
  bool found = false;
  for_each_local(
      t.theta, p.rows(), p.cols(), [&](const Picture&) { found = true; return false; },
      [&](std::size_t i, std::size_t j, Symbol s) {
        return is_terminal(p(i, j)) && t.projection[nonterminal_index(s)] == terminal_char(p(i, j));
      },
      budget);
  return found;
}

/// Tile grammar with one variable-size start rule built from theta marked in
/// both chessboard phases, plus one terminal rule per marked symbol.
/// Marked symbol gamma_b sits where row + column is even in the phase whose
/// top-left pixel is black.
inline TileGrammar ts_to_tg(const TilingSystem& t) {
  TileGrammar g;
  g.terminals = t.terminals;
  std::sort(g.terminals.begin(), g.terminals.end());
  // Marked names end in _b or _w, so "S" never clashes.
  g.nonterminals.push_back("S");
  g.start = 0;
  auto marked = [&](Symbol s, bool black) {
    if (is_boundary(s)) return s;
    return nonterminal(g.nonterminal_id(t.gamma[nonterminal_index(s)] + (black ? "_b" : "_w")));
  };
  std::vector<Tile> tiles;
  for (const Tile& tile : t.theta)
    for (bool black : {true, false}) {
      Tile m;
      m.cells[0] = marked(tile.cells[0], black);
      m.cells[1] = marked(tile.cells[1], !black);
      m.cells[2] = marked(tile.cells[2], !black);
      m.cells[3] = marked(tile.cells[3], black);
      tiles.push_back(m);
    }
  VariableRule rule{0, TileSet(tiles), {}};
  // Keep the exemplar form when theta came from exemplars, one per phase.
  for (const Picture& e : t.exemplars)
    for (bool black : {true, false}) {
      Picture m = e;
      for (std::size_t i = 1; i <= e.rows(); ++i)
        for (std::size_t j = 1; j <= e.cols(); ++j) m(i, j) = marked(e(i, j), ((i + j) % 2 == 0) == black);
      rule.exemplars.push_back(std::move(m));
    }
  if (!rule.exemplars.empty()) {
    std::vector<Tile> from_exemplars;
    for (const Picture& e : rule.exemplars)
      for (const Tile& tile : tiles_of(e)) from_exemplars.push_back(tile);
    if (TileSet(from_exemplars) != rule.tiles) rule.exemplars.clear();
  }
  g.rules.push_back(std::move(rule));
  for (std::size_t i = 0; i < t.gamma.size(); ++i)
    for (bool black : {true, false})
      if (auto id = g.find_nonterminal(t.gamma[i] + (black ? "_b" : "_w")))
        g.rules.push_back(FixedRule{*id, t.projection[i]});
  return g;
}

}  // namespace picgram
