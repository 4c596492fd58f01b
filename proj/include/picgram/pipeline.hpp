#pragma once

#include "picgram/io.hpp"

namespace picgram {

/// Kolam grammar for the formalisms that translate into one.
inline KolamGrammar to_kolam(const LoadedGrammar& g) {
  switch (g.format) {
    case Format::kolam: return std::get<KolamGrammar>(g.grammar);
    case Format::grid: return grid_to_kolam(grid_to_nnf(std::get<GridGrammar>(g.grammar)));
    case Format::matrix: return matrix_to_kolam(std::get<MatrixGrammar>(g.grammar));
    default: break;
  }
  throw Error(errc::not_normal_form, std::string("no Kolam translation from format ") + to_string(g.format));
}

/// Tile grammar through the constructive translations; only the tiling
/// system route is expected to leave the regional class.
inline TileGrammar to_tile_grammar(const LoadedGrammar& g) {
  switch (g.format) {
    case Format::rtg:
    case Format::tg: return std::get<TileGrammar>(g.grammar);
    case Format::ts: return ts_to_tg(std::get<TilingSystem>(g.grammar));
    case Format::prusa: return prusa_to_rtg(prusa_to_nnf(std::get<PrusaGrammar>(g.grammar)));
    case Format::kolam:
    case Format::grid:
    case Format::matrix: return kolam_to_rtg(kolam_to_cnf(to_kolam(g)));
  }
  throw Error(errc::syntax, "unknown format");
}

/// Pictures up to the bound in the grammar's own semantics, sorted by size then content.
inline std::set<Picture> generate(const LoadedGrammar& g, SizeBound bound, std::uint64_t budget) {
  Budget b(budget);
  switch (g.format) {
    case Format::rtg:
    case Format::tg: return enumerate_language_tg(std::get<TileGrammar>(g.grammar), bound, budget);
    case Format::ts: {
      const auto& t = std::get<TilingSystem>(g.grammar);
      std::vector<Symbol> alphabet;
      for (char c : t.terminals) alphabet.push_back(terminal(c));
      std::set<Picture> out;
      for (std::size_t r = 1; r <= bound.max_rows; ++r)
        for (std::size_t c = 1; c <= bound.max_cols; ++c)
          for (const Picture& p : all_pictures(alphabet, r, c))
            if (membership_ts(t, p, &b)) out.insert(p);
      return out;
    }
    case Format::kolam: return enumerate_source(std::get<KolamGrammar>(g.grammar), bound, &b);
    case Format::prusa: return enumerate_source(std::get<PrusaGrammar>(g.grammar), bound, &b);
    case Format::grid: return enumerate_source(std::get<GridGrammar>(g.grammar), bound, &b);
    case Format::matrix: return enumerate_source(std::get<MatrixGrammar>(g.grammar), bound, &b);
  }
  return {};
}

}  // namespace picgram
