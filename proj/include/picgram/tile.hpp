#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "picgram/error.hpp"
#include "picgram/picture.hpp"

namespace picgram {

/// A 2x2 picture stored row-major: top-left, top-right, bottom-left, bottom-right.
struct Tile {
  std::array<Symbol, 4> cells{};

  Symbol top_left() const noexcept { return cells[0]; }
  Symbol top_right() const noexcept { return cells[1]; }
  Symbol bottom_left() const noexcept { return cells[2]; }
  Symbol bottom_right() const noexcept { return cells[3]; }

  friend auto operator<=>(const Tile&, const Tile&) = default;
};

inline Tile make_tile(Symbol a11, Symbol a12, Symbol a21, Symbol a22) { return Tile{{a11, a12, a21, a22}}; }

/// Three equal non-boundary cells and a fourth different one, in any rotation.
inline bool is_concave(const Tile& t) {
  for (Symbol s : t.cells) {
    if (is_boundary(s)) continue;
    if (std::count(t.cells.begin(), t.cells.end(), s) == 3) return true;
  }
  return false;
}

/// Duplicate-free, sorted set of tiles.
class TileSet {
 public:
  TileSet() = default;
  TileSet(std::initializer_list<Tile> tiles) : tiles_(tiles) { normalize(); }
  explicit TileSet(std::vector<Tile> tiles) : tiles_(std::move(tiles)) { normalize(); }

  bool contains(const Tile& t) const { return std::binary_search(tiles_.begin(), tiles_.end(), t); }
  bool empty() const noexcept { return tiles_.empty(); }
  std::size_t size() const noexcept { return tiles_.size(); }
  auto begin() const noexcept { return tiles_.begin(); }
  auto end() const noexcept { return tiles_.end(); }
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }

  void insert(const Tile& t) {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t);
    if (it == tiles_.end() || *it != t) tiles_.insert(it, t);
  }

  bool is_subset_of(const TileSet& other) const {
    return std::includes(other.tiles_.begin(), other.tiles_.end(), tiles_.begin(), tiles_.end());
  }

  TileSet without(const Tile& t) const {
    TileSet out = *this;
    auto it = std::lower_bound(out.tiles_.begin(), out.tiles_.end(), t);
    if (it != out.tiles_.end() && *it == t) out.tiles_.erase(it);
    return out;
  }

  /// Non-boundary symbols occurring in the tiles, sorted.
  std::vector<Symbol> alphabet() const {
    std::vector<Symbol> out;
    for (const Tile& t : tiles_)
      for (Symbol s : t.cells)
        if (!is_boundary(s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend TileSet operator|(const TileSet& a, const TileSet& b) {
    std::vector<Tile> merged;
    std::set_union(a.tiles_.begin(), a.tiles_.end(), b.tiles_.begin(), b.tiles_.end(), std::back_inserter(merged));
    TileSet out;
    out.tiles_ = std::move(merged);
    return out;
  }

  friend auto operator<=>(const TileSet&, const TileSet&) = default;

 private:
  void normalize() {
    std::sort(tiles_.begin(), tiles_.end());
    tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
  }

  std::vector<Tile> tiles_;
};

/// All 2x2 subpictures of `p`.
inline TileSet tiles_of(const Picture& p) {
  if (p.rows() < 2 || p.cols() < 2)
    throw Error(errc::too_small, "a picture of size (" + std::to_string(p.rows()) + "," + std::to_string(p.cols()) +
                                     ") contains no tiles");
  std::vector<Tile> tiles;
  tiles.reserve((p.rows() - 1) * (p.cols() - 1));
  for (std::size_t i = 1; i < p.rows(); ++i)
    for (std::size_t j = 1; j < p.cols(); ++j) tiles.push_back(make_tile(p(i, j), p(i, j + 1), p(i + 1, j), p(i + 1, j + 1)));
  return TileSet(std::move(tiles));
}

inline bool has_concave_tile(const TileSet& theta) {
  return std::any_of(theta.begin(), theta.end(), [](const Tile& t) { return is_concave(t); });
}

inline std::string to_string(const Tile& t, const SymbolNamer& name = default_symbol_name) {
  return name(t.cells[0]) + " " + name(t.cells[1]) + " / " + name(t.cells[2]) + " " + name(t.cells[3]);
}

}  // namespace picgram
