#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "picgram/error.hpp"
#include "picgram/tile.hpp"

namespace picgram {

/// Node counter shared by the exponential searches; throws once exhausted.
class Budget {
 public:
  explicit Budget(std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max()) : remaining_(nodes) {}

  void spend(std::uint64_t n = 1) {
    if (n > remaining_) {
      remaining_ = 0;
      throw Error(errc::budget_exceeded, "search budget exhausted");
    }
    remaining_ -= n;
  }

  std::uint64_t remaining() const noexcept { return remaining_; }

 private:
  std::uint64_t remaining_;
};

/// Inclusive upper bound on picture sizes for the enumerating searches.
struct SizeBound {
  std::size_t max_rows = 3;
  std::size_t max_cols = 3;
};

inline bool in_local_language(const Picture& p, const TileSet& theta) {
  return tiles_of(bordered(p)).is_subset_of(theta);
}

/// Calls `visit` on every picture of LOC(theta) of the given size, in
/// lexicographic order of cells. `allowed(i, j, s)` may further restrict
/// the symbol at pixel (i, j). Returning false from `visit` stops the walk.
inline void for_each_local(const TileSet& theta, std::size_t rows, std::size_t cols,
                           const std::function<bool(const Picture&)>& visit,
                           const std::function<bool(std::size_t, std::size_t, Symbol)>& allowed = nullptr,
                           Budget* budget = nullptr) {
  if (rows == 0 || cols == 0) throw Error(errc::empty_picture, "picture dimensions must be positive");
  const std::vector<Symbol> alphabet = theta.alphabet();
  if (alphabet.empty()) return;
  Picture grid(rows + 2, cols + 2, kBoundary);
  auto window_ok = [&](std::size_t i, std::size_t j) {
    return theta.contains(make_tile(grid(i, j), grid(i, j + 1), grid(i + 1, j), grid(i + 1, j + 1)));
  };
  // Cells are addressed in the framed grid, so picture pixel (i, j) sits at (i + 1, j + 1).
  bool stop = false;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == rows * cols) {
      Picture out(rows, cols, kBoundary);
      for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) out(i, j) = grid(i + 1, j + 1);
      if (!visit(out)) stop = true;
      return;
    }
    const std::size_t i = k / cols + 2, j = k % cols + 2;
    for (Symbol s : alphabet) {
      if (stop) return;
      if (budget) budget->spend();
      if (allowed && !allowed(i - 1, j - 1, s)) continue;
      grid(i, j) = s;
      if (!window_ok(i - 1, j - 1)) continue;
      if (j == cols + 1 && !window_ok(i - 1, j)) continue;
      if (i == rows + 1 && !window_ok(i, j - 1)) continue;
      if (i == rows + 1 && j == cols + 1 && !window_ok(i, j)) continue;
      fill(k + 1);
    }
    grid(i, j) = kBoundary;
  };
  fill(0);
}

/// All pictures of exactly (rows, cols) in LOC(theta), sorted.
inline std::vector<Picture> enumerate_local(const TileSet& theta, std::size_t rows, std::size_t cols,
                                            Budget* budget = nullptr) {
  std::vector<Picture> out;
  for_each_local(
      theta, rows, cols, [&](const Picture& p) { out.push_back(p); return true; }, nullptr, budget);
  return out;
}

}  // namespace picgram
