#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "picgram/picture.hpp"
#include "picgram/subdomain.hpp"

namespace picgram {

struct Block {
  Subdomain domain;
  Symbol label;

  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Blocks in raster order of their top-left corners.
using Partition = std::vector<Block>;

/// One block per pixel.
inline Partition unit_partition(const Picture& p) {
  Partition out;
  for (std::size_t i = 1; i <= p.rows(); ++i)
    for (std::size_t j = 1; j <= p.cols(); ++j) out.push_back({Subdomain{i, j, i, j}, p(i, j)});
  return out;
}

/// Blocks are disjoint, cover dom(p), and each is homogeneous with its label.
inline bool is_homogeneous_partition(const Picture& p, const Partition& blocks) {
  std::vector<int> owner(p.area(), 0);
  for (const Block& b : blocks) {
    if (b.domain.bottom > p.rows() || b.domain.right > p.cols()) return false;
    for (std::size_t i = b.domain.top; i <= b.domain.bottom; ++i)
      for (std::size_t j = b.domain.left; j <= b.domain.right; ++j) {
        if (p(i, j) != b.label) return false;
        if (owner[(i - 1) * p.cols() + (j - 1)]++) return false;
      }
  }
  return std::all_of(owner.begin(), owner.end(), [](int n) { return n == 1; });
}

/// Homogeneous and no two adjacent blocks share a label.
inline bool is_strong_partition(const Picture& p, const Partition& blocks) {
  if (!is_homogeneous_partition(p, blocks)) return false;
  for (const Block& a : blocks)
    for (const Block& b : blocks)
      if (&a != &b && a.label == b.label && adjacency_kind(a.domain, b.domain) != Adjacency::none) return false;
  return true;
}

/// The unique strong homogeneous partition of `p`, if any.
inline std::optional<Partition> strong_partition(const Picture& p) {
  const std::size_t m = p.rows(), n = p.cols();
  std::vector<char> taken(p.area(), 0);
  auto is_taken = [&](std::size_t i, std::size_t j) { return taken[(i - 1) * n + (j - 1)] != 0; };
  Partition blocks;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (is_taken(i, j)) continue;
      const Symbol s = p(i, j);
      std::size_t right = j;
      while (right < n && !is_taken(i, right + 1) && p(i, right + 1) == s) ++right;
      std::size_t bottom = i;
      while (bottom < m) {
        bool row_ok = true;
        for (std::size_t c = j; c <= right && row_ok; ++c) row_ok = !is_taken(bottom + 1, c) && p(bottom + 1, c) == s;
        if (!row_ok) break;
        ++bottom;
      }
      for (std::size_t r = i; r <= bottom; ++r)
        for (std::size_t c = j; c <= right; ++c) taken[(r - 1) * n + (c - 1)] = 1;
      blocks.push_back({Subdomain{i, j, bottom, right}, s});
    }
  }
  if (!is_strong_partition(p, blocks)) return std::nullopt;
  return blocks;
}

inline bool has_distinct_labels(const Partition& blocks) {
  std::set<Symbol> seen;
  for (const Block& b : blocks)
    if (!seen.insert(b.label).second) return false;
  return true;
}

/// Admits a homogeneous partition whose blocks all carry distinct labels.
inline bool is_regional_picture(const Picture& p) {
  auto blocks = strong_partition(p);
  return blocks && has_distinct_labels(*blocks);
}

}  // namespace picgram
