#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "picgram/error.hpp"
#include "picgram/picture.hpp"

namespace picgram {

/// Rectangular index region (top, left; bottom, right), 1-based and inclusive.
struct Subdomain {
  std::size_t top = 1;
  std::size_t left = 1;
  std::size_t bottom = 1;
  std::size_t right = 1;

  std::size_t rows() const noexcept { return bottom - top + 1; }
  std::size_t cols() const noexcept { return right - left + 1; }
  std::size_t area() const noexcept { return rows() * cols(); }

  bool contains(std::size_t i, std::size_t j) const noexcept {
    return top <= i && i <= bottom && left <= j && j <= right;
  }
  bool contains(const Subdomain& d) const noexcept {
    return top <= d.top && d.bottom <= bottom && left <= d.left && d.right <= right;
  }
  bool overlaps(const Subdomain& d) const noexcept {
    return top <= d.bottom && d.top <= bottom && left <= d.right && d.left <= right;
  }

  friend auto operator<=>(const Subdomain&, const Subdomain&) = default;
};

/// A slot of the subdomains vector: either a true subdomain or the
/// conventional empty marker, printed as (0,0;0,0).
using SubdomainSlot = std::optional<Subdomain>;

inline Subdomain make_subdomain(std::size_t top, std::size_t left, std::size_t bottom, std::size_t right) {
  if (top < 1 || left < 1 || bottom < top || right < left)
    throw Error(errc::out_of_range, "not a subdomain");
  return Subdomain{top, left, bottom, right};
}

inline Subdomain domain_of(const Picture& p) { return Subdomain{1, 1, p.rows(), p.cols()}; }

inline std::string to_string(const Subdomain& d) {
  return "(" + std::to_string(d.top) + "," + std::to_string(d.left) + ";" + std::to_string(d.bottom) + "," +
         std::to_string(d.right) + ")";
}

inline std::string to_string(const SubdomainSlot& slot) { return slot ? to_string(*slot) : "(0,0;0,0)"; }

/// d ⊕ (a, b). The result must still have positive coordinates.
inline Subdomain translate(const Subdomain& d, long a, long b) {
  auto shift = [](std::size_t x, long by) {
    long v = static_cast<long>(x) + by;
    if (v < 1) throw Error(errc::out_of_range, "translation leaves the positive quadrant");
    return static_cast<std::size_t>(v);
  };
  return Subdomain{shift(d.top, a), shift(d.left, b), shift(d.bottom, a), shift(d.right, b)};
}

inline Picture subpicture(const Picture& p, const Subdomain& d) {
  if (d.top < 1 || d.left < 1 || d.bottom < d.top || d.right < d.left || d.bottom > p.rows() || d.right > p.cols())
    throw Error(errc::out_of_range, "subdomain " + to_string(d) + " outside picture of size (" +
                                        std::to_string(p.rows()) + "," + std::to_string(p.cols()) + ")");
  std::vector<Symbol> cells;
  cells.reserve(d.area());
  for (std::size_t i = d.top; i <= d.bottom; ++i)
    for (std::size_t j = d.left; j <= d.right; ++j) cells.push_back(p(i, j));
  return Picture(d.rows(), d.cols(), std::move(cells));
}

enum class Adjacency { none, horizontal, vertical };

inline const char* to_string(Adjacency a) {
  switch (a) {
    case Adjacency::horizontal: return "horizontal";
    case Adjacency::vertical: return "vertical";
    case Adjacency::none: break;
  }
  return "none";
}

inline bool horizontally_adjacent(const Subdomain& a, const Subdomain& b) noexcept {
  return b.left == a.right + 1 && b.bottom >= a.top && a.bottom >= b.top;
}

inline bool vertically_adjacent(const Subdomain& a, const Subdomain& b) noexcept {
  return b.top == a.bottom + 1 && b.right >= a.left && a.right >= b.left;
}

/// Directional: horizontal means `b` lies immediately right of `a`,
/// vertical means `b` lies immediately below `a`.
inline Adjacency adjacency_kind(const SubdomainSlot& a, const SubdomainSlot& b) {
  if (!a || !b) throw Error(errc::sentinel_argument, "adjacency of the empty subdomain marker is undefined");
  if (horizontally_adjacent(*a, *b)) return Adjacency::horizontal;
  if (vertically_adjacent(*a, *b)) return Adjacency::vertical;
  return Adjacency::none;
}

}  // namespace picgram
