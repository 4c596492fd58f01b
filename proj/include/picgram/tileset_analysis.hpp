#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "picgram/local_language.hpp"
#include "picgram/partition.hpp"

namespace picgram {

using SymbolPair = std::pair<Symbol, Symbol>;
using Relation = std::set<SymbolPair>;

struct AdjacencyRelations {
  Relation H;
  Relation V;
  Relation A;        // H united with V
  Relation A_prime;  // inverse of H united with V
};

inline AdjacencyRelations adjacency_relations(const TileSet& theta) {
  AdjacencyRelations r;
  for (const Tile& t : theta) {
    if (t.top_left() != t.top_right()) r.H.insert({t.top_left(), t.top_right()});
    if (t.bottom_left() != t.bottom_right()) r.H.insert({t.bottom_left(), t.bottom_right()});
    if (t.top_left() != t.bottom_left()) r.V.insert({t.top_left(), t.bottom_left()});
    if (t.top_right() != t.bottom_right()) r.V.insert({t.top_right(), t.bottom_right()});
  }
  r.A = r.H;
  r.A.insert(r.V.begin(), r.V.end());
  for (const auto& [x, y] : r.H) r.A_prime.insert({y, x});
  r.A_prime.insert(r.V.begin(), r.V.end());
  return r;
}

/// Edges of some directed cycle among non-boundary symbols, in path order; empty if acyclic.
inline std::vector<SymbolPair> find_cycle(const Relation& rel) {
  std::map<Symbol, std::vector<Symbol>> succ;
  for (const auto& [x, y] : rel)
    if (!is_boundary(x) && !is_boundary(y)) succ[x].push_back(y);
  std::map<Symbol, int> state;  // 1 on stack, 2 done
  std::vector<Symbol> stack;
  std::vector<SymbolPair> cycle;
  std::function<bool(Symbol)> dfs = [&](Symbol v) {
    state[v] = 1;
    stack.push_back(v);
    for (Symbol w : succ[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it + 1 != stack.end(); ++it) cycle.push_back({*it, *(it + 1)});
        cycle.push_back({v, w});
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (const auto& [v, _] : succ)
    if (state[v] == 0 && dfs(v)) return cycle;
  return {};
}

inline bool is_simple_regional(const TileSet& theta) {
  if (has_concave_tile(theta)) return false;
  const AdjacencyRelations r = adjacency_relations(theta);
  return find_cycle(r.A).empty() && find_cycle(r.A_prime).empty();
}

/// Every picture of LOC(theta) up to the bound is a regional picture.
inline bool is_regional_up_to(const TileSet& theta, SizeBound bound, Budget* budget = nullptr) {
  for (std::size_t r = 1; r <= bound.max_rows; ++r)
    for (std::size_t c = 1; c <= bound.max_cols; ++c) {
      bool ok = true;
      for_each_local(
          theta, r, c, [&](const Picture& p) { return ok = is_regional_picture(p); }, nullptr, budget);
      if (!ok) return false;
    }
  return true;
}

namespace detail {

/// Tiles of theta in which (x, y) appears as a horizontal (or, for `vertical`, vertical) neighbour pair.
inline std::vector<Tile> witnesses(const TileSet& theta, SymbolPair edge, bool horizontal, bool vertical) {
  std::vector<Tile> out;
  for (const Tile& t : theta) {
    bool w = false;
    if (horizontal)
      w = w || (t.top_left() == edge.first && t.top_right() == edge.second) ||
          (t.bottom_left() == edge.first && t.bottom_right() == edge.second);
    if (vertical)
      w = w || (t.top_left() == edge.first && t.bottom_left() == edge.second) ||
          (t.top_right() == edge.first && t.bottom_right() == edge.second);
    if (w) out.push_back(t);
  }
  return out;
}

}  // namespace detail

/// Splits theta into simple regional tile sets whose local languages
/// together give LOC(theta). Absent when LOC(theta) has a non-regional
/// picture within `bound`.
inline std::optional<std::vector<TileSet>> decompose_regional(const TileSet& theta, SizeBound bound = {4, 4},
                                                              std::size_t max_nodes = 200000) {
  if (is_simple_regional(theta)) return std::vector<TileSet>{theta};
  if (!is_regional_up_to(theta, bound)) return std::nullopt;

  // Concave tiles with a boundary cell never occur in a bordered picture.
  std::vector<Tile> usable;
  for (const Tile& t : theta)
    if (!is_concave(t)) usable.push_back(t);
    else if (std::none_of(t.cells.begin(), t.cells.end(), is_boundary)) usable.push_back(t);

  std::set<TileSet> seen;
  std::vector<TileSet> work{TileSet(usable)}, leaves;
  while (!work.empty()) {
    TileSet cur = std::move(work.back());
    work.pop_back();
    if (!seen.insert(cur).second) continue;
    if (seen.size() > max_nodes) throw Error(errc::budget_exceeded, "decomposition explored too many tile sets");
    const AdjacencyRelations r = adjacency_relations(cur);
    std::vector<SymbolPair> cycle = find_cycle(r.A);
    bool primed = false;
    if (cycle.empty()) {
      cycle = find_cycle(r.A_prime);
      primed = true;
    }
    if (cycle.empty()) {
      leaves.push_back(cur);
      continue;
    }
    // A regional picture cannot realise every edge of the cycle, so each
    // picture avoids all witnesses of at least one edge.
    for (const SymbolPair& e : cycle) {
      std::vector<Tile> w;
      if (!primed) {
        w = detail::witnesses(cur, e, r.H.count(e) > 0, r.V.count(e) > 0);
      } else {
        const SymbolPair back{e.second, e.first};
        w = detail::witnesses(cur, back, r.H.count(back) > 0, false);
        for (const Tile& t : detail::witnesses(cur, e, false, r.V.count(e) > 0)) w.push_back(t);
      }
      TileSet next = cur;
      for (const Tile& t : w) next = next.without(t);
      work.push_back(std::move(next));
    }
  }

  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::vector<TileSet> out;
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < leaves.size() && !dominated; ++b)
      dominated = a != b && leaves[a].is_subset_of(leaves[b]);
    if (!dominated) out.push_back(leaves[a]);
  }
  return out;
}

}  // namespace picgram
