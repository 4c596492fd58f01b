#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "picgram/grammar.hpp"
#include "picgram/grid.hpp"
#include "picgram/kolam.hpp"
#include "picgram/local_language.hpp"
#include "picgram/matrix.hpp"
#include "picgram/partition.hpp"
#include "picgram/prusa.hpp"

namespace picgram {

enum class Verdict { no, yes, indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

/// Derivation-level membership for arbitrary tile grammars. Results are
/// memoized by picture content, so one instance amortizes over many queries.
class Oracle {
 public:
  static constexpr std::uint64_t kDefaultBudget = 200'000'000;

  explicit Oracle(TileGrammar g, std::uint64_t budget = kDefaultBudget) : g_(std::move(g)), budget_(budget) {}

  const TileGrammar& grammar() const noexcept { return g_; }
  std::uint64_t remaining() const noexcept { return budget_.remaining(); }

  Verdict derives(const Picture& p) { return derives(g_.start, p); }

  Verdict derives(std::size_t nt, const Picture& p) {
    try {
      return derivers(p)[nt] ? Verdict::yes : Verdict::no;
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      return Verdict::indeterminate;
    }
  }

  /// Nonterminals deriving q; throws budget_exceeded when out of nodes.
  const std::vector<bool>& derivers(const Picture& q) {
    if (auto it = memo_.find(q); it != memo_.end()) return it->second;
    const std::size_t n = g_.nonterminals.size();
    std::vector<bool> out(n, false);
    if (q.rows() == 1 && q.cols() == 1 && is_terminal(q(1, 1)))
      for (const Rule& r : g_.rules)
        if (auto* f = std::get_if<FixedRule>(&r); f && f->terminal == terminal_char(q(1, 1))) out[f->lhs] = true;
    // Blocks covering all of q refer back to this same picture, hence the fixpoint.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < g_.rules.size(); ++k) {
        const auto* v = std::get_if<VariableRule>(&g_.rules[k]);
        if (!v || out[v->lhs]) continue;
        if (admits(k, q, out)) {
          out[v->lhs] = true;
          changed = true;
        }
      }
    }
    return memo_.emplace(q, std::move(out)).first->second;
  }

 private:
  /// Strong partitions of the pictures of LOC(omega) with q's size, computed once per size.
  const std::vector<Partition>& shapes(std::size_t rule, std::size_t rows, std::size_t cols) {
    const auto key = std::make_tuple(rule, rows, cols);
    if (auto it = shapes_.find(key); it != shapes_.end()) return it->second;
    std::vector<Partition> found;
    for_each_local(
        std::get<VariableRule>(g_.rules[rule]).tiles, rows, cols,
        [&](const Picture& s) {
          if (auto blocks = strong_partition(s)) found.push_back(std::move(*blocks));
          return true;
        },
        nullptr, &budget_);
    return shapes_.emplace(key, std::move(found)).first->second;
  }

  bool admits(std::size_t rule, const Picture& q, const std::vector<bool>& self) {
    for (const Partition& blocks : shapes(rule, q.rows(), q.cols())) {
      bool ok = true;
      for (const Block& b : blocks) {
        budget_.spend();
        const std::size_t nt = nonterminal_index(b.label);
        ok = b.domain == domain_of(q) ? self[nt] : derivers(subpicture(q, b.domain))[nt];
        if (!ok) break;
      }
      if (ok) return true;
    }
    return false;
  }

  TileGrammar g_;
  Budget budget_;
  std::map<Picture, std::vector<bool>> memo_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Partition>> shapes_;
};

inline Verdict derive_membership_tg(const TileGrammar& g, const Picture& p, std::uint64_t budget = Oracle::kDefaultBudget) {
  return Oracle(g, budget).derives(p);
}

/// Every picture within the bound over the grammar's terminals that the
/// oracle derives. Throws budget_exceeded when any verdict is indeterminate.
inline std::set<Picture> enumerate_language_tg(const TileGrammar& g, SizeBound bound,
                                               std::uint64_t budget = Oracle::kDefaultBudget) {
  Oracle oracle(g, budget);
  std::set<Picture> out;
  std::vector<Symbol> alphabet;
  for (char c : g.terminals) alphabet.push_back(terminal(c));
  for (std::size_t r = 1; r <= bound.max_rows; ++r)
    for (std::size_t c = 1; c <= bound.max_cols; ++c)
      for (const Picture& p : all_pictures(alphabet, r, c)) {
        const Verdict v = oracle.derives(p);
        if (v == Verdict::indeterminate) throw Error(errc::budget_exceeded, "oracle budget exhausted at " + to_slash_text(p));
        if (v == Verdict::yes) out.insert(p);
      }
  return out;
}

inline std::set<Picture> enumerate_source(const KolamGrammar& g, SizeBound b, Budget* budget = nullptr) {
  return enumerate_kolam(g, b, budget);
}
inline std::set<Picture> enumerate_source(const PrusaGrammar& g, SizeBound b, Budget* budget = nullptr) {
  return enumerate_prusa(g, b, budget);
}
inline std::set<Picture> enumerate_source(const GridGrammar& g, SizeBound b, Budget* budget = nullptr) {
  return enumerate_grid(g, b, budget);
}
inline std::set<Picture> enumerate_source(const MatrixGrammar& g, SizeBound b, Budget* budget = nullptr) {
  return enumerate_matrix(g, b, budget);
}

}  // namespace picgram
