#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picgram/grammar.hpp"

namespace picgram {

/// Maps each subdomain (i,j;h,k) of an m x n picture to the set of
/// nonterminals deriving its subpicture.
class RecognitionMatrix {
 public:
  RecognitionMatrix(std::size_t rows, std::size_t cols, std::size_t nonterminals)
      : m_(rows),
        n_(cols),
        nts_(nonterminals),
        words_((nonterminals + 63) / 64),
        bits_(rows * cols * rows * cols * words_, 0),
        order_(rows * cols * rows * cols * nonterminals, 0),
        fill_(rows * cols * rows * cols, 0),
        starts_(rows * cols * words_, 0),
        ends_(rows * cols * words_, 0) {}

  std::size_t rows() const noexcept { return m_; }
  std::size_t cols() const noexcept { return n_; }
  std::size_t nonterminal_count() const noexcept { return nts_; }
  std::size_t words_per_cell() const noexcept { return words_; }

  bool contains(const Subdomain& d, std::size_t nt) const {
    return (bits_[cell(d) * words_ + nt / 64] >> (nt % 64)) & 1u;
  }
  bool contains(std::size_t top, std::size_t left, std::size_t bottom, std::size_t right, std::size_t nt) const {
    return contains(Subdomain{top, left, bottom, right}, nt);
  }

  /// Returns false if already present.
  bool insert(const Subdomain& d, std::size_t nt) {
    const std::size_t c = cell(d);
    std::uint64_t& w = bits_[c * words_ + nt / 64];
    const std::uint64_t bit = std::uint64_t{1} << (nt % 64);
    if (w & bit) return false;
    w |= bit;
    order_[c * nts_ + nt] = ++fill_[c];
    starts_[((d.top - 1) * n_ + d.left - 1) * words_ + nt / 64] |= bit;
    ends_[((d.bottom - 1) * n_ + d.right - 1) * words_ + nt / 64] |= bit;
    return true;
  }

  /// Position of `nt` among the insertions into M(d), 1-based; 0 if absent.
  std::uint32_t order(const Subdomain& d, std::size_t nt) const { return order_[cell(d) * nts_ + nt]; }

  std::vector<std::size_t> entries(const Subdomain& d) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < nts_; ++a)
      if (contains(d, a)) out.push_back(a);
    return out;
  }

  /// Bitset words of nonterminals having some entry whose top-left corner is (i, j).
  const std::uint64_t* starting_at(std::size_t i, std::size_t j) const { return &starts_[((i - 1) * n_ + j - 1) * words_]; }
  /// Same for bottom-right corner (i, j).
  const std::uint64_t* ending_at(std::size_t i, std::size_t j) const { return &ends_[((i - 1) * n_ + j - 1) * words_]; }

 private:
  std::size_t cell(const Subdomain& d) const {
    return (((d.top - 1) * n_ + (d.left - 1)) * m_ + (d.rows() - 1)) * n_ + (d.cols() - 1);
  }

  std::size_t m_, n_, nts_, words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> fill_;
  std::vector<std::uint64_t> starts_;
  std::vector<std::uint64_t> ends_;
};

/// Candidate subdomains inside d for each nonterminal of a rule, in
/// lexicographic order; an empty candidate list holds the single sentinel.
struct SubdomainsVector {
  std::vector<std::size_t> nonterminals;
  std::vector<std::vector<SubdomainSlot>> candidates;
};

inline SubdomainsVector compute_subdomains_vector(const RecognitionMatrix& M, const Subdomain& d,
                                                  const std::vector<std::size_t>& relevant) {
  SubdomainsVector out;
  out.nonterminals = relevant;
  out.candidates.resize(relevant.size());
  for (std::size_t i = d.top; i <= d.bottom; ++i)
    for (std::size_t j = d.left; j <= d.right; ++j)
      for (std::size_t k = i; k <= d.bottom; ++k)
        for (std::size_t l = j; l <= d.right; ++l)
          for (std::size_t a = 0; a < relevant.size(); ++a)
            if (M.contains(i, j, k, l, relevant[a])) out.candidates[a].push_back(Subdomain{i, j, k, l});
  for (auto& list : out.candidates)
    if (list.empty()) list.push_back(std::nullopt);
  return out;
}

/// One block of a rule application: nonterminal index and its subdomain.
struct Placement {
  std::size_t nonterminal = 0;
  Subdomain domain;

  friend auto operator<=>(const Placement&, const Placement&) = default;
};

using Witness = std::vector<Placement>;

/// True iff the placements are pairwise disjoint and cover exactly d.
inline bool covers_exactly(const Witness& w, const Subdomain& d) {
  std::size_t area = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (!d.contains(w[a].domain)) return false;
    area += w[a].domain.area();
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a].domain.overlaps(w[b].domain)) return false;
  }
  return area == d.area();
}

/// Literal scan of the Cartesian product of the subdomains vector in
/// lexicographic order, returning the first assignment that meets every
/// adjacency and border constraint derived from the tile set. Sentinel
/// components violate any constraint they take part in.
inline std::optional<std::vector<SubdomainSlot>> check_rule_exhaustive(const SubdomainsVector& dv,
                                                                       const TileSet& omega, const Subdomain& d) {
  const AdjacencyRelations rel = adjacency_relations(omega);
  const std::size_t n = dv.nonterminals.size();
  auto pos = [&](Symbol s) -> std::optional<std::size_t> {
    if (!is_nonterminal(s)) return std::nullopt;
    auto it = std::find(dv.nonterminals.begin(), dv.nonterminals.end(), nonterminal_index(s));
    if (it == dv.nonterminals.end()) return std::nullopt;
    return static_cast<std::size_t>(it - dv.nonterminals.begin());
  };
  // Unary pins and binary relations, each attached to the later component.
  std::vector<std::vector<std::function<bool(const std::vector<SubdomainSlot>&)>>> checks(n);
  auto add_pin = [&](std::size_t a, auto pred) {
    checks[a].push_back([a, pred](const std::vector<SubdomainSlot>& s) { return s[a] && pred(*s[a]); });
  };
  auto add_pair = [&](std::size_t a, std::size_t b, bool horizontal) {
    checks[std::max(a, b)].push_back([a, b, horizontal](const std::vector<SubdomainSlot>& s) {
      if (!s[a] || !s[b]) return false;
      const Subdomain &x = *s[a], &y = *s[b];
      if (horizontal) return y.left == x.right + 1 && y.bottom >= x.top && x.bottom >= y.top;
      return y.top == x.bottom + 1 && y.right >= x.left && x.right >= y.left;
    });
  };
  for (bool horizontal : {true, false}) {
    for (const auto& [x, y] : horizontal ? rel.H : rel.V) {
      auto px = pos(x), py = pos(y);
      if (is_boundary(x) && py) {
        if (horizontal) add_pin(*py, [l = d.left](const Subdomain& s) { return s.left == l; });
        else add_pin(*py, [t = d.top](const Subdomain& s) { return s.top == t; });
      } else if (px && is_boundary(y)) {
        if (horizontal) add_pin(*px, [r = d.right](const Subdomain& s) { return s.right == r; });
        else add_pin(*px, [b = d.bottom](const Subdomain& s) { return s.bottom == b; });
      } else if (px && py) {
        add_pair(*px, *py, horizontal);
      }
    }
  }
  std::vector<SubdomainSlot> assign(n);
  std::function<bool(std::size_t)> scan = [&](std::size_t k) {
    if (k == n) return true;
    for (const SubdomainSlot& s : dv.candidates[k]) {
      assign[k] = s;
      bool ok = true;
      for (const auto& c : checks[k])
        if (!(ok = c(assign))) break;
      if (ok && scan(k + 1)) return true;
    }
    return false;
  };
  if (n == 0 || !scan(0)) return std::nullopt;
  return assign;
}

/// A variable-size rule prepared for the backtracking search.
struct CompiledRule {
  struct Label {
    std::size_t nonterminal = 0;
    bool left_border = false, left_inner = false;
    bool right_border = false, right_inner = false;
    bool top_border = false, top_inner = false;
    bool bottom_border = false, bottom_inner = false;
    bool interior = false;
    std::vector<std::uint64_t> right_of;  // labels allowed right after this block
    std::vector<std::uint64_t> below;     // labels allowed right below this block
  };

  std::size_t rule_index = 0;
  std::size_t lhs = 0;
  TileSet tiles;
  std::vector<std::size_t> nonterminals;
  std::vector<Label> labels;
  std::vector<std::uint64_t> top_left;
  std::vector<std::uint64_t> bottom_right;
  bool may_be_single_block = false;
};

inline CompiledRule compile_rule(const VariableRule& r, std::size_t index, std::size_t nonterminal_count) {
  const std::size_t words = (nonterminal_count + 63) / 64;
  auto set_bit = [](std::vector<std::uint64_t>& v, std::size_t nt) { v[nt / 64] |= std::uint64_t{1} << (nt % 64); };
  CompiledRule c;
  c.rule_index = index;
  c.lhs = r.lhs;
  c.tiles = r.tiles;
  c.top_left.assign(words, 0);
  c.bottom_right.assign(words, 0);
  for (Symbol s : nonterminals_of(r.tiles)) {
    CompiledRule::Label l;
    l.nonterminal = nonterminal_index(s);
    l.right_of.assign(words, 0);
    l.below.assign(words, 0);
    c.nonterminals.push_back(l.nonterminal);
    c.labels.push_back(std::move(l));
  }
  auto label = [&](Symbol s) -> CompiledRule::Label* {
    for (auto& l : c.labels)
      if (is_nonterminal(s) && l.nonterminal == nonterminal_index(s)) return &l;
    return nullptr;
  };
  auto pair = [&](Symbol x, Symbol y, bool horizontal) {
    if (x == y) return;
    if (auto* lx = label(x)) {
      if (is_boundary(y)) (horizontal ? lx->right_border : lx->bottom_border) = true;
      else {
        (horizontal ? lx->right_inner : lx->bottom_inner) = true;
        set_bit(horizontal ? lx->right_of : lx->below, nonterminal_index(y));
      }
    }
    if (auto* ly = label(y)) {
      if (is_boundary(x)) (horizontal ? ly->left_border : ly->top_border) = true;
      else (horizontal ? ly->left_inner : ly->top_inner) = true;
    }
  };
  for (const Tile& t : r.tiles) {
    pair(t.top_left(), t.top_right(), true);
    pair(t.bottom_left(), t.bottom_right(), true);
    pair(t.top_left(), t.bottom_left(), false);
    pair(t.top_right(), t.bottom_right(), false);
    if (auto* l = label(t.top_left()); l && t.top_right() == t.top_left() && t.bottom_left() == t.top_left() &&
                                       t.bottom_right() == t.top_left())
      l->interior = true;
    if (is_boundary(t.top_left()) && is_boundary(t.top_right()) && is_boundary(t.bottom_left()) &&
        is_nonterminal(t.bottom_right()))
      set_bit(c.top_left, nonterminal_index(t.bottom_right()));
    if (is_nonterminal(t.top_left()) && is_boundary(t.top_right()) && is_boundary(t.bottom_left()) &&
        is_boundary(t.bottom_right()))
      set_bit(c.bottom_right, nonterminal_index(t.top_left()));
  }
  for (std::size_t w = 0; w < words; ++w)
    if (c.top_left[w] & c.bottom_right[w]) c.may_be_single_block = true;
  return c;
}

namespace detail {

inline bool intersects(const std::uint64_t* a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

inline bool has_bit(const std::uint64_t* a, std::size_t nt) { return (a[nt / 64] >> (nt % 64)) & 1u; }

/// Raster-order block placement over the bordered subdomain: the first
/// uncovered pixel must be the top-left corner of a new block.
class RuleSearch {
 public:
  using Accept = std::function<bool(std::size_t nonterminal, const Subdomain&)>;

  RuleSearch(const RecognitionMatrix& M, const CompiledRule& rule, const Subdomain& d, Accept accept)
      : M_(M), rule_(rule), d_(d), accept_(std::move(accept)), w_(d.cols() + 2),
        grid_((d.rows() + 2) * (d.cols() + 2), kBoundary), used_(rule.labels.size(), false) {
    for (std::size_t i = 1; i <= d.rows(); ++i)
      for (std::size_t j = 1; j <= d.cols(); ++j) at(i, j) = kUnknown;
  }

  std::optional<Witness> run() {
    if (!fill(1)) return std::nullopt;
    return blocks_;
  }

 private:
  static constexpr Symbol kUnknown{0};

  Symbol& at(std::size_t gi, std::size_t gj) { return grid_[gi * w_ + gj]; }

  bool window_ok(std::size_t gi, std::size_t gj) {
    const Symbol c[4] = {at(gi, gj), at(gi, gj + 1), at(gi + 1, gj), at(gi + 1, gj + 1)};
    for (const Tile& t : rule_.tiles) {
      bool ok = true;
      for (int k = 0; k < 4 && ok; ++k) ok = c[k] == kUnknown ? !is_boundary(t.cells[k]) : c[k] == t.cells[k];
      if (ok) return true;
    }
    return false;
  }

  bool windows_ok(std::size_t r, std::size_t c, std::size_t r2, std::size_t c2) {
    for (std::size_t gi = r - 1; gi <= r2; ++gi)
      for (std::size_t gj = c - 1; gj <= c2; ++gj) {
        if (gi >= r && gi < r2 && gj >= c && gj < c2) continue;
        if (!window_ok(gi, gj)) return false;
      }
    return true;
  }

  // Grid coordinates are 1-based inside the frame; picture pixel = grid + offset.
  bool fill(std::size_t from) {
    const std::size_t rows = d_.rows(), cols = d_.cols();
    std::size_t k = from;
    while (k <= rows * cols && at((k - 1) / cols + 1, (k - 1) % cols + 1) != kUnknown) ++k;
    if (k > rows * cols) return true;
    const std::size_t r = (k - 1) / cols + 1, c = (k - 1) % cols + 1;
    const std::size_t pi = d_.top + r - 1, pj = d_.left + c - 1;
    const std::uint64_t* startable = M_.starting_at(pi, pj);
    for (std::size_t li = 0; li < rule_.labels.size(); ++li) {
      if (used_[li]) continue;
      const auto& L = rule_.labels[li];
      if (!has_bit(startable, L.nonterminal)) continue;
      if (c == 1 ? !L.left_border : !L.left_inner) continue;
      if (r == 1 ? !L.top_border : !L.top_inner) continue;
      const Symbol sym = nonterminal(L.nonterminal);
      std::size_t limit = cols;
      for (std::size_t r2 = r; r2 <= rows; ++r2) {
        for (std::size_t j = c; j <= limit; ++j)
          if (at(r2, j) != kUnknown) {
            limit = j - 1;
            break;
          }
        if (limit < c) break;
        if (r2 == rows ? !L.bottom_border : !L.bottom_inner) continue;
        for (std::size_t c2 = c; c2 <= limit; ++c2) {
          if (c2 == cols ? !L.right_border : !L.right_inner) continue;
          if (r2 > r && c2 > c && !L.interior) continue;
          const Subdomain block{pi, pj, d_.top + r2 - 1, d_.left + c2 - 1};
          if (!M_.contains(block, L.nonterminal)) continue;
          if (accept_ && !accept_(L.nonterminal, block)) continue;
          if (c2 < cols && at(r, c2 + 1) == kUnknown &&
              !intersects(M_.starting_at(pi, block.right + 1), L.right_of))
            continue;
          if (r2 < rows && at(r2 + 1, c) == kUnknown && (c == 1 || at(r2 + 1, c - 1) != kUnknown) &&
              !intersects(M_.starting_at(block.bottom + 1, pj), L.below))
            continue;
          for (std::size_t i = r; i <= r2; ++i)
            for (std::size_t j = c; j <= c2; ++j) at(i, j) = sym;
          used_[li] = true;
          blocks_.push_back({L.nonterminal, block});
          if (windows_ok(r, c, r2, c2) && fill(k + 1)) return true;
          blocks_.pop_back();
          used_[li] = false;
          for (std::size_t i = r; i <= r2; ++i)
            for (std::size_t j = c; j <= c2; ++j) at(i, j) = kUnknown;
        }
      }
    }
    return false;
  }

  const RecognitionMatrix& M_;
  const CompiledRule& rule_;
  Subdomain d_;
  Accept accept_;
  std::size_t w_;
  std::vector<Symbol> grid_;
  std::vector<bool> used_;
  Witness blocks_;
};

}  // namespace detail

/// Finds blocks inside d, each labelled by a nonterminal of the rule that
/// derives it according to M, whose labelled picture lies in LOC of the rule.
/// `accept` may veto individual blocks.
inline std::optional<Witness> check_rule(const RecognitionMatrix& M, const CompiledRule& rule, const Subdomain& d,
                                         detail::RuleSearch::Accept accept = nullptr) {
  if (!detail::intersects(M.starting_at(d.top, d.left), rule.top_left)) return std::nullopt;
  if (!detail::intersects(M.ending_at(d.bottom, d.right), rule.bottom_right)) return std::nullopt;
  return detail::RuleSearch(M, rule, d, std::move(accept)).run();
}

struct ParseOptions {
  /// Also run the exhaustive scan on every rule evaluation and record disagreements.
  bool crosscheck = false;
};

struct ParseStats {
  std::size_t evaluations = 0;
  std::size_t crosschecked = 0;
  std::size_t disagreements = 0;
  std::size_t coverage_violations = 0;
  std::vector<std::string> log;
};

/// Generalized CKY recognizer for a regional tile grammar.
class Parser {
 public:
  explicit Parser(const TileGrammar& g) : source_(g) {
    auto [validated, report] = validate_grammar(g);
    if (!report.rtg_valid) throw Error(errc::invalid_grammar, "grammar is not a regional tile grammar");
    report_ = report;
    bool has_chain = std::any_of(validated.rules.begin(), validated.rules.end(), is_full_chain_rule);
    try {
      grammar_ = eliminate_chain_rules(validated);
      if (has_chain) notices_.push_back("chain rules eliminated before parsing");
    } catch (const Error& e) {
      if (e.code() != errc::degenerate_grammar) throw;
      grammar_ = validated;
      empty_ = true;
      notices_.push_back(e.what());
    }
    for (std::size_t k = 0; k < grammar_.rules.size(); ++k) {
      if (const auto* f = std::get_if<FixedRule>(&grammar_.rules[k])) fixed_.push_back(*f);
      else compiled_.push_back(compile_rule(std::get<VariableRule>(grammar_.rules[k]), k, grammar_.nonterminals.size()));
    }
  }

  /// The grammar actually parsed (validated, chain-free); matrix indices refer to it.
  const TileGrammar& grammar() const noexcept { return grammar_; }
  const ValidationReport& report() const noexcept { return report_; }
  const std::vector<std::string>& notices() const noexcept { return notices_; }
  const std::vector<CompiledRule>& compiled_rules() const noexcept { return compiled_; }
  bool empty_language() const noexcept { return empty_; }

  RecognitionMatrix parse(const Picture& p, const ParseOptions& opt = {}, ParseStats* stats = nullptr) const {
    const std::size_t m = p.rows(), n = p.cols();
    RecognitionMatrix M(m, n, grammar_.nonterminals.size());
    if (empty_) return M;
    for (std::size_t v = 1; v <= m; ++v)
      for (std::size_t h = 1; h <= n; ++h)
        for (std::size_t i = 1; i + v - 1 <= m; ++i)
          for (std::size_t j = 1; j + h - 1 <= n; ++j) fill_cell(M, p, Subdomain{i, j, i + v - 1, j + h - 1}, opt, stats);
    return M;
  }

  bool accepts(const RecognitionMatrix& M) const {
    return !empty_ && M.contains(Subdomain{1, 1, M.rows(), M.cols()}, grammar_.start);
  }
  bool accepts(const Picture& p) const { return accepts(parse(p)); }

 private:
  void fill_cell(RecognitionMatrix& M, const Picture& p, const Subdomain& d, const ParseOptions& opt,
                 ParseStats* stats) const {
    if (d.area() == 1)
      for (const FixedRule& f : fixed_)
        if (terminal(f.terminal) == p(d.top, d.left)) M.insert(d, f.lhs);
    bool first = true, added = true;
    while (added) {
      added = false;
      for (const CompiledRule& r : compiled_) {
        if (!first && !r.may_be_single_block) continue;
        if (M.contains(d, r.lhs)) continue;
        const bool found = evaluate(M, r, d, opt, stats);
        if (found) added = M.insert(d, r.lhs) || added;
      }
      first = false;
    }
  }

  bool evaluate(const RecognitionMatrix& M, const CompiledRule& r, const Subdomain& d, const ParseOptions& opt,
                ParseStats* stats) const {
    auto w = check_rule(M, r, d);
    if (stats) ++stats->evaluations;
    if (w && !covers_exactly(*w, d)) report_coverage(stats, r, d, "search");
    if (opt.crosscheck) {
      auto slots = check_rule_exhaustive(compute_subdomains_vector(M, d, r.nonterminals), r.tiles, d);
      if (slots) {
        Witness lit;
        for (std::size_t a = 0; a < slots->size(); ++a)
          if ((*slots)[a]) lit.push_back({r.nonterminals[a], *(*slots)[a]});
        if (!covers_exactly(lit, d)) report_coverage(stats, r, d, "scan");
      }
      if (stats) {
        ++stats->crosschecked;
        if (slots.has_value() != w.has_value()) {
          ++stats->disagreements;
          stats->log.push_back("rule " + std::to_string(r.rule_index) + " at " + to_string(d) + ": search " +
                               (w ? "accepts" : "rejects") + ", scan " + (slots ? "accepts" : "rejects"));
        }
      }
    }
    return w.has_value();
  }

  static void report_coverage([[maybe_unused]] ParseStats* stats, const CompiledRule& r, const Subdomain& d,
                              const char* mode) {
    std::string msg = std::string(mode) + " witness for rule " + std::to_string(r.rule_index) + " at " + to_string(d) +
                      " does not partition the subdomain";
    if (stats) {
      ++stats->coverage_violations;
      stats->log.push_back(msg);
    }
#ifdef PICGRAM_CHECK_WITNESSES
    if (std::string(mode) == "search") throw std::logic_error(msg);
#endif
  }

  TileGrammar source_;
  TileGrammar grammar_;
  ValidationReport report_;
  std::vector<std::string> notices_;
  std::vector<FixedRule> fixed_;
  std::vector<CompiledRule> compiled_;
  bool empty_ = false;
};

inline RecognitionMatrix parse(const TileGrammar& g, const Picture& p) { return Parser(g).parse(p); }

inline bool is_member(const TileGrammar& g, const Picture& p) {
  Parser parser(g);
  return parser.accepts(parser.parse(p));
}

struct DerivationNode {
  std::size_t nonterminal = 0;
  Subdomain domain;
  std::optional<std::size_t> rule;  // index into the parsed grammar's rules
  std::optional<char> terminal;
  std::vector<DerivationNode> children;
};

namespace detail {

inline std::optional<DerivationNode> derive_top_down(const Parser& parser, const Picture& p,
                                                     const RecognitionMatrix& M, std::size_t nt, const Subdomain& d) {
  const TileGrammar& g = parser.grammar();
  DerivationNode node;
  node.nonterminal = nt;
  node.domain = d;
  if (d.area() == 1)
    for (std::size_t k = 0; k < g.rules.size(); ++k)
      if (const auto* f = std::get_if<FixedRule>(&g.rules[k]); f && f->lhs == nt && terminal(f->terminal) == p(d.top, d.left)) {
        node.rule = k;
        node.terminal = f->terminal;
        return node;
      }
  const std::uint32_t rank = M.order(d, nt);
  for (const CompiledRule& r : parser.compiled_rules()) {
    if (r.lhs != nt) continue;
    // A block covering all of d must have entered M(d) earlier, which keeps the tree finite.
    auto w = check_rule(M, r, d, [&](std::size_t y, const Subdomain& b) { return b != d || M.order(d, y) < rank; });
    if (!w) continue;
    node.rule = r.rule_index;
    for (const Placement& pl : *w) {
      auto child = derive_top_down(parser, p, M, pl.nonterminal, pl.domain);
      if (!child) throw std::logic_error("recognition matrix entry without derivation");
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  return std::nullopt;
}

}  // namespace detail

/// A derivation tree of p from the start symbol, if p is accepted.
inline std::optional<DerivationNode> extract_derivation(const Parser& parser, const Picture& p,
                                                        const RecognitionMatrix& M) {
  if (!parser.accepts(M)) return std::nullopt;
  return detail::derive_top_down(parser, p, M, parser.grammar().start, domain_of(p));
}

}  // namespace picgram
