#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace picgram;

namespace {

TileGrammar from_text(const std::string& text) { return std::get<TileGrammar>(read_grammar(text).grammar); }

std::vector<TileSet> bodies_of(const TileGrammar& g, const std::string& lhs) {
  std::vector<TileSet> out;
  const std::size_t nt = *g.find_nonterminal(lhs);
  for (const Rule& r : g.rules)
    if (const auto* v = std::get_if<VariableRule>(&r); v && v->lhs == nt) out.push_back(v->tiles);
  return out;
}

// Tile sets with nonterminals replaced by names, so grammars with different numberings compare.
std::multiset<std::string> named_bodies(const TileGrammar& g, const std::string& lhs) {
  std::multiset<std::string> out;
  for (const TileSet& t : bodies_of(g, lhs)) {
    std::string text;
    for (const Tile& tile : t) text += to_string(tile, g.namer()) + ";";
    out.insert(text);
  }
  return out;
}

const char* kBreakable =
    "%format tg\n%start S\n"
    "S -> { # # # # / # A B # / # # # # } + { # # # / # B # / # A # / # # # }\n"
    "A -> 'a'\nB -> 'b'\n";

}  // namespace

TEST(Validate, G1IsUnchangedAndValid) {
  const TileGrammar g1 = corpus::tg("g1.rtg");
  auto [out, report] = validate_grammar(g1);
  EXPECT_TRUE(report.rtg_valid);
  EXPECT_EQ(out, g1);
}

TEST(Validate, G3IsNotRegional) {
  auto [out, report] = validate_grammar(corpus::tg("g3.tg"));
  EXPECT_FALSE(report.rtg_valid);
}

TEST(Validate, BreakableCycleIsSplitPreservingLanguage) {
  const TileGrammar g = from_text(kBreakable);
  auto [out, report] = validate_grammar(g);
  EXPECT_TRUE(report.rtg_valid);
  EXPECT_GE(bodies_of(out, "S").size(), 2u);
  const auto before = enumerate_language_tg(g, {4, 4});
  EXPECT_EQ(before, (std::set<Picture>{pic("ab"), pic("b/a")}));
  EXPECT_EQ(enumerate_language_tg(out, {4, 4}), before);
}

TEST(Validate, ValidOutputHasOnlySimpleRegionalBodies) {
  for (const char* name : {"g1.rtg", "g2.rtg", "g4.rtg"}) {
    auto [out, report] = validate_grammar(corpus::tg(name));
    ASSERT_TRUE(report.rtg_valid) << name;
    for (const Rule& r : out.rules)
      if (const auto* v = std::get_if<VariableRule>(&r)) {
        EXPECT_TRUE(is_simple_regional(v->tiles)) << name;
      }
  }
}

TEST(Validate, ConcaveBodyIsRejected) {
  try {
    from_text("%format tg\n%start S\nS -> [ B B / C B ]\nB -> 'b'\nC -> 'c'\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::concave_tile);
  }
}

TEST(ChainRules, Recognition) {
  const TileGrammar g = from_text("%format tg\n%start A\nA -> B\nB -> 'b'\n");
  EXPECT_TRUE(is_chain_rule(g.rules[0]));
  EXPECT_FALSE(is_chain_rule(g.rules[1]));
  EXPECT_FALSE(is_chain_rule(corpus::tg("g1.rtg").rules[0]));
  const VariableRule explicit_chain{0, tiles_of(bordered(Picture(2, 2, nonterminal(1)))), {}};
  EXPECT_TRUE(is_chain_rule(explicit_chain));
}

TEST(ChainRules, G4InheritsSPBodies) {
  const TileGrammar g4 = corpus::tg("g4.rtg");
  const TileGrammar out = eliminate_chain_rules(g4);
  for (const Rule& r : out.rules) EXPECT_FALSE(is_full_chain_rule(r));
  const auto sp = bodies_of(out, "S_P");
  ASSERT_EQ(sp.size(), 2u);
  EXPECT_EQ(named_bodies(out, "P1"), named_bodies(out, "S_P"));
  EXPECT_EQ(named_bodies(out, "P2"), named_bodies(out, "S_P"));
}

TEST(ChainRules, ChainFreeGrammarUnchanged) {
  const TileGrammar g1 = corpus::tg("g1.rtg");
  EXPECT_EQ(eliminate_chain_rules(g1), g1);
}

TEST(ChainRules, MutualChainsCollapseToTerminalRules) {
  const TileGrammar g = from_text("%format tg\n%start A\nA -> B\nB -> A\nB -> 'a'\n");
  const TileGrammar out = eliminate_chain_rules(g);
  for (const Rule& r : out.rules) EXPECT_TRUE(std::holds_alternative<FixedRule>(r));
  const auto before = enumerate_language_tg(g, {2, 2});
  EXPECT_EQ(before, std::set<Picture>{pic("a")});
  EXPECT_EQ(enumerate_language_tg(out, {2, 2}), before);
}

TEST(ChainRules, CycleWithoutExitIsDegenerate) {
  const TileGrammar g = from_text("%format tg\n%start A\nA -> B\nB -> A\nC -> 'a'\n");
  try {
    eliminate_chain_rules(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_grammar);
  }
}

TEST(ChainRules, Idempotent) {
  for (const char* name : {"g1.rtg", "g2.rtg", "g4.rtg"}) {
    const TileGrammar once = eliminate_chain_rules(validate_grammar(corpus::tg(name)).first);
    EXPECT_EQ(eliminate_chain_rules(once), once) << name;
  }
}

TEST(LanguagePreservation, CorpusGrammars) {
  struct Case {
    const char* name;
    SizeBound bound;
  };
  for (const Case& c : {Case{"g1.rtg", {3, 3}}, Case{"g2.rtg", {3, 3}}, Case{"g4.rtg", {2, 6}}}) {
    const TileGrammar g = corpus::tg(c.name);
    const TileGrammar normalized = eliminate_chain_rules(validate_grammar(g).first);
    EXPECT_EQ(enumerate_language_tg(g, c.bound), enumerate_language_tg(normalized, c.bound)) << c.name;
  }
}

TEST(CanonicalForm, RenumberingDoesNotMatter) {
  TileGrammar a = from_text("%format tg\n%start S\nS -> { # # # # / # A B # / # # # # }\nA -> 'a'\nB -> 'b'\n");
  TileGrammar b = from_text(
      "%format tg\n%nonterminals B A S\n%start S\nS -> { # # # # / # A B # / # # # # }\nA -> 'a'\nB -> 'b'\n");
  EXPECT_NE(a, b);
  EXPECT_TRUE(same_up_to_numbering(a, b));
  b.rules.pop_back();
  EXPECT_FALSE(same_up_to_numbering(a, b));
}
