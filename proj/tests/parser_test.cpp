#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"

using namespace picgram;

namespace {

const TileGrammar kG1 = corpus::tg("g1.rtg");
const TileGrammar kG2 = corpus::tg("g2.rtg");

std::size_t nt(const TileGrammar& g, const std::string& name) { return *g.find_nonterminal(name); }

CompiledRule compiled_body(const TileGrammar& g, const std::string& lhs) {
  for (std::size_t k = 0; k < g.rules.size(); ++k)
    if (const auto* v = std::get_if<VariableRule>(&g.rules[k]); v && v->lhs == nt(g, lhs))
      return compile_rule(*v, k, g.nonterminals.size());
  throw std::logic_error("no variable rule for " + lhs);
}

bool contains_slot(const std::vector<SubdomainSlot>& list, const Subdomain& d) {
  return std::find(list.begin(), list.end(), SubdomainSlot{d}) != list.end();
}

void collect_leaves(const DerivationNode& n, Picture& out) {
  if (n.terminal) {
    ASSERT_EQ(n.domain.area(), 1u);
    out(n.domain.top, n.domain.left) = terminal(*n.terminal);
    return;
  }
  Witness blocks;
  for (const DerivationNode& c : n.children) blocks.push_back({c.nonterminal, c.domain});
  EXPECT_TRUE(covers_exactly(blocks, n.domain));
  for (const DerivationNode& c : n.children) collect_leaves(c, out);
}

// Every matrix entry agrees with derivation-level membership of its subpicture.
void expect_matrix_matches_oracle(const Parser& parser, Oracle& oracle, const Picture& p) {
  const RecognitionMatrix M = parser.parse(p);
  const std::size_t n = parser.grammar().nonterminals.size();
  for (std::size_t i = 1; i <= p.rows(); ++i)
    for (std::size_t j = 1; j <= p.cols(); ++j)
      for (std::size_t k = i; k <= p.rows(); ++k)
        for (std::size_t l = j; l <= p.cols(); ++l) {
          const Subdomain d{i, j, k, l};
          const auto& derivers = oracle.derivers(subpicture(p, d));
          for (std::size_t a = 0; a < n; ++a)
            ASSERT_EQ(M.contains(d, a), static_cast<bool>(derivers[a]))
                << to_slash_text(p) << " at " << to_string(d) << " for " << parser.grammar().nonterminals[a];
        }
}

}  // namespace

TEST(SubdomainsVector, G1MidParse) {
  const Parser parser(kG1);
  const RecognitionMatrix M = parser.parse(corpus::picture("p1.pic"));
  const auto dv = compute_subdomains_vector(M, make_subdomain(3, 1, 3, 2), {nt(kG1, "X"), nt(kG1, "A")});
  for (const auto& list : dv.candidates) {
    EXPECT_TRUE(contains_slot(list, make_subdomain(3, 1, 3, 1)));
    EXPECT_TRUE(contains_slot(list, make_subdomain(3, 2, 3, 2)));
  }
}

TEST(SubdomainsVector, EmptyMatrixGivesSentinels) {
  const RecognitionMatrix M(1, 1, 3);
  const auto dv = compute_subdomains_vector(M, make_subdomain(1, 1, 1, 1), {0, 1, 2});
  for (const auto& list : dv.candidates) EXPECT_EQ(list, std::vector<SubdomainSlot>{std::nullopt});
}

TEST(SubdomainsVector, FourUnitCandidates) {
  RecognitionMatrix M(2, 2, 2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) M.insert(make_subdomain(i, j, i, j), 1);
  const auto dv = compute_subdomains_vector(M, make_subdomain(1, 1, 2, 2), {1});
  EXPECT_EQ(dv.candidates[0], (std::vector<SubdomainSlot>{make_subdomain(1, 1, 1, 1), make_subdomain(1, 2, 1, 2),
                                                          make_subdomain(2, 1, 2, 1), make_subdomain(2, 2, 2, 2)}));
}

TEST(CheckRule, XRuleWitness) {
  const CompiledRule x = compiled_body(kG1, "X");
  RecognitionMatrix M(4, 5, kG1.nonterminals.size());
  M.insert(make_subdomain(3, 2, 3, 2), nt(kG1, "X"));
  M.insert(make_subdomain(3, 1, 3, 1), nt(kG1, "A"));
  const Subdomain d = make_subdomain(3, 1, 3, 2);
  auto w = check_rule(M, x, d);
  ASSERT_TRUE(w);
  EXPECT_EQ(std::set<Placement>(w->begin(), w->end()),
            (std::set<Placement>{{nt(kG1, "A"), make_subdomain(3, 1, 3, 1)}, {nt(kG1, "X"), make_subdomain(3, 2, 3, 2)}}));
  EXPECT_TRUE(check_rule_exhaustive(compute_subdomains_vector(M, d, x.nonterminals), x.tiles, d));
}

TEST(CheckRule, XRuleWrongOrder) {
  const CompiledRule x = compiled_body(kG1, "X");
  RecognitionMatrix M(4, 5, kG1.nonterminals.size());
  M.insert(make_subdomain(3, 2, 3, 2), nt(kG1, "A"));
  M.insert(make_subdomain(3, 1, 3, 1), nt(kG1, "X"));
  const Subdomain d = make_subdomain(3, 1, 3, 2);
  EXPECT_FALSE(check_rule(M, x, d));
  EXPECT_FALSE(check_rule_exhaustive(compute_subdomains_vector(M, d, x.nonterminals), x.tiles, d));
}

TEST(CheckRule, SentinelComponentFails) {
  const CompiledRule x = compiled_body(kG1, "X");
  RecognitionMatrix M(4, 5, kG1.nonterminals.size());
  M.insert(make_subdomain(3, 1, 3, 1), nt(kG1, "A"));
  const Subdomain d = make_subdomain(3, 1, 3, 2);
  EXPECT_FALSE(check_rule(M, x, d));
  EXPECT_FALSE(check_rule_exhaustive(compute_subdomains_vector(M, d, x.nonterminals), x.tiles, d));
}

TEST(Parse, CorpusMembers) {
  EXPECT_TRUE(is_member(kG1, corpus::picture("p1.pic")));
  EXPECT_FALSE(is_member(kG1, corpus::picture("all_a_3x3.pic")));
  EXPECT_TRUE(is_member(kG2, corpus::picture("p2.pic")));
  EXPECT_TRUE(is_member(corpus::tg("g4.rtg"), corpus::picture("p4.pic")));
}

TEST(Parse, ForeignTerminalIsNotMember) { EXPECT_FALSE(is_member(kG2, pic("az/za"))); }

TEST(Parse, NonRegionalGrammarIsRefused) {
  try {
    Parser parser(corpus::tg("g3.tg"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::invalid_grammar);
  }
}

TEST(Parse, ChainRulesAreEliminatedWithNotice) {
  const Parser parser(corpus::tg("g4.rtg"));
  EXPECT_FALSE(parser.notices().empty());
  for (const Rule& r : parser.grammar().rules) EXPECT_FALSE(is_full_chain_rule(r));
}

TEST(Derivation, G1FirstStep) {
  const Parser parser(kG1);
  const Picture p1 = corpus::picture("p1.pic");
  auto root = extract_derivation(parser, p1, parser.parse(p1));
  ASSERT_TRUE(root);
  EXPECT_EQ(root->nonterminal, kG1.start);
  EXPECT_EQ(root->domain, make_subdomain(1, 1, 4, 5));
  std::set<std::string> labels;
  for (const DerivationNode& c : root->children) labels.insert(kG1.nonterminals[c.nonterminal]);
  EXPECT_EQ(root->children.size(), 8u);
  EXPECT_EQ(labels, (std::set<std::string>{"A1", "A2", "A3", "A4", "H1", "H2", "V1", "V2"}));
}

TEST(Derivation, NonMemberHasNone) {
  const Parser parser(kG1);
  const Picture p = corpus::picture("all_a_3x3.pic");
  EXPECT_FALSE(extract_derivation(parser, p, parser.parse(p)));
}

TEST(Derivation, G2TwoPixels) {
  const Parser parser(kG2);
  const Picture p = pic("aa");
  auto root = extract_derivation(parser, p, parser.parse(p));
  ASSERT_TRUE(root);
  const TileGrammar& g = parser.grammar();
  EXPECT_EQ(g.nonterminals[root->nonterminal], "S_P");
  ASSERT_EQ(root->children.size(), 1u);
  const DerivationNode& r = root->children[0];
  EXPECT_EQ(g.nonterminals[r.nonterminal], "R");
  ASSERT_EQ(r.children.size(), 2u);
  EXPECT_EQ(g.nonterminals[r.children[0].nonterminal], "A");
  EXPECT_EQ(g.nonterminals[r.children[1].nonterminal], "A'");
  EXPECT_EQ(r.children[0].terminal, 'a');
  EXPECT_EQ(r.children[1].terminal, 'a');
}

TEST(Derivation, FrontierEqualsPicture) {
  for (const char* name : {"g1.rtg", "g2.rtg", "g4.rtg"}) {
    const Parser parser(corpus::tg(name));
    int members = 0;
    for (const char* pname : {"p1.pic", "p2.pic", "p4.pic"}) {
      const Picture p = corpus::picture(pname);
      const auto M = parser.parse(p);
      if (!parser.accepts(M)) continue;
      ++members;
      auto root = extract_derivation(parser, p, M);
      ASSERT_TRUE(root);
      Picture frontier(p.rows(), p.cols(), kBoundary);
      collect_leaves(*root, frontier);
      EXPECT_EQ(frontier, p);
    }
    EXPECT_EQ(members, 1) << name;
  }
}

TEST(Correctness, MatrixMatchesOracleOnG2) {
  const Parser parser(kG2);
  Oracle oracle(parser.grammar());
  for (std::size_t r = 1; r <= 2; ++r)
    for (std::size_t c = 1; c <= 3; ++c)
      for (const Picture& p : all_pictures(corpus::alphabet("ab"), r, c)) expect_matrix_matches_oracle(parser, oracle, p);
}

TEST(Correctness, MatrixMatchesOracleOnG1Samples) {
  const Parser parser(kG1);
  Oracle oracle(parser.grammar());
  std::mt19937 rng(7);
  std::vector<Picture> inputs{corpus::cross(3, 3, 2, 2), corpus::cross(4, 4, 2, 3), corpus::picture("p1.pic"),
                              corpus::cross(3, 4, 2, 4)};
  for (int k = 0; k < 20; ++k) inputs.push_back(corpus::random_picture(rng, "ab", 4, 4));
  for (const Picture& p : inputs) expect_matrix_matches_oracle(parser, oracle, p);
}

TEST(Correctness, MatrixMatchesOracleOnG4) {
  const Parser parser(corpus::tg("g4.rtg"));
  Oracle oracle(parser.grammar());
  std::mt19937 rng(13);
  std::vector<Picture> inputs{pic("aacc/cbab"), pic("bbc/cbb"), corpus::picture("p4.pic")};
  for (int k = 0; k < 30; ++k) inputs.push_back(corpus::random_picture(rng, "abc", 2, 5));
  for (const Picture& p : inputs) expect_matrix_matches_oracle(parser, oracle, p);
}

TEST(Correctness, SearchAndScanAgree) {
  std::mt19937 rng(19);
  for (const char* name : {"g1.rtg", "g2.rtg"}) {
    const Parser parser(corpus::tg(name));
    ParseStats stats;
    for (int k = 0; k < 40; ++k) parser.parse(corpus::random_picture(rng, "ab", 3, 4), ParseOptions{true}, &stats);
    parser.parse(corpus::picture("p1.pic"), ParseOptions{true}, &stats);
    EXPECT_GT(stats.crosschecked, 0u);
    EXPECT_EQ(stats.disagreements, 0u) << (stats.log.empty() ? "" : stats.log.front());
    EXPECT_EQ(stats.coverage_violations, 0u);
  }
}
