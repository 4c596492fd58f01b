#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"

using namespace picgram;

namespace {

const TilingSystem kT3 = corpus::grammar<TilingSystem>("t3.ts");

std::vector<Symbol> gamma_symbols(const TilingSystem& t) {
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < t.gamma.size(); ++k) out.push_back(nonterminal(k));
  return out;
}

std::set<Picture> filtered(const TileSet& theta, const std::vector<Symbol>& alphabet, std::size_t r, std::size_t c) {
  std::set<Picture> out;
  for (const Picture& p : all_pictures(alphabet, r, c))
    if (in_local_language(p, theta)) out.insert(p);
  return out;
}

std::set<Picture> as_set(const std::vector<Picture>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(EnumerateLocal, T3DiagonalIsUniqueAtFourByFour) {
  const auto got = as_set(enumerate_local(kT3.theta, 4, 4));
  EXPECT_EQ(got, filtered(kT3.theta, gamma_symbols(kT3), 4, 4));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(to_text(*got.begin(), kT3.namer(), "/"), "1000/0100/0010/0001");
}

TEST(EnumerateLocal, EmptyTileSet) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c) EXPECT_TRUE(enumerate_local(TileSet{}, r, c).empty());
}

TEST(EnumerateLocal, HomogeneousSquare) {
  EXPECT_EQ(as_set(enumerate_local(tiles_of(bordered(pic("aa/aa"))), 2, 2)), std::set<Picture>{pic("aa/aa")});
}

TEST(EnumerateLocal, EqualsFilteredEnumeration) {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    TileSet theta = tiles_of(bordered(corpus::random_picture(rng, "abc", 3, 3))) |
                    tiles_of(bordered(corpus::random_picture(rng, "abc", 3, 3)));
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t c = 1; c <= 3; ++c) {
        const auto got = enumerate_local(theta, r, c);
        for (const Picture& p : got) EXPECT_TRUE(in_local_language(p, theta));
        EXPECT_EQ(as_set(got), filtered(theta, corpus::alphabet("abc"), r, c));
      }
  }
}

TEST(DeriveMembership, Examples) {
  const TileGrammar g3 = corpus::tg("g3.tg");
  EXPECT_EQ(derive_membership_tg(g3, pic("aa/aa")), Verdict::yes);
  EXPECT_EQ(derive_membership_tg(g3, pic("aa/aa/aa")), Verdict::no);
  EXPECT_EQ(derive_membership_tg(corpus::tg("g1.rtg"), pic("aba/bbb/aba")), Verdict::yes);
}

TEST(DeriveMembership, BudgetGivesIndeterminate) {
  EXPECT_EQ(derive_membership_tg(corpus::tg("g1.rtg"), corpus::picture("p1.pic"), 10), Verdict::indeterminate);
  EXPECT_THROW(enumerate_language_tg(corpus::tg("g2.rtg"), {3, 3}, 10), Error);
}

TEST(EnumerateLanguage, Examples) {
  EXPECT_EQ(enumerate_language_tg(corpus::tg("g2.rtg"), {1, 2}), (std::set<Picture>{pic("aa"), pic("bb")}));
  EXPECT_TRUE(enumerate_language_tg(corpus::tg("g1.rtg"), {2, 2}).empty());
  EXPECT_EQ(enumerate_language_tg(ts_to_tg(kT3), {2, 2}), std::set<Picture>{pic("aa/aa")});
}

TEST(TilingSystemMembership, Examples) {
  EXPECT_TRUE(membership_ts(kT3, pic("aa/aa")));
  EXPECT_FALSE(membership_ts(kT3, pic("aa")));
  EXPECT_TRUE(membership_ts(kT3, pic("aaa/aaa/aaa")));
  EXPECT_FALSE(membership_ts(kT3, pic("a")));
}

TEST(TilingSystemMembership, AgreesWithChessboardGrammar) {
  const TileGrammar g3 = corpus::tg("g3.tg");
  Oracle oracle(g3);
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 4; ++c) {
      const Picture p(r, c, terminal('a'));
      EXPECT_EQ(oracle.derives(p) == Verdict::yes, membership_ts(kT3, p)) << r << "x" << c;
      EXPECT_EQ(membership_ts(kT3, p), r == c && r > 1);
    }
}

TEST(EnumerateSource, Examples) {
  EXPECT_TRUE(enumerate_source(corpus::grammar<KolamGrammar>("g5.kolam"), {3, 2}).count(pic("ab/aa/ab")));
  EXPECT_TRUE(enumerate_source(corpus::grammar<MatrixGrammar>("g7.matrix"), {6, 7}).count(corpus::picture("p7.pic")));
  EXPECT_EQ(enumerate_source(corpus::grammar<GridGrammar>("cross.grid"), {1, 1}), std::set<Picture>{pic("a")});
}

TEST(EnumerateSource, KolamColumnsArePalindromes) {
  const auto lang = enumerate_source(corpus::grammar<KolamGrammar>("g5.kolam"), {3, 3});
  EXPECT_FALSE(lang.empty());
  for (const Picture& p : lang)
    for (std::size_t j = 1; j <= p.cols(); ++j)
      for (std::size_t i = 1; i <= p.rows(); ++i) EXPECT_EQ(p(i, j), p(p.rows() + 1 - i, j)) << to_slash_text(p);
  EXPECT_TRUE(lang.count(pic("a/b/a")));
  EXPECT_FALSE(lang.count(pic("ab/ba")));
}

TEST(EnumerateSource, PrusaCrossesAtThreeByThree) {
  const auto lang = enumerate_source(corpus::grammar<PrusaGrammar>("g6.prusa"), {3, 3});
  EXPECT_EQ(lang, std::set<Picture>{pic("aba/bbb/aba")});
}

TEST(EnumerateSource, GridSquaresOnly) {
  const auto lang = enumerate_source(corpus::grammar<GridGrammar>("cross.grid"), {3, 3});
  EXPECT_EQ(lang, (std::set<Picture>{pic("a"), pic("aa/aa"), pic("aaa/aaa/aaa"), pic("aba/bbb/aba")}));
}
