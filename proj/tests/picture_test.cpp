#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "corpus.hpp"

using namespace picgram;

namespace {

bool has_strong_partition_exhaustive(const Picture& p) {
  const std::size_t m = p.rows(), n = p.cols();
  std::vector<int> owner(m * n, -1);
  Partition blocks;
  std::function<bool()> go = [&]() -> bool {
    std::size_t k = 0;
    while (k < owner.size() && owner[k] >= 0) ++k;
    if (k == owner.size()) {
      for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = 0; b < blocks.size(); ++b)
          if (a != b && blocks[a].label == blocks[b].label &&
              adjacency_kind(blocks[a].domain, blocks[b].domain) != Adjacency::none)
            return false;
      return true;
    }
    const std::size_t i = k / n + 1, j = k % n + 1;
    for (std::size_t bottom = i; bottom <= m; ++bottom)
      for (std::size_t right = j; right <= n; ++right) {
        bool ok = true;
        for (std::size_t x = i; x <= bottom && ok; ++x)
          for (std::size_t y = j; y <= right && ok; ++y)
            ok = owner[(x - 1) * n + y - 1] < 0 && p(x, y) == p(i, j);
        if (!ok) continue;
        for (std::size_t x = i; x <= bottom; ++x)
          for (std::size_t y = j; y <= right; ++y) owner[(x - 1) * n + y - 1] = static_cast<int>(blocks.size());
        blocks.push_back({Subdomain{i, j, bottom, right}, p(i, j)});
        if (go()) return true;
        blocks.pop_back();
        for (std::size_t x = i; x <= bottom; ++x)
          for (std::size_t y = j; y <= right; ++y) owner[(x - 1) * n + y - 1] = -1;
      }
    return false;
  };
  return go();
}

const TilingSystem kT3 = corpus::grammar<TilingSystem>("t3.ts");

// Pictures over T3's local alphabet, written with the names of its symbols.
Picture over_gamma(std::string_view rows) {
  Picture p = pic(rows);
  for (std::size_t i = 1; i <= p.rows(); ++i)
    for (std::size_t j = 1; j <= p.cols(); ++j) {
      const std::string name(1, terminal_char(p(i, j)));
      const auto it = std::find(kT3.gamma.begin(), kT3.gamma.end(), name);
      p(i, j) = nonterminal(static_cast<std::size_t>(it - kT3.gamma.begin()));
    }
  return p;
}

}  // namespace

TEST(Concatenation, HcatJoinsColumns) {
  EXPECT_EQ(hcat(pic("a"), pic("b")), pic("ab"));
  EXPECT_EQ(hcat(pic("a"), pic("a")), pic("aa"));
}

TEST(Concatenation, HcatRowMismatch) {
  try {
    hcat(pic("ab/ba"), pic("a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::row_mismatch);
  }
}

TEST(Concatenation, VcatStacksRows) {
  EXPECT_EQ(vcat(pic("ab"), pic("ba")), pic("ab/ba"));
  EXPECT_EQ(vcat(pic("a"), pic("a")), pic("a/a"));
}

TEST(Concatenation, VcatColumnMismatch) {
  try {
    vcat(pic("ab"), pic("a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::column_mismatch);
  }
}

TEST(Concatenation, AssociativeWithSizesAdding) {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    Picture a = corpus::random_picture(rng, "ab", 3, 3);
    Picture b = corpus::random_picture(rng, "ab", 3, 3);
    Picture c = corpus::random_picture(rng, "ab", 3, 3);
    if (a.rows() == b.rows() && b.rows() == c.rows()) {
      EXPECT_EQ(hcat(hcat(a, b), c), hcat(a, hcat(b, c)));
      EXPECT_EQ(hcat(a, b).cols(), a.cols() + b.cols());
    }
    if (a.cols() == b.cols() && b.cols() == c.cols()) {
      EXPECT_EQ(vcat(vcat(a, b), c), vcat(a, vcat(b, c)));
      EXPECT_EQ(vcat(a, b).rows(), a.rows() + b.rows());
    }
  }
}

TEST(Subpicture, Examples) {
  EXPECT_EQ(subpicture(pic("ab/ba"), make_subdomain(1, 1, 1, 2)), pic("ab"));
  EXPECT_EQ(subpicture(corpus::picture("p1.pic"), make_subdomain(2, 1, 2, 5)), pic("bbbbb"));
  EXPECT_EQ(subpicture(pic("a"), make_subdomain(1, 1, 1, 1)), pic("a"));
}

TEST(Subpicture, OutOfRange) {
  try {
    subpicture(pic("ab/ba"), make_subdomain(1, 1, 3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::out_of_range);
  }
}

TEST(Subpicture, WholeDomainAndZeroTranslationAreIdentity) {
  std::mt19937 rng(5);
  for (int round = 0; round < 100; ++round) {
    Picture p = corpus::random_picture(rng, "abc", 4, 4);
    EXPECT_EQ(subpicture(p, domain_of(p)), p);
    EXPECT_EQ(translate(domain_of(p), 0, 0), domain_of(p));
  }
}

TEST(Bordered, Frames) {
  EXPECT_EQ(to_slash_text(bordered(pic("a"))), "###/#a#/###");
  EXPECT_EQ(to_slash_text(bordered(pic("ab/ba"))), "####/#ab#/#ba#/####");
  EXPECT_EQ(to_text(bordered(over_gamma("1000/0100/0010/0001")), kT3.namer(), "/"),
            "######/#1000#/#0100#/#0010#/#0001#/######");
}

TEST(TilesOf, Examples) {
  EXPECT_EQ(tiles_of(pic("ab/ba")), TileSet({make_tile(terminal('a'), terminal('b'), terminal('b'), terminal('a'))}));
  EXPECT_EQ(tiles_of(pic("aa/aa")).size(), 1u);
}

TEST(TilesOf, G1ExemplarTiles) {
  const TileGrammar g1 = corpus::tg("g1.rtg");
  const auto& s = std::get<VariableRule>(g1.rules[0]);
  const Symbol A1 = nonterminal(*g1.find_nonterminal("A1"));
  const Symbol V1 = nonterminal(*g1.find_nonterminal("V1"));
  const Symbol H1 = nonterminal(*g1.find_nonterminal("H1"));
  const TileSet t = tiles_of(s.exemplars.front());
  EXPECT_TRUE(t.contains(make_tile(kBoundary, kBoundary, kBoundary, A1)));
  EXPECT_TRUE(t.contains(make_tile(A1, V1, H1, V1)));
}

TEST(TilesOf, TooSmall) {
  try {
    tiles_of(pic("ab"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::too_small);
  }
}

TEST(LocalLanguage, Examples) {
  const TileSet& theta = kT3.theta;
  EXPECT_TRUE(in_local_language(over_gamma("1000/0100/0010/0001"), theta));
  EXPECT_TRUE(in_local_language(over_gamma("10/01"), theta));
  EXPECT_FALSE(in_local_language(over_gamma("01/10"), theta));
  EXPECT_FALSE(in_local_language(pic("a"), TileSet{}));
}

TEST(LocalLanguage, MatchesTileContainment) {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    Picture source = corpus::random_picture(rng, "ab", 3, 3);
    TileSet theta = tiles_of(bordered(source));
    std::vector<Tile> kept;
    for (const Tile& t : theta)
      if (rng() % 4 != 0) kept.push_back(t);
    theta = TileSet(kept);
    Picture p = corpus::random_picture(rng, "ab", 3, 3);
    EXPECT_EQ(tiles_of(bordered(p)).is_subset_of(theta), in_local_language(p, theta));
  }
}

TEST(StrongPartition, SinglePixel) {
  auto blocks = strong_partition(pic("a"));
  ASSERT_TRUE(blocks);
  ASSERT_EQ(blocks->size(), 1u);
  EXPECT_EQ((*blocks)[0].domain, make_subdomain(1, 1, 1, 1));
  EXPECT_EQ((*blocks)[0].label, terminal('a'));
}

TEST(StrongPartition, RepeatedLabelSplitsIntoSeparateBlocks) {
  auto blocks = strong_partition(pic("AABAA/AABAA/DDBDD/AACAA/AACAA"));
  ASSERT_TRUE(blocks);
  EXPECT_EQ(blocks->size(), 8u);
  std::set<Block> got(blocks->begin(), blocks->end());
  EXPECT_TRUE(got.count({make_subdomain(1, 3, 3, 3), terminal('B')}));
  EXPECT_TRUE(got.count({make_subdomain(4, 3, 5, 3), terminal('C')}));
  EXPECT_TRUE(got.count({make_subdomain(3, 4, 3, 5), terminal('D')}));
  EXPECT_TRUE(got.count({make_subdomain(4, 4, 5, 5), terminal('A')}));
}

TEST(StrongPartition, LabelledQuadrantsWithDividers) {
  // a,b,c,d stand for A1..A4; h,k for H1,H2; v,w for V1,V2.
  auto blocks = strong_partition(pic("aavbb/hhvkk/ccwdd/ccwdd"));
  ASSERT_TRUE(blocks);
  EXPECT_EQ(blocks->size(), 8u);
  std::set<Block> got(blocks->begin(), blocks->end());
  EXPECT_TRUE(got.count({make_subdomain(1, 3, 2, 3), terminal('v')}));
  EXPECT_TRUE(got.count({make_subdomain(3, 1, 4, 2), terminal('c')}));
}

TEST(StrongPartition, ChessboardHasOneBlockPerPixel) {
  auto blocks = strong_partition(pic("ab/ba"));
  ASSERT_TRUE(blocks);
  EXPECT_EQ(blocks->size(), 4u);
}

TEST(StrongPartition, AgreesWithExhaustiveSearch) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c)
      for (const Picture& p : all_pictures(corpus::alphabet("abc"), r, c)) {
        auto blocks = strong_partition(p);
        ASSERT_EQ(blocks.has_value(), has_strong_partition_exhaustive(p)) << to_slash_text(p);
        if (blocks) {
          EXPECT_TRUE(is_homogeneous_partition(p, *blocks));
          EXPECT_TRUE(is_strong_partition(p, *blocks));
        }
      }
}

TEST(RegionalPicture, Examples) {
  EXPECT_TRUE(is_regional_picture(pic("abBcd/abBcd/efBgh/ijCkl/ijCkl")));
  EXPECT_FALSE(is_regional_picture(pic("AABAA/AABAA/DDBDD/AACAA/AACAA")));
  EXPECT_TRUE(is_regional_picture(pic("a")));
}

TEST(RegionalPicture, ImpliesInjectiveStrongPartition) {
  std::mt19937 rng(23);
  for (int round = 0; round < 500; ++round) {
    Picture p = corpus::random_picture(rng, "abc", 4, 4);
    if (!is_regional_picture(p)) continue;
    auto blocks = strong_partition(p);
    ASSERT_TRUE(blocks);
    EXPECT_TRUE(has_distinct_labels(*blocks));
  }
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(adjacency_kind(make_subdomain(3, 1, 3, 1), make_subdomain(3, 2, 3, 2)), Adjacency::horizontal);
  EXPECT_EQ(adjacency_kind(make_subdomain(1, 1, 2, 2), make_subdomain(3, 1, 4, 2)), Adjacency::vertical);
  EXPECT_EQ(adjacency_kind(make_subdomain(1, 1, 1, 1), make_subdomain(3, 3, 3, 3)), Adjacency::none);
}

TEST(Adjacency, SentinelArgument) {
  try {
    adjacency_kind(std::nullopt, make_subdomain(1, 1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::sentinel_argument);
  }
}

TEST(PictureText, RejectsRaggedAndEmpty) {
  EXPECT_THROW(parse_picture("ab\na\n"), Error);
  EXPECT_THROW(parse_picture(""), Error);
  EXPECT_THROW(parse_picture("a#\n"), Error);
  EXPECT_EQ(parse_picture("ab\nba\n"), pic("ab/ba"));
}
