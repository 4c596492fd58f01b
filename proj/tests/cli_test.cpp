#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "corpus.hpp"
#include "picgram/cli.hpp"

using namespace picgram;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "picgram_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, ParseExitCodes) {
  EXPECT_EQ(run_cli({"parse", corpus::path("g1.rtg"), corpus::path("p1.pic")}).code, 0);
  EXPECT_EQ(run_cli({"parse", corpus::path("g1.rtg"), corpus::path("all_a_3x3.pic")}).code, 1);
  EXPECT_EQ(run_cli({"parse", corpus::path("g1.rtg"), corpus::path("nope.pic")}).code, 2);
  EXPECT_EQ(run_cli({"parse", corpus::path("g3.tg"), corpus::path("all_a_3x3.pic")}).code, 2);
}

TEST(Cli, ConvertMatrixThenParse) {
  const std::string out = scratch("g7.rtg");
  ASSERT_EQ(run_cli({"convert", "--to", "rtg", corpus::path("g7.matrix"), out}).code, 0);
  EXPECT_EQ(run_cli({"parse", out, corpus::path("p7.pic")}).code, 0);
  EXPECT_EQ(run_cli({"parse", out, corpus::path("p1.pic")}).code, 1);
}

TEST(Cli, ConvertRefusesNonRegionalTarget) {
  EXPECT_EQ(run_cli({"convert", "--to", "rtg", corpus::path("t3.ts"), scratch("t3.rtg")}).code, 2);
  const Outcome tg = run_cli({"convert", "--to", "tg", corpus::path("t3.ts"), "-"});
  ASSERT_EQ(tg.code, 0);
  EXPECT_TRUE(same_up_to_numbering(std::get<TileGrammar>(read_grammar(tg.out).grammar), corpus::tg("g3.tg")));
}

TEST(Cli, ConvertToKolamWritesNormalForm) {
  const Outcome r = run_cli({"convert", "--to", "kolam", corpus::path("cross.grid"), "-"});
  ASSERT_EQ(r.code, 0);
  const auto k = std::get<KolamGrammar>(read_grammar(r.out).grammar);
  EXPECT_TRUE(is_cnf(k));
  EXPECT_EQ(run_cli({"convert", "--to", "kolam", corpus::path("g1.rtg"), "-"}).code, 2);
}

TEST(Cli, ParseReports) {
  const Outcome r =
      run_cli({"parse", corpus::path("g2.rtg"), corpus::path("p2.pic"), "--derivation", "--oracle", "--matrix"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("oracle: yes"), std::string::npos);
  EXPECT_NE(r.out.find("-+-"), std::string::npos);
  EXPECT_NE(r.out.find("S_P (1,1;3,4)"), std::string::npos);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run_cli({"validate", corpus::path("g1.rtg")}).code, 0);
  EXPECT_EQ(run_cli({"validate", corpus::path("g3.tg")}).code, 1);
  EXPECT_EQ(run_cli({"validate", corpus::path("g6.prusa")}).code, 0);
}

TEST(Cli, GenerateIsOrderedAndSeparated) {
  const Outcome r = run_cli({"generate", corpus::path("g2.rtg"), "--max-rows", "1", "--max-cols", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "aa\n\nbb\n");
  const Outcome g = run_cli({"generate", corpus::path("cross.grid"), "--max-rows", "3", "--max-cols", "3"});
  EXPECT_EQ(g.out, "a\n\naa\naa\n\naaa\naaa\naaa\n\naba\nbbb\naba\n");
}

TEST(Cli, AnalyzeTileset) {
  const Outcome r = run_cli({"analyze-tileset", corpus::path("t3.ts")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simple regional: no"), std::string::npos);
  const Outcome g = run_cli({"analyze-tileset", corpus::path("g1.rtg")});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("simple regional: yes"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"convert", "--to", "png", corpus::path("g1.rtg"), "-"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
