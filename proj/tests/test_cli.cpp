#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "lbs/io.hpp"
#include "lbs/laws.hpp"
#include "test_util.hpp"

using namespace lbs;
using namespace testutil;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lbs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, CoproductH) {
  auto r = run({"coproduct", "--op", "h", "[[[]]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "1 * [] [] [] ⊗ [[[]]] + 2 * [] [[]] ⊗ [[]] + 1 * [[[]]] ⊗ []");
}

TEST(Cli, ProductGL) {
  auto r = run({"product", "--op", "gl", "[[][]]", "[] [[]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_forest_comb(trimmed(r.out)),
            lc({{1, "[[][]] [] [[]]"}, {1, "[[[][]]] [[]]"}, {1, "[] [[][[][]]]"}, {1, "[] [[[[][]]]]"}}));
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "prelie-identity", "--order", "3"}).code, 0);
  auto fail = run({"verify", "pi-morphism"});
  EXPECT_EQ(fail.code, 2);
  EXPECT_NE(fail.out.find("counterexample: [[][]]"), std::string::npos);
  EXPECT_EQ(run({"verify", "no-such-law"}).code, 1);
  EXPECT_EQ(run({"verify"}).code, 1);
  auto list = run({"--format", "json", "verify", "--list"});
  EXPECT_EQ(nlohmann::json::parse(list.out).get<std::vector<std::string>>(), verify_registry());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"coproduct", "[]"}).code, 1);
  EXPECT_EQ(run({"coproduct", "--op", "q", "[]"}).code, 1);
  EXPECT_EQ(run({"parse", "[[]"}).code, 1);
  EXPECT_EQ(run({"parse", "[]", "extra"}).code, 1);
  EXPECT_EQ(run({"coproduct", "--op", "rho", "--guard", "2", "[[[]]]"}).code, 1);
  EXPECT_EQ(run({"substitute", "--alpha", "/nonexistent", "--beta", "/nonexistent"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonRoundTrip) {
  auto r = run({"--format", "json", "coproduct", "--op", "n", "[[][[]]] []"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  Tensor2<OrderedForest, OrderedForest> back;
  for (const auto& t : j["terms"])
    back.add({F(t["left"].get<std::string>()), F(t["right"].get<std::string>())},
             parse_rational(t["coeff"].get<std::string>()));
  EXPECT_EQ(back, delta_N(F("[[][[]]] []")));

  auto p = run({"--format", "json", "parse", "[[][[]]] []"});
  auto pj = nlohmann::json::parse(p.out);
  EXPECT_EQ(F(pj["forest"].get<std::string>()), F("[[][[]]] []"));
  EXPECT_EQ(pj["vertices"], 5);
  EXPECT_EQ(trimmed(run({"parse", pj["json"].dump()}).out), "[[][[]]] []");

  auto g = run({"--format", "json", "graft", "[]", "[[]]"});
  ForestComb x;
  const auto gj = nlohmann::json::parse(g.out);
  for (const auto& t : gj["terms"])
    x.add(F(t["forest"].get<std::string>()), parse_rational(t["coeff"].get<std::string>()));
  EXPECT_EQ(x, lc({{1, "[[][]]"}, {1, "[[[]]]"}}));
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--format", "json", "coproduct", "--op", "w", "[[[]][]]"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(trimmed(run({"canon", "[[][[]]]"}).out), "[[[]][]]\nsymmetry factor 1\ntree factorial 8");
  auto e = run({"--format", "json", "enumerate", "-n", "4", "--kind", "trees"});
  EXPECT_EQ(nlohmann::json::parse(e.out)["count"], 4);
  EXPECT_EQ(nlohmann::json::parse(run({"--format", "json", "enumerate", "-n", "3"}).out)["count"], 5);
  EXPECT_EQ(trimmed(run({"graft", "--mode", "prelie", "[]", "[[]]"}).out), "1 * [[][]] + 1 * [[[]]]");
  EXPECT_EQ(trimmed(run({"operad", "--mode", "prelie", "[1[2]]", "[[]]", "[]"}).out), "1 * [[][]] + 1 * [[[]]]");
  EXPECT_EQ(parse_forest_comb(trimmed(run({"operad", "--mode", "postlie", "{[1],[2]}", "[]", "[[]]"}).out)),
            lc({{1, "[] [[]]"}, {-1, "[[]] []"}}));
  EXPECT_EQ(trimmed(run({"product", "--op", "shuffle", "[]", "[[]]"}).out), "1 * [] [[]] + 1 * [[]] []");
}

TEST(Cli, CharacterCommands) {
  const std::string alpha = R"({"order":3,"empty":"0","values":{"[]":"1","[[]]":"5"}})";
  const std::string beta = R"({"order":3,"empty":"1","values":{"[]":"2","[[]]":"1/3","[] []":"5"}})";
  auto s = run({"--format", "json", "substitute", "--alpha", alpha, "--beta", beta});
  ASSERT_EQ(s.code, 0);
  const CharacterMap w = character_from_json(s.out);
  auto o = run({"--format", "json", "substitute", "--alpha", alpha, "--beta", beta, "--guard", "3"});
  EXPECT_EQ(character_from_json(o.out), w);
  EXPECT_EQ(w(F("[[]]")), Rational(31, 3));

  const std::string path = testing::TempDir() + "beta.json";
  std::ofstream(path) << beta;
  auto c = run({"--format", "json", "compose", "--alpha", path, "--beta", path});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(character_from_json(c.out), convolve_N(character_from_json(beta), character_from_json(beta)));
}

TEST(Cli, BSeries) {
  const std::string field = R"({"dim":1,"components":[{"monomials":[{"coeff":"1","powers":[2]}]}]})";
  const std::string flow =
      R"({"order":3,"empty":"1","values":{"[]":"1","[[]]":"1/2","[[][]]":"1/3","[[[]]]":"1/6"}})";
  const std::string alpha = R"({"order":3,"values":{"[]":"1","[[]]":"1"}})";
  auto e = run({"bseries", "eval", "--field", field, "--alpha", flow, "-n", "3"});
  EXPECT_EQ(trimmed(e.out), "y1: 1 1 h^1 1 h^2 1 h^3");
  auto h = run({"bseries", "eval", "--field", field, "--alpha", flow, "-n", "3", "--step", "1/2", "--point", "2"});
  // 2 + 4h + 8h² + 16h³ at h = 1/2.
  EXPECT_EQ(trimmed(h.out), "8");
  EXPECT_EQ(run({"bseries", "verify", "--field", field, "--alpha", alpha, "--beta", flow, "-n", "3"}).code, 0);
  EXPECT_EQ(run({"bseries", "verify", "--field", field, "--alpha", flow, "--beta", flow, "-n", "3"}).code, 1);
  EXPECT_EQ(run({"bseries", "verify", "--field", field, "--alpha", alpha, "-n", "3"}).code, 1);
}
