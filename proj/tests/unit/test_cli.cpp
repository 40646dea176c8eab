#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "magnus/cli.hpp"
#include "magnus/json.hpp"
#include "magnus/magnus.hpp"

using namespace magnus;
namespace mj = magnus::json;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("magnus_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string write(const std::string& name, const Series& g) { return write(name, mj::to_json(g).dump()); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

Series embed(const std::string& text, const SeriesContext& ctx) { return magnus_embed(GroupWord::parse(text, ctx.n), ctx); }

}  // namespace

TEST(Cli, LyndonCommands) {
  auto r = invoke({"lyndon", "list", "--n", "2", "--max-len", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "a, b, ab, aab, abb\n");
  r = invoke({"lyndon", "list", "--n", "2", "--max-len", "3", "--order", "lex"});
  EXPECT_EQ(r.out, "a, aab, ab, abb, b\n");
  r = invoke({"lyndon", "list", "--n", "2", "--max-len", "2", "--json"});
  EXPECT_EQ(Json::parse(r.out), Json::parse("[[1],[2],[1,2]]"));
  r = invoke({"lyndon", "factor", "ab"});
  EXPECT_EQ(r.out, "(a, b)\n");
  r = invoke({"lyndon", "paren", "aabab", "--n", "2"});
  EXPECT_EQ(r.out, "((a∘(a∘b))∘(a∘b))\n");
  r = invoke({"lyndon", "factor", "ba"});
  EXPECT_EQ(r.code, cli::kPrecondition);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliFiles, SeriesCommands) {
  const SeriesContext ctx(2, 3, RingTag::integers());
  auto r = invoke({"series", "embed", "--word", "1 2 -1", "--n", "2", "--degree", "3", "--ring", "int"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Series g = mj::series_from_json(Json::parse(r.out));
  EXPECT_EQ(g, embed("1 2 -1", ctx));

  const std::string a = write("a.json", r.out);
  const std::string b = write("b.json", inverse(g));
  r = invoke({"series", "mul", "--in", a, "--in", b});
  EXPECT_EQ(mj::series_from_json(Json::parse(r.out)), Series::one(ctx));

  const SeriesContext qctx(1, 2, RingTag::rationals());
  const Series x = Series::one(qctx) + Series::generator(qctx, 1);
  r = invoke({"series", "pow", "--in", "-", "--t", "1/2"}, mj::to_json(x).dump());
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(mj::series_from_json(Json::parse(r.out)), power(x, Rational(1, 2)));

  r = invoke({"series", "ln", "--in", a});
  EXPECT_EQ(r.code, cli::kPrecondition);
  r = invoke({"series", "inv", "--in", a, "--out", path("inv.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path("inv.json"));
  EXPECT_EQ(mj::series_from_json(Json::parse(f)), inverse(g));
}

TEST_F(CliFiles, EmittedJsonRoundTrips) {
  const auto r = invoke({"series", "embed", "--word", "a B a", "--n", "2", "--degree", "4", "--ring", "padic", "--p", "3",
                      "--prec", "6"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const std::string file = write("g.json", r.out);
  const auto again = invoke({"series", "mul", "--in", file});
  EXPECT_EQ(again.out, r.out);
  const auto coords = invoke({"malcev", "decompose", "--in", file});
  ASSERT_EQ(coords.code, cli::kOk) << coords.err;
  const auto back = invoke({"malcev", "compose", "--in", "-"}, coords.out);
  EXPECT_EQ(back.out, r.out);
}

TEST_F(CliFiles, CheckCommands) {
  const SeriesContext ctx(2, 3, RingTag::rationals());
  auto r = invoke({"check", "grouplike", "--in", write("e.json", embed("1 2 2 -1", ctx))});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(Json::parse(r.out).at("holds").get<bool>());

  const Series bad = Series::one(ctx) + Series::monomial(ctx, Word(2, {1, 2}), ctx.one());
  r = invoke({"check", "grouplike", "--in", write("bad.json", bad)});
  EXPECT_EQ(r.code, cli::kFails);
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report.at("violation").at("left"), Json::array({1}));
  EXPECT_EQ(report.at("violation").at("right"), Json::array({2}));

  const SeriesContext one(1, 2, RingTag::rationals());
  const Series half = power(Series::one(one) + Series::generator(one, 1), Rational(1, 2));
  r = invoke({"check", "integral", "--in", write("half.json", half)});
  EXPECT_EQ(r.code, cli::kFails);
  r = invoke({"check", "primitive", "--in", write("lie.json", xi(Word(2, {1, 1, 2}), ctx))});
  EXPECT_EQ(r.code, cli::kOk);
  r = invoke({"check", "grouplike", "--standard", "--in", write("exp.json", exp(Series::generator(ctx, 2)))});
  EXPECT_EQ(r.code, cli::kOk);
}

TEST_F(CliFiles, MalcevCommands) {
  const SeriesContext ctx(2, 2, RingTag::integers());
  auto r = invoke({"malcev", "decompose", "--in", write("g.json", embed("2 1", ctx))});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto [t, tctx] = mj::malcev_from_json(Json::parse(r.out));
  EXPECT_EQ(t.at(Word(2, {1, 2}), tctx), ctx.integer(-1));

  const std::string zero = R"({"n":2,"max_degree":2,"ring":"int","order":"graded","entries":[]})";
  r = invoke({"malcev", "compose", "--in", "-"}, zero);
  EXPECT_EQ(mj::series_from_json(Json::parse(r.out)), Series::one(ctx));

  const std::string a = R"({"n":2,"max_degree":2,"ring":"int","coefficients":[{"word":[1,2],"coeff":"1"}]})";
  r = invoke({"malcev", "reconstruct", "--in", "-"}, a);
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Series s = mj::series_from_json(Json::parse(r.out).at("series"));
  EXPECT_EQ(s.coeff(Word(2, {1, 2})), ctx.one());
  EXPECT_EQ(s, Xi(Word(2, {1, 2}), ctx));

  const Series bad = Series::one(ctx) + Series::monomial(ctx, Word(2, {1, 2}), ctx.one());
  r = invoke({"malcev", "decompose", "--in", write("bad.json", bad)});
  EXPECT_EQ(r.code, cli::kFails);
  EXPECT_TRUE(Json::parse(r.out).contains("violation"));

  r = invoke({"malcev", "decompose", "--in", write("g2.json", embed("2 1", ctx)), "--order", "lex"});
  EXPECT_EQ(r.code, cli::kOk);
  const std::string ranking = write("order.json", R"({"ranking":[[1,2],[2],[1]]})");
  r = invoke({"malcev", "decompose", "--in", path("g2.json"), "--order", ranking});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto [u, uctx] = mj::malcev_from_json(Json::parse(r.out));
  EXPECT_EQ(malcev_compose(u, uctx), embed("2 1", ctx));
}

TEST_F(CliFiles, PadicCommands) {
  const SeriesContext ctx(2, 3, RingTag::padics(2, 10));
  const std::string one = write("one.json", Series::one(ctx));
  auto r = invoke({"padic", "member", "--nu", "1", "--pm", "2", "--in", one});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "true\n");
  const std::string g1 = write("g1.json", embed("1", ctx));
  r = invoke({"padic", "member", "--nu", "1", "--pm", "2^1", "--in", g1});
  EXPECT_EQ(r.code, cli::kFails);
  EXPECT_EQ(r.out, "false\n");
  r = invoke({"padic", "order", "--in", g1, "--nu", "1", "--p", "2", "--m", "1"});
  EXPECT_EQ(r.out, "2\n");

  r = invoke({"padic", "coset", "--n", "2", "--nu", "2", "--p", "2", "--m", "1", "--enumerate", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report.at("coordinate_classes"), 8);
  EXPECT_EQ(report.at("p_m_sigma"), "8");
  EXPECT_EQ(report.at("quotient_order"), 32);

  r = invoke({"padic", "converge", "--word", "ab", "--n", "2", "--degree", "4", "--ring", "padic", "--p", "2", "--prec",
           "16", "--t", "-1", "--k", "1", "--k", "3", "--k", "7", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Json conv = Json::parse(r.out);
  ASSERT_EQ(conv.size(), 3u);
  EXPECT_LT(conv[0].at("precision").get<long>(), conv[2].at("precision").get<long>());
  r = invoke({"padic", "converge", "--word", "ab", "--n", "2", "--degree", "4", "--ring", "padic", "--p", "2", "--prec",
           "16", "--t", "-1", "--k", "2"});
  EXPECT_EQ(r.code, cli::kPrecondition);
}

TEST_F(CliFiles, ExitCodes) {
  EXPECT_EQ(invoke({}).code, cli::kParseError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"lyndon", "list", "--n", "x", "--max-len", "2"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"series", "mul", "--in", "-"}, "{not json").code, cli::kParseError);
  EXPECT_EQ(invoke({"series", "mul", "--in", path("missing.json")}).code, cli::kParseError);
  EXPECT_EQ(invoke({"series", "embed", "--word", "1 q", "--n", "2", "--degree", "2", "--ring", "int"}).code,
            cli::kParseError);
  EXPECT_EQ(invoke({"series", "embed", "--word", "1", "--n", "2", "--degree", "2", "--ring", "padic"}).code,
            cli::kParseError);
  EXPECT_EQ(invoke({"padic", "member", "--nu", "1", "--pm", "6", "--in", "-"}, "{}").code, cli::kParseError);

  const SeriesContext zctx(1, 2, RingTag::integers());
  EXPECT_EQ(invoke({"series", "exp", "--in", write("x.json", Series::generator(zctx, 1))}).code, cli::kPrecondition);
  const SeriesContext low(2, 2, RingTag::padics(2, 2));
  EXPECT_EQ(invoke({"padic", "member", "--nu", "1", "--p", "2", "--m", "5", "--in", write("low.json", embed("1", low))}).code,
            cli::kPrecondition);
  EXPECT_EQ(invoke({"--help"}).code, cli::kOk);
}
