#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "expression.hpp"
#include "neutro/error.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/io.hpp"

namespace neutro::cli {
namespace {

using io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return io::parse(out); }
  Json error() const { return io::parse(err); }
};

Result call(std::vector<std::string> args, std::optional<std::string> seed = std::nullopt) {
  std::ostringstream out, err;
  int code = run(args, out, err, std::move(seed));
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("neutro_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kDie = R"({"outcomes": [{"label": "1", "chance": 0.15}, {"label": "2", "chance": 0.15},
  {"label": "3", "chance": 0.15}, {"label": "4", "chance": 0.15}, {"label": "5", "chance": 0.15},
  {"label": "6", "chance": 0.15}], "indeterminacy": [{"label": "indeterm", "chance": 0.10}]})";

Json frac(std::int64_t n, std::int64_t d) {
  Json j;
  j["num"] = n;
  j["den"] = d;
  return j;
}

Json triple(Json t, Json i, Json f) {
  Json j;
  j["t"] = std::move(t);
  j["i"] = std::move(i);
  j["f"] = std::move(f);
  return j;
}

TEST(Cli, EvalFromFile) {
  TempFile die(kDie);
  Result r = call({"eval", "--space", die.path(), "--event", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"t\":0.15,\"i\":0.1,\"f\":0.75}\n");
}

TEST(Cli, EvalExactFromFile) {
  TempFile die(kDie);
  Result r = call({"--exact", "eval", "--space", die.path(), "--event", "1,2,3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json(), triple(frac(9, 20), frac(1, 10), frac(9, 20)));
}

TEST(Cli, EvalVariants) {
  EXPECT_EQ(call({"--exact", "eval", "--fixture", "urn-5-2-3", "--event", "A", "--complement"}).json(),
            triple(frac(3, 10), frac(1, 5), frac(1, 2)));
  EXPECT_EQ(call({"--exact", "eval", "--fixture", "frequentist-die", "--sure"}).json(),
            triple(frac(9, 10), frac(1, 10), frac(0, 1)));
  EXPECT_EQ(call({"--exact", "eval", "--fixture", "truncated-die", "--impossible", "--remove-indeterminacy"}).json(),
            triple(frac(0, 1), frac(0, 1), frac(1, 2)));
  EXPECT_EQ(call({"--exact", "eval", "--fixture", "frequentist-die", "--event", "@low"}).json(),
            triple(frac(9, 20), frac(1, 10), frac(9, 20)));
}

TEST(Cli, EchoSpaceIsStable) {
  TempFile die(kDie);
  Result first = call({"eval", "--space", die.path(), "--echo-space"});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  TempFile again(first.out);
  Result second = call({"eval", "--space", again.path(), "--echo-space"});
  EXPECT_EQ(first.out, second.out);

  Result counts = call({"eval", "--fixture", "urn-5-2-3", "--echo-space"});
  EXPECT_EQ(counts.out, "{\"counts\":{\"A\":5,\"I~indet\":2,\"B\":3}}\n");
}

TEST(Cli, UnionAndDeck) {
  EXPECT_EQ(call({"--exact", "union", "--fixture", "deck", "--a", "@face", "--b", "@heart"}).json(),
            triple(frac(11, 26), frac(1, 26), frac(7, 13)));
  Json interval = call({"--exact", "union", "--fixture", "deck-intervals"}).json();
  EXPECT_EQ(interval["t"], Json::array({frac(9, 26), frac(6, 13)}));
  EXPECT_EQ(interval["f"], Json::array({frac(1, 2), frac(8, 13)}));
  Result r = call({"union", "--fixture", "frequentist-die", "--a", "1", "--b", "2"});
  EXPECT_EQ(r.out, "{\"t\":0.3,\"i\":0.1,\"f\":0.6}\n");
}

TEST(Cli, Joint) {
  EXPECT_EQ(call({"joint", "--fixture", "two-dice"}).out, "{\"t\":0.0225,\"i\":0.19,\"f\":0.7875}\n");
  EXPECT_EQ(call({"joint", "--fixture", "two-dice", "--predicate", "sum=6"}).out,
            "{\"t\":0.1125,\"i\":0.19,\"f\":0.6975}\n");
  EXPECT_EQ(call({"joint", "--fixture", "coin-cubed"}).out,
            "{\"t\":0.117649,\"i\":0.058808,\"f\":0.823543}\n");
  EXPECT_EQ(call({"joint", "--fixture", "fair-coin-cubed"}).out, "{\"t\":0.125,\"i\":0.0,\"f\":0.875}\n");
  TempFile die(kDie);
  Result files = call({"joint", die.path(), die.path(), "--event", "3", "--event", "4"});
  EXPECT_EQ(files.out, "{\"t\":0.0225,\"i\":0.19,\"f\":0.7875}\n");
  Result mismatch = call({"joint", die.path(), die.path(), "--event", "3"});
  EXPECT_EQ(mismatch.code, kExitInvalid);
  EXPECT_EQ(mismatch.error()["error"], "dimension-mismatch");
}

TEST(Cli, ConditionAndMultiplicationRule) {
  EXPECT_EQ(call({"--exact", "condition", "--fixture", "urn-5-2-3", "--event", "A", "--given", "B"}).json(),
            triple(frac(5, 9), frac(2, 9), frac(2, 9)));
  EXPECT_EQ(call({"--exact", "condition", "--fixture", "urn-5-2-3", "--event", "B", "--given", "A"}).json(),
            triple(frac(1, 3), frac(2, 9), frac(4, 9)));
  EXPECT_EQ(call({"--exact", "condition", "--fixture", "urn-5-2-3", "--first", "A", "--second", "B"}).json(),
            triple(frac(1, 6), frac(17, 45), frac(41, 90)));
  EXPECT_EQ(call({"--exact", "condition", "--fixture", "urn-5-2-3", "--event", "A", "--given", "B",
                  "--with-replacement"}).json(),
            triple(frac(1, 2), frac(1, 5), frac(3, 10)));
  Result bad = call({"condition", "--fixture", "frequentist-die", "--event", "1", "--given", "2"});
  EXPECT_EQ(bad.code, kExitInvalid);
  EXPECT_EQ(bad.error()["error"], "cannot-condition");
}

TEST(Cli, Expect) {
  EXPECT_EQ(call({"expect", "--fixture", "urn-5-2-3"}).out, "{\"expected_value\":-0.3}\n");
  EXPECT_EQ(call({"--exact", "expect", "--fixture", "urn-5-2-3"}).json()["expected_value"], frac(-3, 10));
  Result flags = call({"expect", "--fixture", "urn-5-2-3", "--payoff", "A=-20", "--payoff", "B=30",
                       "--payoff", "I=-10"});
  EXPECT_EQ(flags.out, "{\"expected_value\":-3.0}\n");
  TempFile pay(R"({"A": 0, "B": 0, "I": 0})");
  EXPECT_EQ(call({"expect", "--fixture", "urn-5-2-3", "--payoffs", pay.path()}).out, "{\"expected_value\":0.0}\n");
  Result missing = call({"expect", "--fixture", "urn-5-2-3", "--payoff", "A=1"});
  EXPECT_EQ(missing.error()["error"], "incomplete-payoff");
}

TEST(Cli, Fuse) {
  Json pcr5 = call({"fuse", "--method", "pcr5", "0.6,0.1,0.3", "0.2,0.3,0.5"}).json();
  EXPECT_NEAR(pcr5["t"].get<double>(), 0.44097, 5e-6);
  EXPECT_NEAR(pcr5["i"].get<double>(), 0.15, 5e-6);
  EXPECT_NEAR(pcr5["f"].get<double>(), 0.40903, 5e-6);
  EXPECT_EQ(pcr5["class"], "complete");
  EXPECT_EQ(call({"fuse", "--fixture", "alpha-gamma", "--method", "tnorm:product-probsum"}).out,
            "{\"t\":0.21,\"i\":0.6,\"f\":0.28,\"class\":\"paraconsistent\"}\n");
  EXPECT_EQ(call({"fuse", "--fixture", "candidates", "--method", "tnorm:min-max:optimistic"}).out,
            "{\"t\":0.3,\"i\":0.1,\"f\":0.5,\"class\":\"incomplete\"}\n");
  EXPECT_EQ(call({"fuse", "--method", "scheme:very-pessimistic", "0.5,0,0.5", "0.5,0,0.5"}).out,
            "{\"t\":0.25,\"i\":0.5,\"f\":0.25,\"class\":\"complete\"}\n");
  TempFile batch(R"([{"a": [0.6, 0.1, 0.3], "b": [0.2, 0.3, 0.5]}, {"a": [1, 0, 0], "b": [1, 0, 0]}])");
  Json many = call({"fuse", "--batch", batch.path()}).json();
  ASSERT_EQ(many.size(), 2u);
  EXPECT_EQ(many[1]["t"], 1.0);
  EXPECT_EQ(call({"fuse", "--method", "tnorm:nope", "0.6,0.1,0.3", "0.2,0.3,0.5"}).code, kExitInvalid);
  EXPECT_EQ(call({"fuse", "0.6,0.1,0.3"}).code, kExitInvalid);
}

TEST(Cli, Markov) {
  Json sq = call({"--exact", "markov", "--fixture", "markov-economy", "--power", "2"}).json();
  EXPECT_EQ(sq["rows"][0][0], Json::array({frac(41, 200), frac(3, 100), frac(0, 1)}));
  EXPECT_EQ(sq["rows"][0][1][0], frac(177, 1000));
  Json norm = call({"--exact", "markov", "--fixture", "markov-economy", "--power", "2", "--normalize"}).json();
  EXPECT_EQ(norm["states"], Json::array({"P", "R", "D"}));
  Json start = call({"markov", "--fixture", "markov-economy", "--start", "P", "--power", "2"}).json();
  Json plain = call({"markov", "--fixture", "markov-economy", "--power", "2"}).json();
  for (int c = 0; c < 3; ++c) {
    EXPECT_EQ(start["distribution"][c]["t"], plain["rows"][0][c][0]);
  }
  EXPECT_EQ(call({"markov", "--fixture", "markov-economy", "--operators", "eq209"}).code, kExitInvalid);
  EXPECT_EQ(call({"markov", "--fixture", "markov-economy", "--operators", "min-i"}).code, kExitOk);
}

TEST(Cli, SimulateDeterminismAndSeedOverride) {
  std::vector<std::string> args{"simulate", "--fixture", "frequentist-die", "--trials", "20000",
                                "--seed", "7", "--event", "1"};
  Result a = call(args), b = call(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> other = args;
  other[6] = "8";
  Result c = call(other);
  EXPECT_NE(a.out, c.out);
  Result overridden = call(other, std::string("7"));
  EXPECT_EQ(a.out, overridden.out);
  std::vector<std::string> threads = args;
  threads.insert(threads.end(), {"--workers", "5"});
  EXPECT_EQ(call(threads).out, a.out);
  EXPECT_EQ(call(args, std::string("x")).code, kExitInvalid);
  EXPECT_EQ(call({"simulate", "--fixture", "frequentist-die", "--trials", "0", "--event", "1"}).error()["error"],
            "invalid-config");
}

TEST(Cli, SimulateSurvey) {
  Json j = call({"--exact", "simulate", "--fixture", "survey", "--event", "2"}).json();
  EXPECT_EQ(j["np"], triple(frac(1, 5), frac(1, 5), frac(3, 5)));
  EXPECT_EQ(j["log"]["total"], 5);
}

TEST(Cli, Integrate) {
  EXPECT_EQ(call({"integrate", "--g", "x^2", "--h", "x", "--a", "0", "--b", "2", "--panels", "200"}).json(),
            io::parse(R"({"determinate": 2.66666666667, "indeterminacy": [0.0, 2.0]})"));
  Json u = call({"integrate", "--fixture", "uncertain-lower-limit"}).json();
  EXPECT_EQ(u["low_form"]["determinate"], 1.0);
  EXPECT_EQ(u["high_form"]["determinate"], 0.9);
  EXPECT_EQ(call({"integrate", "--g", "1", "--h", "x-1", "--a", "0", "--b", "2"}).error()["error"], "invalid-band");
  EXPECT_EQ(call({"integrate", "--g", "x+", "--a", "0", "--b", "1"}).error()["error"], "parse-error");
}

TEST(Cli, Refine) {
  Json coarse = call({"refine", "--fixture", "refined-handball"}).json();
  EXPECT_EQ(coarse["coarse"], io::parse(R"({"t": 0.7, "i": 0.1, "f": 0.2})"));
  Json fine = call({"--exact", "refine", "--triple", "7/10,1/10,1/5", "--t-weights", "4/7,2/7,1/14,1/14"}).json();
  ASSERT_EQ(fine["T"].size(), 4u);
  EXPECT_EQ(fine["T"][0]["chance"], frac(2, 5));
  EXPECT_EQ(call({"refine", "--triple", "0.7,0.1,0.2", "--t-weights", "0.5,0.4"}).error()["error"],
            "weight-sum-violation");
  EXPECT_EQ(call({"refine", "--properties", "1,2,1"}).json()["components"]["i"], true);
}

TEST(Cli, Classify) {
  EXPECT_EQ(call({"classify", "0.2,0.3,0.2"}).out, "{\"class\":\"incomplete\"}\n");
  EXPECT_EQ(call({"classify", "0.6,0.1,0.7"}).out, "{\"class\":\"paraconsistent\"}\n");
  EXPECT_EQ(call({"classify", "--fixture", "complete"}).out, "{\"class\":\"complete\"}\n");
  EXPECT_EQ(call({"classify", "0.6,0.1"}).code, kExitInvalid);
}

TEST(Cli, ExitCodes) {
  Result unknown = call({"frobnicate"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_EQ(unknown.error()["error"], "unknown-subcommand");
  EXPECT_EQ(call({}).code, kExitUsage);
  Result fixture = call({"eval", "--fixture", "no-such-thing", "--event", "1"});
  EXPECT_EQ(fixture.code, kExitUnknownFixture);
  Result file = call({"eval", "--space", "/nonexistent/space.json", "--event", "1"});
  EXPECT_EQ(file.code, kExitNoFile);
  EXPECT_EQ(file.error()["error"], "file-not-found");
  Result badflag = call({"eval", "--bogus"});
  EXPECT_EQ(badflag.code, kExitInvalid);
  Result mismatch = call({"eval", "--fixture", "frequentist-die", "--event", "7"});
  EXPECT_EQ(mismatch.code, kExitInvalid);
  EXPECT_EQ(mismatch.error()["error"], "event-space-mismatch");
  TempFile broken("{not json");
  EXPECT_EQ(call({"eval", "--space", broken.path(), "--event", "1"}).error()["error"], "parse-error");
  EXPECT_EQ(call({"eval", "--fixture", "markov-economy", "--event", "1"}).code, kExitInvalid);
  Result help = call({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
}

TEST(Cli, FixtureListingAndLedger) {
  Json list = call({"--list-fixtures"}).json();
  ASSERT_EQ(list.size(), fixtures::all().size());
  for (const char* name : {"urn-5-2-3", "coin-cubed", "markov-economy", "frequentist-die", "deck"}) {
    EXPECT_NE(fixtures::lookup(name), nullptr) << name;
  }
  EXPECT_EQ(call({"--show-fixture", "coin-cubed"}).json()["events"][1], Json::array({"T"}));
  EXPECT_EQ(call({"--show-fixture", "nope"}).code, kExitUnknownFixture);
  Json ledger = call({"--typo-ledger"}).json();
  ASSERT_FALSE(ledger.empty());
  bool found = false;
  for (const auto& e : ledger) {
    if (e["quantity"] == "c12.t") {
      found = true;
      EXPECT_EQ(e["printed"], "0.277");
      EXPECT_EQ(e["recomputed"], "0.177");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, EveryFixtureLoadsThroughItsReader) {
  for (const auto& f : fixtures::all()) {
    SCOPED_TRACE(f.name);
    switch (f.kind) {
      case fixtures::Kind::space:
        EXPECT_NO_THROW(io::space_from_json(f.data, {true}));
        break;
      case fixtures::Kind::matrix:
        EXPECT_NO_THROW(io::matrix_from_json(f.data, {true}));
        break;
      case fixtures::Kind::refined:
        EXPECT_NO_THROW(io::refined_from_json(f.data, {true}));
        break;
      case fixtures::Kind::triple:
        EXPECT_NO_THROW(io::np_from_json(f.data, {true}));
        break;
      default:
        EXPECT_TRUE(f.data.is_object());
    }
  }
}

TEST(Io, ScalarForms) {
  EXPECT_EQ(io::scalar_from_json(io::parse("\"22/52\""), {}), Scalar::fraction(11, 26));
  EXPECT_EQ(io::scalar_from_json(io::parse(R"({"num": 3, "den": 9})"), {}), Scalar::fraction(1, 3));
  EXPECT_TRUE(io::scalar_from_json(io::parse("0.15"), {true}).is_exact());
  EXPECT_FALSE(io::scalar_from_json(io::parse("0.15"), {false}).is_exact());
  EXPECT_THROW(io::scalar_from_json(io::parse("true"), {}), Error);
  EXPECT_THROW(io::scalar_from_text("1/0"), Error);
  EXPECT_EQ(io::dump(io::to_json(Scalar(0.1 + 0.2))), "0.3");
  EXPECT_EQ(io::dump(io::to_json(IntervalChance(0.1, 0.2))), "[0.1,0.2]");
}

TEST(Expression, Grammar) {
  EXPECT_DOUBLE_EQ(Expression("x^2 + 3*x - 1")(2.0), 9.0);
  EXPECT_DOUBLE_EQ(Expression("-x^2")(3.0), -9.0);
  EXPECT_DOUBLE_EQ(Expression("2^3^2")(0.0), 512.0);
  EXPECT_DOUBLE_EQ(Expression("(1 + x) / (2 - x)")(1.0), 2.0);
  EXPECT_DOUBLE_EQ(Expression("1.5e1")(0.0), 15.0);
  for (const char* bad : {"", "x +", "(x", "x)", "2 y", "x ** 2"}) {
    EXPECT_THROW(Expression{bad}, Error) << bad;
  }
}

}  // namespace
}  // namespace neutro::cli
