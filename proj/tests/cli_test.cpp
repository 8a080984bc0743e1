#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_corpus.h"

namespace {

TEST(Cli, CharpolyWordGolden) {
  CliRun r = run_cli("charpoly --n 2 --m 1 --expr z1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "theta[1] = xi[1,1,1] + xi[1,2,2]\n"
            "theta[2] = xi[1,1,1]*xi[1,2,2] - xi[1,1,2]*xi[1,2,1]\n");
}

TEST(Cli, CharpolyCommutatorTraceZero) {
  CliRun r = run_cli("charpoly --n 2 --m 2 --expr 'z1*z2 - z2*z1'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theta[1] = 0");
}

TEST(Cli, EkGoldens) {
  CliRun r1 = run_cli("ek --n 2 --m 1 -k 1 --expr y1");
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, "x[1,1] + x[2,1]\n");
  CliRun r2 = run_cli("ek --n 2 --m 2 -k 1 --expr 'y1*y2'");
  EXPECT_EQ(r2.out, "x[1,1]*x[1,2] + x[2,1]*x[2,2]\n");
}

TEST(Cli, DecomposeGoldens) {
  CliRun r1 = run_cli("decompose --n 2 --m 1 --expr 'x[1,1]^2 + x[2,1]^2'");
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, "E(1;y1)^2 - 2*E(2;y1)\n");
  CliRun r2 =
      run_cli("decompose --n 2 --m 2 --expr 'x[1,1]*x[2,2] + x[1,2]*x[2,1]'");
  EXPECT_EQ(r2.out, "E(1;y1)*E(1;y2) - E(1;y1*y2)\n");
  CliRun r3 = run_cli("decompose --n 2 --m 1 --ring mod:2 --expr 'x[1,1]*x[2,1]'");
  EXPECT_EQ(r3.out, "E(2;y1)\n");
  EXPECT_EQ(r3.code, 0);
}

TEST(Cli, WitnessReportsVerified) {
  CliRun r = run_cli("witness --n 2 --m 2 --expr 'z1*z2'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta_theta[1] = x[1,1]*x[1,2] + x[2,1]*x[2,2]"),
            std::string::npos);
  EXPECT_NE(r.out.find("verified: true"), std::string::npos);
}

TEST(Cli, PreimageGolden) {
  CliRun r = run_cli("preimage --n 2 --m 1 --expr 'x[1,1]^2 + x[2,1]^2'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "xi[1,1,1]^2 + 2*xi[1,1,2]*xi[1,2,1] + xi[1,2,2]^2\n");
}

TEST(Cli, TrialCommandsSucceed) {
  CliRun inv = run_cli("invariance --n 2 --m 2 --trials 5 --prime 101 --seed 7");
  EXPECT_EQ(inv.code, 0);
  EXPECT_NE(inv.out.find("failures: 0"), std::string::npos);
  CliRun deg = run_cli("degeneration --n 2 --m 2 --ring mod:101 --trials 5 --seed 3");
  EXPECT_EQ(deg.code, 0);
  EXPECT_NE(deg.out.find("verified: true"), std::string::npos);
}

TEST(Cli, JsonOutputIsWellFormed) {
  CliRun r = run_cli("ek --n 2 --m 1 -k 2 --expr y1 --format json");
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "ek");
  EXPECT_EQ(j.at("inputs").at("n"), "2");
  EXPECT_EQ(j.at("inputs").at("ring"), "int");
  EXPECT_EQ(j.at("inputs").at("k"), "2");
  EXPECT_EQ(j.at("result"), "x[1,1]*x[2,1]");
  EXPECT_EQ(j.at("verified"), true);

  CliRun c = run_cli("charpoly --n 2 --m 1 --expr z1 --format json");
  const nlohmann::json cj = nlohmann::json::parse(c.out);
  EXPECT_EQ(cj.at("inputs").at("mode"), "word");
  ASSERT_TRUE(cj.at("result").is_array());
  EXPECT_EQ(cj.at("result").at(0), "xi[1,1,1] + xi[1,2,2]");
}

TEST(Cli, ReadsExpressionFromStdin) {
  CliRun r = run_cli("ek --n 2 --m 1 -k 2 --expr -", false, "y1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x[1,1]*x[2,1]\n");
}

TEST(Cli, ParseErrorReportsColumnAndExitsOne) {
  CliRun r = run_cli("ek --n 2 --m 1 -k 1 --expr 'y1^^2'", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("column 4"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli("ek --n 2 --m 1 -k 1 --ring paddle --expr y1", true).code,
            1);
  EXPECT_EQ(run_cli("ek --n 2 --m 1 -k 1 --expr y5", true).code, 1);
  EXPECT_EQ(run_cli("ek --n 2 --m 1 -k 3 --expr y1", true).code, 1);
  EXPECT_EQ(run_cli("decompose --n 2 --m 1 --expr 'x[1,1]'", true).code, 1);
  EXPECT_EQ(run_cli("", true).code, 1);
  EXPECT_EQ(run_cli("ek --n 2 --m 1 -k 1", true).code, 1);  // missing --expr
  EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, CorpusIsDeterministic) {
  for (const std::string& args : cli_corpus()) {
    CliRun a = run_cli(args, true);
    CliRun b = run_cli(args, true);
    EXPECT_EQ(a.code, 0) << args << "\n" << a.out;
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

}  // namespace
