#include <doctest.h>

#include <sstream>

#include "surreal/bench.hpp"
#include "surreal/calculator.hpp"
#include "surreal/repl.hpp"

using namespace surreal;

namespace {

std::string session(const std::string& input, int* status = nullptr) {
  Genealogy tree;
  Engine engine(tree);
  Calculator calc(engine);
  std::istringstream in(input);
  std::ostringstream out;
  const int rc = runRepl(calc, in, out, /*showPrompt=*/false);
  if (status) *status = rc;
  return out.str();
}

}  // namespace

TEST_CASE("repl evaluates lines") {
  CHECK(session("2*2\n") == "4 = ⟨3|⟩ (gen 4)\n");
  CHECK(session("x = <0|1>\nx+x\n") == "1/2 = ⟨0|1⟩ (gen 2)\n1 = ⟨0|⟩ (gen 1)\n");
  CHECK(session("2*2 = 4\n") == "true\n");
}

TEST_CASE("repl tree dump") {
  CHECK(session(":gen 1\n") == "L\t-1\t⟨|0⟩\n.\t0\t⟨|⟩\nR\t1\t⟨0|⟩\n");
  CHECK(session(":gen 13\n") == "error: depth must be at most 12\n");
  CHECK(session(":gen x\n") == "error: usage: :gen <depth>\n");
}

TEST_CASE("errors do not end the loop") {
  int rc = -1;
  const std::string out = session("1/3\ny\n<0|0>\n1+1\n", &rc);
  CHECK(out ==
        "error: denominator must be a power of two\n"
        "error: unbound variable y\n"
        "error: form is not a number\n"
        "2 = ⟨1|⟩ (gen 2)\n");
  CHECK(rc == 0);
}

TEST_CASE("quit stops reading") {
  int rc = -1;
  CHECK(session("1\n:quit\n2\n", &rc) == "1 = ⟨0|⟩ (gen 1)\n");
  CHECK(rc == 0);
  CHECK(session(":q\n2\n") == "");
}

TEST_CASE("commands") {
  Genealogy tree;
  Engine engine(tree);
  Calculator calc(engine);
  Env env;
  CHECK(calc.run(":strategy memo", env).display == "strategy memo");
  CHECK((engine.strategy() == Strategy::Memo));
  CHECK(calc.run(":parents on", env).display == "strategy parents");
  CHECK((engine.strategy() == Strategy::MemoParents));
  CHECK(calc.run(":parents off", env).display == "strategy memo");
  CHECK_FALSE(calc.run(":strategy fast", env).ok);
  CHECK(calc.run(":bogus", env).display == "error: unknown command :bogus");

  const Outcome timed = calc.run(":time 3*3", env);
  CHECK(timed.ok);
  CHECK(timed.display.rfind("9 = ⟨8|⟩ (gen 9)\ntime: ", 0) == 0);
  CHECK(timed.display.find("timesEvals=16") != std::string::npos);

  calc.run("x = 1", env);
  CHECK(calc.run(":reset", env).display == "reset");
  CHECK(env.empty());
  CHECK(engine.statsSnapshot().timesEvals == 0);
  CHECK(calc.run(":stats", env).display.find("geCalls=0") != std::string::npos);
  CHECK(calc.run(":help", env).display == helpText());
  CHECK(calc.run("", env).display.empty());
}

TEST_CASE("bench rows and csv") {
  Genealogy tree;
  BenchConfig config;
  config.nMax = 4;
  config.repeats = 1;
  const auto rows = runBench(tree, config);
  REQUIRE(rows.size() == 8);
  for (const BenchRow& r : rows) {
    CHECK_FALSE(r.timedOut());
    CHECK(*r.timesEvals == static_cast<std::uint64_t>((r.n + 1) * (r.n + 1)));
  }
  std::ostringstream os;
  writeCsv(os, rows);
  const std::string text = os.str();
  CHECK(text.rfind("n,strategy,millis,timesEvals,plusEvals,geCalls\n1,memo,", 0) == 0);
  std::istringstream is(text);
  CHECK(readCsv(is) == rows);
}

TEST_CASE("bench timeout rows") {
  Genealogy tree;
  BenchConfig config;
  config.nMax = 5;
  config.repeats = 1;
  config.strategies = {Strategy::Naive};
  config.budgetSeconds = 0.05;
  const auto rows = runBench(tree, config);
  REQUIRE(rows.size() == 5);
  CHECK_FALSE(rows[0].timedOut());
  CHECK(rows[4].timedOut());
  std::ostringstream os;
  writeCsv(os, rows);
  CHECK(os.str().find("\n5,naive,timeout,,,\n") != std::string::npos);
  std::istringstream is(os.str());
  CHECK(readCsv(is) == rows);
}

TEST_CASE("malformed csv") {
  std::istringstream noHeader("1,memo,1,1,1,1\n");
  CHECK_THROWS_AS(readCsv(noHeader), std::runtime_error);
  std::istringstream shortRow("n,strategy,millis,timesEvals,plusEvals,geCalls\n1,memo,1\n");
  CHECK_THROWS_AS(readCsv(shortRow), std::runtime_error);
  std::istringstream badStrategy("n,strategy,millis,timesEvals,plusEvals,geCalls\n1,fast,1,1,1,1\n");
  CHECK_THROWS_AS(readCsv(badStrategy), std::runtime_error);
}
