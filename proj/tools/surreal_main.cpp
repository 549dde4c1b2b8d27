#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "surreal/bench.hpp"
#include "surreal/calculator.hpp"
#include "surreal/genealogy.hpp"
#include "surreal/repl.hpp"
#include "surreal/service.hpp"

namespace {

int runBenchCommand(const surreal::Genealogy& tree, int nMax, const std::string& strategies,
                    int repeats, double budget, const std::string& csvPath) {
  surreal::BenchConfig config;
  config.nMax = nMax;
  config.repeats = repeats;
  config.budgetSeconds = budget;
  config.strategies.clear();
  for (std::size_t start = 0; start <= strategies.size();) {
    auto comma = strategies.find(',', start);
    auto name = strategies.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto s = surreal::parseStrategy(name);
    if (!s) {
      std::cerr << "unknown strategy: " << name << '\n';
      return 2;
    }
    config.strategies.push_back(*s);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  auto rows = surreal::runBench(tree, config, [](const surreal::BenchRow& r) {
    std::cerr << "n=" << r.n << ' ' << surreal::toString(r.strategy) << ' ';
    if (r.timedOut()) {
      std::cerr << "timeout\n";
    } else {
      std::cerr << *r.millis << " ms  timesEvals=" << *r.timesEvals << " plusEvals=" << *r.plusEvals
                << " geCalls=" << *r.geCalls << '\n';
    }
  });
  if (csvPath.empty()) {
    surreal::writeCsv(std::cout, rows);
  } else {
    std::ofstream out(csvPath);
    if (!out) {
      std::cerr << "cannot open " << csvPath << '\n';
      return 1;
    }
    surreal::writeCsv(out, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculator for Conway's short surreal numbers"};

  std::string strategyName = "parents";
  std::uint32_t maxGeneration = surreal::Genealogy::kDefaultMaxGeneration;
  int benchN = 0;
  std::string csvPath;
  int repeats = 3;
  double budget = 60;
  int servePort = 0;
  std::string webRoot = "web";
  std::string benchStrategies = "memo,parents";

  app.add_option("--strategy", strategyName, "naive | memo | parents")
      ->check(CLI::IsMember({"naive", "memo", "parents"}));
  app.add_option("--max-generation", maxGeneration, "genealogy generation cap")->check(CLI::PositiveNumber);
  app.add_option("--bench", benchN, "time n x n for n = 1..N, print CSV, exit")->check(CLI::PositiveNumber);
  app.add_option("--bench-strategies", benchStrategies, "comma-separated strategies for --bench");
  app.add_option("--csv", csvPath, "write bench CSV here instead of stdout");
  app.add_option("--repeats", repeats, "bench repeats per cell (median reported)")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", budget, "per-cell bench budget")->check(CLI::PositiveNumber);
  app.add_option("--serve", servePort, "serve the HTTP calculator on this port")->check(CLI::Range(1, 65535));
  app.add_option("--web-root", webRoot, "static files served at / with --serve");
  CLI11_PARSE(app, argc, argv);

  surreal::Genealogy tree(maxGeneration);
  surreal::EngineConfig config{.strategy = *surreal::parseStrategy(strategyName)};

  if (benchN > 0) {
    return runBenchCommand(tree, benchN, benchStrategies, repeats, budget, csvPath);
  }
  if (servePort > 0) {
    surreal::CalcService service(tree, config);
    std::cerr << "serving on http://0.0.0.0:" << servePort << '\n';
    return service.listen("0.0.0.0", servePort, webRoot) ? 0 : 1;
  }
  surreal::Engine engine(tree, config);
  surreal::Calculator calc(engine);
  return surreal::runRepl(calc, std::cin, std::cout);
}
