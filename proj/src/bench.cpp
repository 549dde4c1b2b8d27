#include "surreal/bench.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace surreal {

namespace {

constexpr const char* kHeader = "n,strategy,millis,timesEvals,plusEvals,geCalls";

struct Run {
  double millis;
  Stats stats;
};

std::optional<Run> timeOnce(const Genealogy& tree, Strategy s, int n, double budgetSeconds) {
  Engine engine(tree, EngineConfig{.strategy = s});
  const CanonicalNode* x = tree.fromDyadic(Dyadic(n));
  const auto start = Engine::Clock::now();
  engine.setDeadline(start + std::chrono::duration_cast<Engine::Clock::duration>(
                                 std::chrono::duration<double>(budgetSeconds)));
  engine.statsReset();
  try {
    engine.mul(x, x);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  const auto elapsed = Engine::Clock::now() - start;
  return Run{std::chrono::duration<double, std::milli>(elapsed).count(), engine.statsSnapshot()};
}

std::string formatDouble(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::vector<std::string> splitFields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

template <class T>
T parseNumber(const std::string& s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::runtime_error("bad number in CSV: " + s);
  return v;
}

}  // namespace

std::vector<BenchRow> runBench(const Genealogy& tree, const BenchConfig& config,
                               const std::function<void(const BenchRow&)>& progress) {
  if (config.nMax < 1 || static_cast<std::uint32_t>(config.nMax) > tree.maxGeneration())
    throw std::invalid_argument("nMax must lie in [1, generation cap]");
  if (config.repeats < 1) throw std::invalid_argument("repeats must be positive");

  std::vector<BenchRow> rows;
  for (Strategy s : config.strategies) {
    bool exhausted = false;  // cost grows with n, so one timeout ends the column
    for (int n = 1; n <= config.nMax; ++n) {
      BenchRow row;
      row.n = n;
      row.strategy = s;
      if (!exhausted) {
        std::vector<double> times;
        std::optional<Stats> counters;
        for (int r = 0; r < config.repeats; ++r) {
          auto run = timeOnce(tree, s, n, config.budgetSeconds);
          if (!run) {
            exhausted = true;
            break;
          }
          times.push_back(run->millis);
          counters = run->stats;
        }
        if (!exhausted) {
          std::sort(times.begin(), times.end());
          row.millis = times[times.size() / 2];
          row.timesEvals = counters->timesEvals;
          row.plusEvals = counters->plusEvals;
          row.geCalls = counters->geCalls;
        }
      }
      if (progress) progress(row);
      rows.push_back(row);
    }
  }
  return rows;
}

void writeCsv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kHeader << '\n';
  for (const BenchRow& r : rows) {
    os << r.n << ',' << toString(r.strategy) << ',';
    if (r.timedOut()) {
      os << "timeout,,,\n";
      continue;
    }
    os << formatDouble(*r.millis) << ',' << *r.timesEvals << ',' << *r.plusEvals << ','
       << *r.geCalls << '\n';
  }
}

std::vector<BenchRow> readCsv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) throw std::runtime_error("missing CSV header");
  std::vector<BenchRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = splitFields(line);
    if (f.size() != 6) throw std::runtime_error("expected 6 CSV fields: " + line);
    BenchRow r;
    r.n = parseNumber<int>(f[0]);
    auto s = parseStrategy(f[1]);
    if (!s) throw std::runtime_error("unknown strategy in CSV: " + f[1]);
    r.strategy = *s;
    if (f[2] != "timeout") {
      r.millis = parseNumber<double>(f[2]);
      r.timesEvals = parseNumber<std::uint64_t>(f[3]);
      r.plusEvals = parseNumber<std::uint64_t>(f[4]);
      r.geCalls = parseNumber<std::uint64_t>(f[5]);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace surreal
