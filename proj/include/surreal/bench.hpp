#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "surreal/arithmetic.hpp"

namespace surreal {

/// One n x n cell. millis is empty when the cell ran past its budget; the
/// counters are then unset as well.
struct BenchRow {
  int n = 0;
  Strategy strategy = Strategy::MemoParents;
  std::optional<double> millis;
  std::optional<std::uint64_t> timesEvals;
  std::optional<std::uint64_t> plusEvals;
  std::optional<std::uint64_t> geCalls;

  bool timedOut() const { return !millis.has_value(); }
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchConfig {
  int nMax = 10;
  std::vector<Strategy> strategies{Strategy::Memo, Strategy::MemoParents};
  int repeats = 3;
  double budgetSeconds = 60;
};

/// Times mul(n, n) for n = 1..nMax under each strategy. Every repeat runs on a
/// fresh engine; millis is the median over repeats.
std::vector<BenchRow> runBench(const Genealogy& tree, const BenchConfig& config,
                               const std::function<void(const BenchRow&)>& progress = {});

/// Header "n,strategy,millis,timesEvals,plusEvals,geCalls"; timed-out cells
/// read "n,strategy,timeout,,,".
void writeCsv(std::ostream& os, const std::vector<BenchRow>& rows);

/// Inverse of writeCsv. Throws std::runtime_error on malformed input.
std::vector<BenchRow> readCsv(std::istream& is);

}  // namespace surreal
