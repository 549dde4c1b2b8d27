#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "surreal/arithmetic.hpp"
#include "surreal/expr.hpp"
#include "surreal/stats.hpp"

namespace surreal {

/// Result of running one input line.
struct Outcome {
  bool ok = true;
  std::string display;                       // formatted value, command output, or "error: ..."
  const CanonicalNode* node = nullptr;       // set when the line produced a surreal
  std::optional<bool> boolean;               // set when it produced a comparison result
  double millis = 0;
  Stats delta;
};

/// Runs statements and ':' commands against one engine. Bindings live in the
/// caller's Env so several sessions can share a calculator.
///
///   :gen d              tree dump to depth d
///   :time e             evaluate e, report wall time and counter deltas
///   :stats              counter snapshot
///   :parents on|off     shorthand for :strategy parents|memo
///   :strategy s         naive | memo | parents (clears tables)
///   :reset              drop bindings, tables and counters
///   :help
class Calculator {
 public:
  static constexpr std::uint32_t kMaxDumpDepth = 12;

  explicit Calculator(Engine& engine) : engine_(&engine) {}

  Outcome run(std::string_view line, Env& env);

  Engine& engine() { return *engine_; }

 private:
  Outcome evaluate(std::string_view text, Env& env);
  Outcome command(std::string_view name, std::string_view arg, Env& env);

  Engine* engine_;
};

std::string formatStats(const Stats& s);

const char* helpText();

}  // namespace surreal
