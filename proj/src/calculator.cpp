#include "surreal/calculator.hpp"

#include <charconv>
#include <chrono>
#include <sstream>

#include "surreal/genealogy.hpp"

namespace surreal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

Outcome failure(std::string message) {
  Outcome o;
  o.ok = false;
  o.display = "error: " + std::move(message);
  return o;
}

}  // namespace

std::string formatStats(const Stats& s) {
  std::ostringstream os;
  os << "geCalls=" << s.geCalls << " plusEvals=" << s.plusEvals << " timesEvals=" << s.timesEvals
     << " selectSteps=" << s.selectSteps << " tableHits=" << s.tableHits
     << " nodesBuilt=" << s.nodesBuilt;
  return os.str();
}

const char* helpText() {
  return "expressions: numbers (3, -1/2), forms <0|1>, + - *, comparisons < <= = != >= >\n"
         "bindings:    x = <expr>\n"
         "commands:    :gen d  :time e  :stats  :parents on|off  :strategy naive|memo|parents\n"
         "             :reset  :help  :quit";
}

Outcome Calculator::run(std::string_view line, Env& env) {
  line = trim(line);
  if (!line.empty() && line.front() == ':') {
    line.remove_prefix(1);
    const auto space = line.find_first_of(" \t");
    const std::string_view name = line.substr(0, space);
    const std::string_view arg = space == std::string_view::npos ? "" : trim(line.substr(space));
    return command(name, arg, env);
  }
  if (line.empty()) return Outcome{};
  return evaluate(line, env);
}

Outcome Calculator::evaluate(std::string_view text, Env& env) {
  const Stats before = engine_->statsSnapshot();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    const Value v = eval(parse(text), *engine_, env);
    out.display = format(v);
    if (const auto* node = std::get_if<const CanonicalNode*>(&v)) {
      out.node = *node;
    } else {
      out.boolean = std::get<bool>(v);
    }
  } catch (const Error& e) {
    out = failure(e.what());
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.delta = engine_->statsSnapshot() - before;
  return out;
}

Outcome Calculator::command(std::string_view name, std::string_view arg, Env& env) {
  if (name == "gen") {
    unsigned depth = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), depth);
    if (ec != std::errc{} || p != arg.data() + arg.size() || arg.empty())
      return failure("usage: :gen <depth>");
    if (depth > kMaxDumpDepth)
      return failure("depth must be at most " + std::to_string(kMaxDumpDepth));
    Outcome o;
    o.display = dumpTree(engine_->tree(), depth);
    if (!o.display.empty()) o.display.pop_back();
    return o;
  }
  if (name == "time") {
    if (arg.empty()) return failure("usage: :time <expr>");
    Outcome o = evaluate(arg, env);
    std::ostringstream os;
    os << o.display << "\ntime: " << o.millis << " ms\n" << formatStats(o.delta);
    o.display = os.str();
    return o;
  }
  if (name == "stats") {
    Outcome o;
    o.display = formatStats(engine_->statsSnapshot());
    return o;
  }
  if (name == "parents" || name == "strategy") {
    std::optional<Strategy> s;
    if (name == "parents") {
      if (arg == "on") s = Strategy::MemoParents;
      if (arg == "off") s = Strategy::Memo;
    } else {
      s = parseStrategy(arg);
    }
    if (!s) return failure(name == "parents" ? "usage: :parents on|off" : "usage: :strategy naive|memo|parents");
    engine_->setStrategy(*s);
    Outcome o;
    o.display = std::string("strategy ") + toString(*s);
    return o;
  }
  if (name == "reset") {
    env.clear();
    engine_->setStrategy(engine_->strategy());
    engine_->statsReset();
    Outcome o;
    o.display = "reset";
    return o;
  }
  if (name == "help") {
    Outcome o;
    o.display = helpText();
    return o;
  }
  return failure("unknown command :" + std::string(name));
}

}  // namespace surreal
