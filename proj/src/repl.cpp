#include "surreal/repl.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace surreal {

int runRepl(Calculator& calc, std::istream& in, std::ostream& out, bool showPrompt) {
  Env env;
  std::string line;
  for (;;) {
    if (showPrompt) out << "surreal> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == ":quit" || line == ":q") return 0;
    const Outcome o = calc.run(line, env);
    if (!o.display.empty()) out << o.display << '\n';
  }
  if (showPrompt) out << '\n';
  return in.bad() ? 1 : 0;
}

}  // namespace surreal
