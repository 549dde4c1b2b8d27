#pragma once

#include <iosfwd>

#include "surreal/calculator.hpp"

namespace surreal {

/// Line-oriented terminal loop. Returns 0 on :quit or end of input, 1 when
/// reading fails. Errors in a statement never end the loop.
int runRepl(Calculator& calc, std::istream& in, std::ostream& out, bool showPrompt = true);

}  // namespace surreal
