#pragma once

#include <ostream>

namespace coxiter {

// Runs the built-in invariant suites on fixed fixtures, printing one
// pass/fail line per check. Returns true when everything passes.
bool run_selfcheck(std::ostream& out);

}  // namespace coxiter
