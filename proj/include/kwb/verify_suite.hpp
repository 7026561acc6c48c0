#pragma once

// Replay of the frozen fixture suite: one line per criterion, PASS or FAIL
// with elapsed time.  Values are exact; runtime targets are printed for
// information only and never fail a criterion.

#include <iosfwd>

namespace kwb {

// Returns the number of failed criteria.  `slow` extends the graded
// dimension table check to n = 11, 12.
int run_acceptance_suite(std::ostream& out, bool slow = false);

}  // namespace kwb
