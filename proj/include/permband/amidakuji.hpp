#pragma once

// Ladder (ghost leg) drawings: n vertical lines, levels of horizontal rungs
// read top to bottom. A rung at column c joins lines c and c+1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permband/permutation.hpp"

namespace permband {

struct Ladder {
  int n = 0;
  // levels[0] is the top level; each holds rung columns.
  std::vector<std::vector<int>> levels;

  int rung_count() const noexcept;
};

struct LadderViolation {
  // 1-based level index and the offending column.
  int level = 0;
  int column = 0;
  std::string message;
};

// Every column lies in 1..n-1 and no two rungs of a level touch the same
// line. Reports the first violation in reading order.
std::optional<LadderViolation> validate(const Ladder& l);

// sigma(j) = the line person j ends on when starting at the top of line j.
// Throws InvalidArgument on an invalid ladder.
Permutation apply(const Ladder& l);

// A ladder with inversion_count(p) rungs whose apply() is p. Rungs are packed
// into levels first-fit; each level is sorted.
Ladder synthesize(const Permutation& p);

// Text form: "n=<int>" then one level per line as space-separated columns.
// '#' starts a comment; blank lines are ignored.
Ladder parse_ladder(std::string_view text);
std::string format_ladder(const Ladder& l);

// One row per level: '|' for lines and `rung_width` '-' per rung.
std::string render_ascii(const Ladder& l, int rung_width = 3);

}  // namespace permband
