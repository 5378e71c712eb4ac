#pragma once

// Exact diameters where a closed form is known, recurrence bounds elsewhere,
// and recognition / enumeration of the permutations at maximum distance in the
// 5 <= n <= 2m+1 regime.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permband/cayley.hpp"
#include "permband/permutation.hpp"

namespace permband {

// m == 1: n(n-1)/2; m == n-1: n-1; 5 <= n <= 2m+1: n + floor((n-m)/2) - 1.
// nullopt elsewhere. Throws InvalidArgument on invalid (n, m).
std::optional<int> delta_closed_form(int n, int m);

// Memoized exact diameters: closed forms first, then BFS for n <= bfs_max_n,
// then anything seeded by hand.
class DeltaOracle {
 public:
  explicit DeltaOracle(int bfs_max_n = 0, BfsOptions bfs = {});

  std::optional<int> exact(int n, int m);
  // Where the exact value came from: "closed-form", "bfs" or "seeded".
  std::optional<std::string> source(int n, int m);
  void seed(int n, int m, int delta);
  int bfs_max_n() const noexcept { return bfs_max_n_; }

 private:
  int bfs_max_n_;
  BfsOptions bfs_;
  std::map<std::pair<int, int>, std::pair<int, std::string>> cache_;
};

struct DeltaBounds {
  int n = 0;
  int m = 0;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::string lower_source;
  std::string upper_source;
};

// upper: the exact value if known, else the smaller of the two peeling
// recurrences (move n: ceil((n-1)/m) + delta(n-1, m) when m <= n-4; move 1
// and n: 2 ceil((n-1)/m) - 1 + delta(n-2, m) when 2m <= n-1), recursing on
// subproblems with the same rules. lower: max(n-1, exact value if known).
DeltaBounds delta_bounds(int n, int m, DeltaOracle& oracle);
DeltaBounds delta_bounds(int n, int m);

enum class ExtremalTag { A, B_i, B_ii, B_iii, B_iv, NCYCLE, REVERSE, NONE };

std::string_view to_string(ExtremalTag t);

// How the B_i membership sets are read. `literal` requires the remaining
// cycle to be exactly {d+1..n-d}; `resolved` lets each block give up one of
// its end points (d+1 or n-d) so long as the remaining cycle keeps one of them.
enum class Reading { literal, resolved };

struct ExtremalCase {
  ExtremalTag tag = ExtremalTag::NONE;
  int n = 0;
  int d = 0;
  // Matched 2-cycles (i_t, j_t), the distinguished 3- or 4-cycle (may be
  // empty) and the remaining cycle of k's.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> special;
  std::vector<int> rest;

  Permutation assemble() const;
};

// Regimes: m == n-1 (NCYCLE), m == 1 (REVERSE), or 5 <= n <= 2m+1 with
// m <= n-2 (cases A and B_*). Throws RegimeError otherwise.
ExtremalCase is_extremal(const Permutation& p, int m, Reading reading = Reading::resolved);

// Every permutation is_extremal accepts (under `reading`), sorted by one-line
// notation. Throws ResourceError when more than `limit` would be produced.
std::vector<Permutation> enumerate_extremal(int n, int m, Reading reading = Reading::resolved,
                                            std::uint64_t limit = 10'000'000);

// Number of permutations enumerate_extremal would produce.
std::uint64_t extremal_count(int n, int m, Reading reading = Reading::resolved);

struct ClassificationAudit {
  int n = 0;
  int m = 0;
  Reading reading = Reading::resolved;
  std::uint64_t farthest_count = 0;
  std::uint64_t recognized_count = 0;
  // At maximum distance but not recognized, and recognized but not at
  // maximum distance.
  std::vector<Permutation> missed;
  std::vector<Permutation> extra;
  // enumerate_extremal agrees with the recognizer.
  bool enumeration_consistent = true;

  bool ok() const noexcept { return missed.empty() && extra.empty() && enumeration_consistent; }
  // One "classification mismatch" line per offending permutation.
  std::vector<std::string> mismatch_report() const;
};

// Compares the recognizer against the BFS farthest set over all of S_n.
ClassificationAudit audit_classification(int n, int m, Reading reading = Reading::resolved,
                                         const BfsOptions& bfs = {});

}  // namespace permband
