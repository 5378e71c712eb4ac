#pragma once

// Constructive factorizations of permutations into bounded-width
// transpositions, transposition classification, and verification.
//
// A factor list [t0, t1, ..., t(k-1)] represents t0 * t1 * ... * t(k-1) under
// compose(), i.e. t(k-1) acts first.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permband/permutation.hpp"

namespace permband {

enum class Method {
  adjacent,
  unrestricted,
  hub,
  pivot_star,
  cycle_pair,
  cycle_pairing,
  peel_last,
  peel_ends,
  bfs,
};

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

// Counts behind a cycle-class construction: s cycles in L_m, t of them paired.
struct PairingStats {
  int lm_cycles = 0;
  int pairs = 0;
};

struct Factorization {
  Permutation target;
  int m = 1;
  std::vector<Transposition> factors;
  Method method = Method::adjacent;
  std::optional<int> claimed_bound;
  std::optional<PairingStats> pairing;

  int length() const noexcept { return static_cast<int>(factors.size()); }
};

// "method len m : (i1,j1)(i2,j2)..."
std::string format_factorization(const Factorization& f);

// Bubble sort with adjacent swaps; length == inversion_count(p). m = 1.
Factorization adjacent_sort(const Permutation& p);

// Splits cycles one transposition at a time; length == n - r. m = n - 1.
Factorization unrestricted_factor(const Permutation& p);

enum class TranspositionType { type_one, type_two };

// type_one when t's endpoints share a cycle of p (t * p has one more cycle),
// type_two otherwise (t * p has one fewer).
TranspositionType classify_transposition(Transposition t, const Permutation& p);

struct CycleClass {
  bool in_lm = false;
  // Smallest term r with |x - r| <= m for every term x; present iff !in_lm.
  std::optional<int> pivot;
  int smallest = 0;
  int largest = 0;
};

// A cycle is in L_m when every term has some term more than m away.
CycleClass cycle_class(std::span<const int> cycle, int m);

// Terms (r of ci, s of cj) with |x - s| <= m for all x in ci and
// |y - r| <= m for all y in cj, or nullopt. Throws InvalidArgument when the
// cycles share a point.
std::optional<std::pair<int, int>> pair_condition(std::span<const int> ci, std::span<const int> cj, int m);

// The single-cycle constructions; valid for 5 <= n <= 2m+1 (RegimeError
// otherwise). Cycles in L_m take p+1 factors through the hub m+1; the others
// take p-1 factors through a pivot (the smallest qualifying term unless
// `pivot` names another qualifying term).
Factorization factor_cycle(std::span<const int> cycle, int m, int n, std::optional<int> pivot = {});

// Two disjoint L_m cycles satisfying the pair condition, in p+q factors.
Factorization factor_cycle_pair(std::span<const int> ci, std::span<const int> cj, int m, int n);

// Cycle-class factorization of a whole permutation with greedy pairing of
// L_m cycles; length == n - r + 2s - 2t. Valid for 5 <= n <= 2m+1.
Factorization cycle_pairing_factor(const Permutation& p, int m);

enum class RecursiveStrategy {
  automatic,   // move both ends when m <= (n-1)/2, otherwise move the last entry
  move_last,   // always move n into place (needs m <= n-4 at each step)
  move_ends,   // always move 1 and n into place (needs m <= (n-1)/2)
};

// Peels entries into place with width-m hops and recurses on the remaining
// block. Base cases: m == 1 -> adjacent_sort; 5 <= n <= 2m+1 ->
// cycle_pairing_factor; n < 5 -> shortest word by search. Length is an upper
// bound, not necessarily optimal.
Factorization recursive_factor(const Permutation& p, int m,
                               RecursiveStrategy strategy = RecursiveStrategy::automatic);

// Minimum-length factorization by bidirectional search.
Factorization bfs_factor(const Permutation& p, int m);

// Picks the construction for the regime: m == 1 adjacent, m == n-1
// unrestricted, n < 5 search, 5 <= n <= 2m+1 cycle pairing, recursive otherwise.
Factorization auto_factor(const Permutation& p, int m);

struct Violation {
  enum class Kind { bad_factor, width, product, parity };
  Kind kind;
  // Index of the offending factor, or -1 for whole-list violations.
  int index = -1;
  std::string message;
};

// Checks, in order: each factor is a valid transposition of the degree,
// widths <= m, product equals the target, length parity matches the target.
std::optional<Violation> verify(const Factorization& f);

}  // namespace permband
