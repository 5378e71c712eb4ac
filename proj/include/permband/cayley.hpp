#pragma once

// Exact distances and diameters on the Cayley graph of S_n generated by the
// transpositions (i, j) with j - i <= m.
//
// Vertices are one-line permutations; an edge applies a generator as a
// position swap (sigma -> sigma * t). Because the generating set is closed
// under inversion, the distance from the identity equals the minimum number
// of generators whose product is sigma, and by vertex transitivity the
// identity's eccentricity is the diameter.

#include <cstdint>
#include <string>
#include <vector>

#include "permband/bfs_kernels.hpp"
#include "permband/permutation.hpp"

namespace permband {

struct GeneratorSet {
  int n = 0;
  int m = 0;
  // Ordered by width, then by i.
  std::vector<Transposition> members;

  static GeneratorSet make(int n, int m);
  std::vector<kernels::SwapPair> swap_pairs() const;
};

// Throws InvalidArgument unless n >= 2 and 1 <= m <= n - 1.
void validate_degree_width(int n, int m);

enum class Kernel { serial, parallel };

constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{2} << 30;

struct BfsOptions {
  bool collect_farthest = true;
  // Farthest permutations are materialized only up to this many; the count
  // is always reported.
  std::uint64_t farthest_limit = 1'000'000;
  std::uint64_t memory_cap = kDefaultMemoryCap;
  // 0 = OpenMP default. Never changes results.
  int threads = 0;
  Kernel kernel = Kernel::parallel;
  // Degrees above kMaxDefaultDegree are refused unless set.
  bool allow_large = false;
};

constexpr int kMaxDefaultDegree = 12;

struct DiameterReport {
  int n = 0;
  int m = 0;
  int delta = 0;
  // level_counts[k] = number of permutations at distance k.
  std::vector<std::uint64_t> level_counts;
  std::uint64_t farthest_count = 0;
  // Sorted by one-line notation; empty when not collected or elided.
  std::vector<Permutation> farthest;
  bool farthest_elided = false;
  std::string codec;
  double wall_seconds = 0.0;
};

// Bytes needed by the three n!-bit level arrays.
std::uint64_t bfs_required_bytes(int n);

DiameterReport bfs_diameter(int n, int m, const BfsOptions& opts = {});
std::vector<std::uint64_t> distance_histogram(int n, int m, const BfsOptions& opts = {});

// distance of every permutation, indexed by RankCodec(n) rank. Needs an extra
// n! bytes on top of the level arrays.
std::vector<std::uint8_t> distance_table(int n, int m, const BfsOptions& opts = {});

struct DistanceOptions {
  // Bidirectional search gives up on hash frontiers beyond this many stored
  // states and falls back to a full bit-array BFS.
  std::uint64_t max_states = std::uint64_t{1} << 22;
  BfsOptions fallback;
};

int distance(const Permutation& p, int m, const DistanceOptions& opts = {});

// A minimum-length list of generators whose product (rightmost first) is p.
std::vector<Transposition> shortest_word(const Permutation& p, int m, const DistanceOptions& opts = {});

}  // namespace permband
