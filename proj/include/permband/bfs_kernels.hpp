#pragma once

// Level-expansion kernels for breadth-first search over rank-encoded S_n.
//
// Each kernel computes   next = { r : r not in visited, r adjacent to current }
// and returns |next|. `visited` must already contain `current`. The state
// graph is undirected (every generator is an involution), so the set is fully
// determined by its inputs and all kernels produce bit-identical output.
//
// expand_serial is the reference implementation. expand_parallel is the
// OpenMP kernel: it pushes from small frontiers (atomic OR into `next`) and
// pulls into unvisited words once the frontier is large (each thread owns a
// disjoint range of `next` words, no atomics).

#include <cstdint>
#include <span>
#include <utility>

#include "permband/bitset.hpp"
#include "permband/rank.hpp"

namespace permband::kernels {

// A generator as a pair of 0-based positions.
using SwapPair = std::pair<std::uint8_t, std::uint8_t>;

struct LevelInput {
  const RankCodec& codec;
  std::span<const SwapPair> generators;
  const Bitset& visited;
  const Bitset& current;
};

enum class Direction { automatic, push, pull };

std::uint64_t expand_serial(const LevelInput& in, Bitset& next);

// frontier_count = |current|, visited_count = |visited|; used only to pick
// the direction. threads <= 0 means the OpenMP default.
std::uint64_t expand_parallel(const LevelInput& in, Bitset& next, std::uint64_t frontier_count,
                              std::uint64_t visited_count, int threads,
                              Direction direction = Direction::automatic);

// visited |= next, parallel over words.
void merge_into(Bitset& visited, const Bitset& next, int threads);

}  // namespace permband::kernels
