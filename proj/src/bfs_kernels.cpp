#include "permband/bfs_kernels.hpp"

#include <array>
#include <atomic>
#include <omp.h>

namespace permband::kernels {

namespace {

using State = std::array<std::uint8_t, RankCodec::kMaxDegree>;

inline std::span<std::uint8_t> view(State& s, int n) {
  return {s.data(), static_cast<std::size_t>(n)};
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::uint64_t expand_serial(const LevelInput& in, Bitset& next) {
  const int n = in.codec.degree();
  State s{};
  std::uint64_t found = 0;
  next.clear();
  in.current.for_each_set([&](std::uint64_t r) {
    in.codec.unrank(r, view(s, n));
    for (auto [a, b] : in.generators) {
      std::swap(s[a], s[b]);
      const std::uint64_t t = in.codec.rank(view(s, n));
      std::swap(s[a], s[b]);
      if (!in.visited.test(t) && !next.test(t)) {
        next.set(t);
        ++found;
      }
    }
  });
  return found;
}

namespace {

std::uint64_t push_parallel(const LevelInput& in, Bitset& next, int threads) {
  const int n = in.codec.degree();
  const auto words = static_cast<std::int64_t>(in.current.word_count());
  std::uint64_t* out = next.data();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t w = 0; w < words; ++w) {
    State s{};
    for (std::uint64_t bits = in.current.word(static_cast<std::size_t>(w)); bits; bits &= bits - 1) {
      const std::uint64_t r = static_cast<std::uint64_t>(w) * 64 + static_cast<unsigned>(std::countr_zero(bits));
      in.codec.unrank(r, view(s, n));
      for (auto [a, b] : in.generators) {
        std::swap(s[a], s[b]);
        const std::uint64_t t = in.codec.rank(view(s, n));
        std::swap(s[a], s[b]);
        if (!in.visited.test(t)) {
          std::atomic_ref<std::uint64_t> cell(out[t >> 6]);
          cell.fetch_or(std::uint64_t{1} << (t & 63), std::memory_order_relaxed);
        }
      }
    }
  }
  return next.count();
}

std::uint64_t pull_parallel(const LevelInput& in, Bitset& next, int threads) {
  const int n = in.codec.degree();
  const auto words = static_cast<std::int64_t>(in.visited.word_count());
  std::uint64_t found = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) reduction(+ : found)
  for (std::int64_t w = 0; w < words; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    State s{};
    std::uint64_t acc = 0;
    for (std::uint64_t bits = ~in.visited.word(wi) & in.visited.valid_mask(wi); bits; bits &= bits - 1) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
      in.codec.unrank(static_cast<std::uint64_t>(w) * 64 + bit, view(s, n));
      for (auto [a, b] : in.generators) {
        std::swap(s[a], s[b]);
        const std::uint64_t t = in.codec.rank(view(s, n));
        std::swap(s[a], s[b]);
        if (in.current.test(t)) {
          acc |= std::uint64_t{1} << bit;
          break;
        }
      }
    }
    next.word(wi) = acc;
    found += static_cast<std::uint64_t>(std::popcount(acc));
  }
  return found;
}

}  // namespace

std::uint64_t expand_parallel(const LevelInput& in, Bitset& next, std::uint64_t frontier_count,
                              std::uint64_t visited_count, int threads, Direction direction) {
  threads = resolve_threads(threads);
  if (direction == Direction::automatic) {
    // Pull touches every unvisited state but stops at the first hit; push
    // touches every frontier state with every generator.
    const std::uint64_t unvisited = in.visited.size() - visited_count;
    direction = frontier_count * 4 > unvisited ? Direction::pull : Direction::push;
  }
  if (direction == Direction::pull) return pull_parallel(in, next, threads);

  const auto words = static_cast<std::int64_t>(next.word_count());
  std::uint64_t* out = next.data();
#pragma omp parallel for num_threads(threads)
  for (std::int64_t w = 0; w < words; ++w) out[w] = 0;
  return push_parallel(in, next, threads);
}

void merge_into(Bitset& visited, const Bitset& next, int threads) {
  threads = resolve_threads(threads);
  const auto words = static_cast<std::int64_t>(visited.word_count());
  std::uint64_t* dst = visited.data();
  const std::uint64_t* src = next.data();
#pragma omp parallel for num_threads(threads)
  for (std::int64_t w = 0; w < words; ++w) dst[w] |= src[w];
}

}  // namespace permband::kernels
