#include "permband/cayley.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <unordered_map>

#include "permband/error.hpp"
#include "permband/rank.hpp"

namespace permband {

void validate_degree_width(int n, int m) {
  if (n < 2) throw InvalidArgument("degree must be >= 2, got " + std::to_string(n));
  if (m < 1 || m > n - 1) {
    throw InvalidArgument("width must satisfy 1 <= m <= n-1, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  }
}

GeneratorSet GeneratorSet::make(int n, int m) {
  validate_degree_width(n, m);
  GeneratorSet g{n, m, {}};
  for (int w = 1; w <= m; ++w) {
    for (int i = 1; i + w <= n; ++i) g.members.push_back({i, i + w});
  }
  return g;
}

std::vector<kernels::SwapPair> GeneratorSet::swap_pairs() const {
  std::vector<kernels::SwapPair> out;
  out.reserve(members.size());
  for (auto t : members) {
    out.emplace_back(static_cast<std::uint8_t>(t.i - 1), static_cast<std::uint8_t>(t.j - 1));
  }
  return out;
}

std::uint64_t bfs_required_bytes(int n) {
  const std::uint64_t words = (factorial(n) + 63) / 64;
  return 3 * words * 8;
}

namespace {

void check_resources(int n, std::uint64_t extra_bytes, const BfsOptions& opts) {
  if (n > RankCodec::kMaxDegree) {
    throw ResourceError("degree " + std::to_string(n) + " exceeds the rank codec limit", 0);
  }
  const std::uint64_t need = bfs_required_bytes(n) + extra_bytes;
  if (n > kMaxDefaultDegree && !opts.allow_large) {
    throw ResourceError("degree " + std::to_string(n) + " needs " + std::to_string(need) +
                            " bytes; degrees above " + std::to_string(kMaxDefaultDegree) +
                            " require an explicit override",
                        need);
  }
  if (need > opts.memory_cap) {
    throw ResourceError("search over S_" + std::to_string(n) + " needs " + std::to_string(need) +
                            " bytes, memory cap is " + std::to_string(opts.memory_cap),
                        need);
  }
}

// Levelized BFS from the identity. on_level(k, level_bits) is called for every
// non-empty level k >= 1; returns level counts and leaves the last non-empty
// level in `last`.
template <class OnLevel>
std::vector<std::uint64_t> run_levels(int n, int m, const BfsOptions& opts, Bitset& last,
                                      OnLevel&& on_level, std::uint64_t stop_rank = ~std::uint64_t{0}) {
  const RankCodec codec(n);
  const auto gens = GeneratorSet::make(n, m).swap_pairs();
  Bitset visited(codec.size());
  Bitset current(codec.size());
  Bitset next(codec.size());
  visited.set(0);
  current.set(0);
  std::vector<std::uint64_t> counts{1};
  std::uint64_t visited_count = 1;
  while (stop_rank == ~std::uint64_t{0} || !current.test(stop_rank)) {
    const kernels::LevelInput in{codec, gens, visited, current};
    const std::uint64_t found =
        opts.kernel == Kernel::serial
            ? kernels::expand_serial(in, next)
            : kernels::expand_parallel(in, next, counts.back(), visited_count, opts.threads);
    if (found == 0) break;
    if (opts.kernel == Kernel::serial) {
      for (std::size_t w = 0; w < visited.word_count(); ++w) visited.word(w) |= next.word(w);
    } else {
      kernels::merge_into(visited, next, opts.threads);
    }
    visited_count += found;
    counts.push_back(found);
    on_level(static_cast<int>(counts.size() - 1), next);
    std::swap(current, next);
  }
  last = std::move(current);
  return counts;
}

}  // namespace

DiameterReport bfs_diameter(int n, int m, const BfsOptions& opts) {
  validate_degree_width(n, m);
  check_resources(n, 0, opts);
  const auto start = std::chrono::steady_clock::now();
  DiameterReport report;
  report.n = n;
  report.m = m;
  report.codec = std::string(RankCodec::kScheme);
  Bitset last;
  report.level_counts = run_levels(n, m, opts, last, [](int, const Bitset&) {});
  report.delta = static_cast<int>(report.level_counts.size()) - 1;
  report.farthest_count = report.level_counts.back();
  if (opts.collect_farthest) {
    if (report.farthest_count > opts.farthest_limit) {
      report.farthest_elided = true;
    } else {
      const RankCodec codec(n);
      report.farthest.reserve(report.farthest_count);
      // Ascending rank is ascending one-line order.
      last.for_each_set([&](std::uint64_t r) { report.farthest.push_back(codec.unrank(r)); });
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::uint64_t> distance_histogram(int n, int m, const BfsOptions& opts) {
  validate_degree_width(n, m);
  check_resources(n, 0, opts);
  Bitset last;
  return run_levels(n, m, opts, last, [](int, const Bitset&) {});
}

std::vector<std::uint8_t> distance_table(int n, int m, const BfsOptions& opts) {
  validate_degree_width(n, m);
  check_resources(n, factorial(n), opts);
  std::vector<std::uint8_t> table(factorial(n), 0);
  Bitset last;
  run_levels(n, m, opts, last, [&](int level, const Bitset& bits) {
    bits.for_each_set([&](std::uint64_t r) { table[r] = static_cast<std::uint8_t>(level); });
  });
  return table;
}

namespace {

using State = std::array<std::uint8_t, RankCodec::kMaxDegree>;
using DistMap = std::unordered_map<std::uint64_t, int>;

struct Meeting {
  int length = -1;
  std::uint64_t node = 0;
};

class Bidirectional {
 public:
  Bidirectional(const Permutation& target, int m)
      : n_(target.degree()), codec_(n_), gens_(GeneratorSet::make(n_, m).swap_pairs()),
        target_(codec_.rank(target)) {}

  // Returns nullopt-like length -1 when the state budget is exhausted.
  Meeting run(std::uint64_t max_states) {
    if (target_ == 0) return {0, 0};
    fwd_[0] = 0;
    bwd_[target_] = 0;
    std::vector<std::uint64_t> ff{0}, fb{target_};
    int depth_f = 0, depth_b = 0;
    for (;;) {
      if (fwd_.size() + bwd_.size() > max_states) return {};
      const bool forward = ff.size() <= fb.size();
      auto& frontier = forward ? ff : fb;
      auto& own = forward ? fwd_ : bwd_;
      const auto& other = forward ? bwd_ : fwd_;
      int& depth = forward ? depth_f : depth_b;
      std::vector<std::uint64_t> next;
      Meeting best;
      State s{};
      for (auto r : frontier) {
        codec_.unrank(r, span(s));
        for (auto [a, b] : gens_) {
          std::swap(s[a], s[b]);
          const std::uint64_t t = codec_.rank(span(s));
          std::swap(s[a], s[b]);
          if (own.contains(t)) continue;
          own.emplace(t, depth + 1);
          next.push_back(t);
          if (auto it = other.find(t); it != other.end()) {
            const int len = depth + 1 + it->second;
            if (best.length < 0 || len < best.length || (len == best.length && t < best.node)) {
              best = {len, t};
            }
          }
        }
      }
      ++depth;
      if (best.length >= 0) return best;
      frontier = std::move(next);
      std::sort(frontier.begin(), frontier.end());
    }
  }

  // Walks from `node` toward the side's root, returning the generators used.
  std::vector<Transposition> descend(std::uint64_t node, bool forward) const {
    const auto& map = forward ? fwd_ : bwd_;
    std::vector<Transposition> out;
    State s{};
    codec_.unrank(node, span(s));
    int d = map.at(node);
    while (d > 0) {
      bool stepped = false;
      for (auto [a, b] : gens_) {
        std::swap(s[a], s[b]);
        auto it = map.find(codec_.rank(span(s)));
        if (it != map.end() && it->second == d - 1) {
          out.push_back({a + 1, b + 1});
          --d;
          stepped = true;
          break;
        }
        std::swap(s[a], s[b]);
      }
      if (!stepped) throw Error("internal: broken search tree during path reconstruction");
    }
    return out;
  }

  std::uint64_t target_rank() const noexcept { return target_; }

 private:
  std::span<std::uint8_t> span(State& s) const { return {s.data(), static_cast<std::size_t>(n_)}; }

  int n_;
  RankCodec codec_;
  std::vector<kernels::SwapPair> gens_;
  std::uint64_t target_;
  DistMap fwd_;
  DistMap bwd_;
};

}  // namespace

int distance(const Permutation& p, int m, const DistanceOptions& opts) {
  validate_degree_width(p.degree(), m);
  if (p.degree() > RankCodec::kMaxDegree) {
    throw ResourceError("degree " + std::to_string(p.degree()) + " exceeds the rank codec limit", 0);
  }
  Bidirectional search(p, m);
  const Meeting meet = search.run(opts.max_states);
  if (meet.length >= 0) return meet.length;

  check_resources(p.degree(), 0, opts.fallback);
  Bitset last;
  const auto counts = run_levels(p.degree(), m, opts.fallback, last, [](int, const Bitset&) {},
                                 search.target_rank());
  return static_cast<int>(counts.size()) - 1;
}

std::vector<Transposition> shortest_word(const Permutation& p, int m, const DistanceOptions& opts) {
  validate_degree_width(p.degree(), m);
  if (p.degree() > RankCodec::kMaxDegree) {
    throw ResourceError("degree " + std::to_string(p.degree()) + " exceeds the rank codec limit", 0);
  }
  Bidirectional search(p, m);
  const Meeting meet = search.run(opts.max_states);
  if (meet.length >= 0) {
    if (meet.length == 0) return {};
    auto forward = search.descend(meet.node, true);
    std::reverse(forward.begin(), forward.end());
    const auto backward = search.descend(meet.node, false);
    forward.insert(forward.end(), backward.begin(), backward.end());
    return forward;
  }

  // Fallback: full distance table, then greedy descent from p to the identity.
  const int n = p.degree();
  const auto table = distance_table(n, m, opts.fallback);
  const RankCodec codec(n);
  const auto gens = GeneratorSet::make(n, m).swap_pairs();
  State s{};
  std::span<std::uint8_t> v(s.data(), static_cast<std::size_t>(n));
  std::uint64_t r = codec.rank(p);
  codec.unrank(r, v);
  // Descent from p gives p * g1 * g2 * ... = identity, so p = ... g2 g1.
  std::vector<Transposition> steps;
  while (r != 0) {
    bool stepped = false;
    for (auto [a, b] : gens) {
      std::swap(s[a], s[b]);
      const std::uint64_t t = codec.rank(v);
      if (table[t] + 1 == table[r]) {
        steps.push_back({a + 1, b + 1});
        r = t;
        stepped = true;
        break;
      }
      std::swap(s[a], s[b]);
    }
    if (!stepped) throw Error("internal: distance table has no descending neighbor");
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace permband
