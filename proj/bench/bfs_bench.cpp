// Serial vs parallel diameter search. Usage: bfs_bench [n_min] [n_max] [m] [reps]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "permband/cayley.hpp"

using namespace permband;

namespace {

double best_of(int reps, int n, int m, const BfsOptions& o, DiameterReport& rep) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    rep = bfs_diameter(n, m, o);
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n_min = argc > 1 ? std::atoi(argv[1]) : 8;
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 10;
  const int m = argc > 3 ? std::atoi(argv[3]) : 2;
  const int reps = argc > 4 ? std::atoi(argv[4]) : 3;

  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%3s %3s %6s %10s %10s %8s %s\n", "n", "m", "delta", "serial_s", "parallel_s", "speedup", "match");
  for (int n = n_min; n <= n_max; ++n) {
    BfsOptions o;
    o.collect_farthest = false;
    o.kernel = Kernel::serial;
    DiameterReport s, p;
    const double ts = best_of(reps, n, m, o, s);
    o.kernel = Kernel::parallel;
    const double tp = best_of(reps, n, m, o, p);
    const bool match = s.level_counts == p.level_counts;
    std::printf("%3d %3d %6d %10.4f %10.4f %8.2f %s\n", n, m, s.delta, ts, tp, ts / tp, match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
