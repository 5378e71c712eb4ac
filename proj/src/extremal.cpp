#include "permband/extremal.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>

#include "permband/error.hpp"
#include "permband/rank.hpp"

namespace permband {

std::optional<int> delta_closed_form(int n, int m) {
  validate_degree_width(n, m);
  if (m == 1) return n * (n - 1) / 2;
  if (m == n - 1) return n - 1;
  if (n >= 5 && n <= 2 * m + 1) return n + (n - m) / 2 - 1;
  return std::nullopt;
}

DeltaOracle::DeltaOracle(int bfs_max_n, BfsOptions bfs) : bfs_max_n_(bfs_max_n), bfs_(bfs) {
  bfs_.collect_farthest = false;
}

std::optional<int> DeltaOracle::exact(int n, int m) {
  if (auto it = cache_.find({n, m}); it != cache_.end()) return it->second.first;
  if (auto c = delta_closed_form(n, m)) {
    cache_[{n, m}] = {*c, "closed-form"};
    return c;
  }
  // Below degree 5 the search is trivial, so it always runs.
  if (n <= std::max(bfs_max_n_, 4)) {
    const int delta = bfs_diameter(n, m, bfs_).delta;
    cache_[{n, m}] = {delta, "bfs"};
    return delta;
  }
  return std::nullopt;
}

std::optional<std::string> DeltaOracle::source(int n, int m) {
  if (!exact(n, m)) return std::nullopt;
  return cache_.at({n, m}).second;
}

void DeltaOracle::seed(int n, int m, int delta) {
  validate_degree_width(n, m);
  cache_[{n, m}] = {delta, "seeded"};
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Upper {
  int value;
  std::string source;
};

Upper upper_bound(int n, int m, DeltaOracle& oracle, std::map<std::pair<int, int>, Upper>& memo) {
  if (auto it = memo.find({n, m}); it != memo.end()) return it->second;
  Upper best{n * (n - 1) / 2, "adjacent"};
  if (auto e = oracle.exact(n, m)) {
    best = {*e, *oracle.source(n, m)};
  } else {
    if (n >= 5 && m <= n - 4) {
      const int v = ceil_div(n - 1, m) + upper_bound(n - 1, m, oracle, memo).value;
      if (v < best.value) best = {v, "move-last"};
    }
    if (n >= 5 && 2 * m <= n - 1) {
      const int v = 2 * ceil_div(n - 1, m) - 1 + upper_bound(n - 2, m, oracle, memo).value;
      if (v < best.value) best = {v, "move-ends"};
    }
  }
  memo.emplace(std::pair{n, m}, best);
  return best;
}

}  // namespace

DeltaBounds delta_bounds(int n, int m, DeltaOracle& oracle) {
  validate_degree_width(n, m);
  std::map<std::pair<int, int>, Upper> memo;
  const Upper up = upper_bound(n, m, oracle, memo);
  DeltaBounds b{n, m, n - 1, up.value, false, "n-1", up.source};
  if (auto e = oracle.exact(n, m)) {
    b.lower = *e;
    b.lower_source = *oracle.source(n, m);
  }
  b.exact = b.lower == b.upper;
  return b;
}

DeltaBounds delta_bounds(int n, int m) {
  DeltaOracle oracle;
  return delta_bounds(n, m, oracle);
}

std::string_view to_string(ExtremalTag t) {
  switch (t) {
    case ExtremalTag::A: return "A";
    case ExtremalTag::B_i: return "B_i";
    case ExtremalTag::B_ii: return "B_ii";
    case ExtremalTag::B_iii: return "B_iii";
    case ExtremalTag::B_iv: return "B_iv";
    case ExtremalTag::NCYCLE: return "NCYCLE";
    case ExtremalTag::REVERSE: return "REVERSE";
    case ExtremalTag::NONE: return "NONE";
  }
  return "NONE";
}

Permutation ExtremalCase::assemble() const {
  std::vector<std::vector<int>> cycles;
  for (auto [i, j] : pairs) cycles.push_back({i, j});
  if (!special.empty()) cycles.push_back(special);
  if (!rest.empty()) cycles.push_back(rest);
  return from_cycles(n, cycles);
}

namespace {

enum class Special { none, two_low, two_high, alternating };

struct Template {
  ExtremalTag tag;
  std::vector<int> low;
  std::vector<int> high;
  Special special;
};

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int x = a; x <= b; ++x) v.push_back(x);
  return v;
}

bool in_regime(int n, int m) { return n >= 5 && n <= 2 * m + 1 && m <= n - 2; }

void check_regime(int n, int m) {
  validate_degree_width(n, m);
  if (m == n - 1 || m == 1 || in_regime(n, m)) return;
  throw RegimeError("no extremal classification for n=" + std::to_string(n) + " m=" +
                    std::to_string(m) + "; it covers m=1, m=n-1 and 5 <= n <= 2m+1");
}

// All block templates for (n, m) under a reading. The low and high blocks
// are covered exactly by the 2-cycles plus the special cycle; everything else
// is one cycle.
std::vector<Template> templates(int n, int m, Reading reading) {
  const int d = (n - m) / 2;
  std::vector<Template> out;
  if ((n - m) % 2 == 0) {
    out.push_back({ExtremalTag::A, range(1, d), range(n - d + 1, n), Special::none});
    return out;
  }
  if (reading == Reading::literal) {
    out.push_back({ExtremalTag::B_i, range(1, d), range(n - d + 1, n), Special::none});
  } else {
    for (int a = 1; a <= d + 1; ++a) {
      for (int b = n - d; b <= n; ++b) {
        if (a != d + 1 && b != n - d) continue;
        auto low = range(1, d + 1);
        auto high = range(n - d, n);
        low.erase(std::find(low.begin(), low.end(), a));
        high.erase(std::find(high.begin(), high.end(), b));
        out.push_back({ExtremalTag::B_i, low, high, Special::none});
      }
    }
  }
  out.push_back({ExtremalTag::B_ii, range(1, d + 1), range(n - d + 1, n), Special::two_low});
  out.push_back({ExtremalTag::B_iii, range(1, d), range(n - d, n), Special::two_high});
  out.push_back({ExtremalTag::B_iv, range(1, d + 1), range(n - d, n), Special::alternating});
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::optional<ExtremalCase> match(const Template& t, const CycleDecomposition& dec, int n, int d) {
  if (dec.count() != d + 1) return std::nullopt;
  ExtremalCase c{t.tag, n, d, {}, {}, {}};
  auto is_low = [&](int x) { return contains(t.low, x); };
  auto is_high = [&](int x) { return contains(t.high, x); };
  int specials = 0;
  for (const auto& cyc : dec.cycles) {
    const auto lows = std::count_if(cyc.begin(), cyc.end(), is_low);
    const auto highs = std::count_if(cyc.begin(), cyc.end(), is_high);
    if (lows == 0 && highs == 0) {
      if (!c.rest.empty()) return std::nullopt;
      c.rest = cyc;
      continue;
    }
    if (lows + highs != static_cast<long>(cyc.size())) return std::nullopt;
    if (cyc.size() == 2 && lows == 1) {
      c.pairs.emplace_back(std::min(cyc[0], cyc[1]), std::max(cyc[0], cyc[1]));
      continue;
    }
    ++specials;
    c.special = cyc;
    switch (t.special) {
      case Special::none: return std::nullopt;
      case Special::two_low:
        if (cyc.size() != 3 || lows != 2) return std::nullopt;
        break;
      case Special::two_high:
        if (cyc.size() != 3 || highs != 2) return std::nullopt;
        break;
      case Special::alternating:
        if (cyc.size() != 4 || lows != 2 || is_low(cyc[0]) == is_low(cyc[1]) ||
            is_low(cyc[1]) == is_low(cyc[2])) {
          return std::nullopt;
        }
        if (!contains(cyc, d + 1) && !contains(cyc, n - d)) return std::nullopt;
        break;
    }
  }
  if (specials != (t.special == Special::none ? 0 : 1)) return std::nullopt;
  if (c.rest.empty()) return std::nullopt;
  return c;
}

bool is_full_cycle(const CycleDecomposition& dec) { return dec.count() == 1; }

bool is_reverse(const Permutation& p) {
  const int n = p.degree();
  for (int x = 1; x <= n; ++x) {
    if (p(x) != n + 1 - x) return false;
  }
  return true;
}

// Calls f on every cyclic ordering of `support` starting at its smallest
// element.
void for_each_cycle(std::vector<int> support, const std::function<void(const std::vector<int>&)>& f) {
  std::sort(support.begin(), support.end());
  if (support.size() <= 2) {
    f(support);
    return;
  }
  do {
    f(support);
  } while (std::next_permutation(support.begin() + 1, support.end()));
}

// Calls f on every bijection low -> high (as the high images in low order).
void for_each_matching(const std::vector<int>& low, std::vector<int> high,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  std::sort(high.begin(), high.end());
  std::vector<std::pair<int, int>> pairs(low.size());
  do {
    for (std::size_t k = 0; k < low.size(); ++k) pairs[k] = {low[k], high[k]};
    f(pairs);
  } while (std::next_permutation(high.begin(), high.end()));
}

std::uint64_t falling(int k) {
  std::uint64_t f = 1;
  for (int x = 2; x <= k; ++x) f *= static_cast<std::uint64_t>(x);
  return f;
}

// Distinguished cycles a template allows.
std::vector<std::vector<int>> special_cycles(const Template& t, int n, int d) {
  std::vector<std::vector<int>> out;
  const auto& L = t.low;
  const auto& H = t.high;
  switch (t.special) {
    case Special::none: break;
    case Special::two_low:
      for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = a + 1; b < L.size(); ++b)
          for (int h : H) {
            out.push_back({L[a], h, L[b]});
            out.push_back({L[a], L[b], h});
          }
      break;
    case Special::two_high:
      for (std::size_t a = 0; a < H.size(); ++a)
        for (std::size_t b = a + 1; b < H.size(); ++b)
          for (int l : L) {
            out.push_back({l, H[a], H[b]});
            out.push_back({l, H[b], H[a]});
          }
      break;
    case Special::alternating:
      for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = a + 1; b < L.size(); ++b)
          for (std::size_t x = 0; x < H.size(); ++x)
            for (std::size_t y = x + 1; y < H.size(); ++y) {
              const std::vector<int> pts{L[a], L[b], H[x], H[y]};
              if (!contains(pts, d + 1) && !contains(pts, n - d)) continue;
              out.push_back({L[a], H[x], L[b], H[y]});
              out.push_back({L[a], H[y], L[b], H[x]});
            }
      break;
  }
  return out;
}

template <class Emit>
void enumerate_template(const Template& t, int n, int d, Emit&& emit) {
  auto complete = [&](const std::vector<int>& special) {
    std::vector<int> low, high;
    for (int x : t.low)
      if (!contains(special, x)) low.push_back(x);
    for (int x : t.high)
      if (!contains(special, x)) high.push_back(x);
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
      if (!contains(t.low, x) && !contains(t.high, x)) rest.push_back(x);
    }
    for_each_matching(low, high, [&](const std::vector<std::pair<int, int>>& pairs) {
      for_each_cycle(rest, [&](const std::vector<int>& k) {
        ExtremalCase c{t.tag, n, d, pairs, special, k};
        emit(c.assemble());
      });
    });
  };
  if (t.special == Special::none) {
    complete({});
  } else {
    for (const auto& s : special_cycles(t, n, d)) complete(s);
  }
}

}  // namespace

ExtremalCase is_extremal(const Permutation& p, int m, Reading reading) {
  const int n = p.degree();
  check_regime(n, m);
  const auto dec = cycle_decomposition(p);
  if (m == n - 1) {
    ExtremalCase c{ExtremalTag::NONE, n, 0, {}, {}, {}};
    if (is_full_cycle(dec)) {
      c.tag = ExtremalTag::NCYCLE;
      c.rest = dec.cycles.front();
    }
    return c;
  }
  if (m == 1) {
    ExtremalCase c{ExtremalTag::NONE, n, n / 2, {}, {}, {}};
    if (is_reverse(p)) {
      c.tag = ExtremalTag::REVERSE;
      for (int x = 1; x <= n / 2; ++x) c.pairs.emplace_back(x, n + 1 - x);
      if (n % 2) c.rest = {(n + 1) / 2};
    }
    return c;
  }
  const int d = (n - m) / 2;
  for (const auto& t : templates(n, m, reading)) {
    if (auto c = match(t, dec, n, d)) return *c;
  }
  return ExtremalCase{ExtremalTag::NONE, n, d, {}, {}, {}};
}

std::uint64_t extremal_count(int n, int m, Reading reading) {
  check_regime(n, m);
  if (m == n - 1) return falling(n - 1);
  if (m == 1) return 1;
  const int d = (n - m) / 2;
  std::uint64_t total = 0;
  for (const auto& t : templates(n, m, reading)) {
    const int rest = n - static_cast<int>(t.low.size() + t.high.size());
    const std::uint64_t tail = falling(rest - 1);
    if (t.special == Special::none) {
      total += falling(static_cast<int>(t.low.size())) * tail;
    } else {
      const auto specials = special_cycles(t, n, d);
      const int remaining_pairs = static_cast<int>(t.low.size() + t.high.size() - specials.front().size()) / 2;
      total += specials.size() * falling(remaining_pairs) * tail;
    }
  }
  // Templates never overlap: each fixes which block points the remaining
  // cycle keeps and the shape of the special cycle.
  return total;
}

std::vector<Permutation> enumerate_extremal(int n, int m, Reading reading, std::uint64_t limit) {
  const std::uint64_t expected = extremal_count(n, m, reading);
  if (expected > limit) {
    throw ResourceError("enumerating " + std::to_string(expected) + " extremal permutations exceeds the limit " +
                            std::to_string(limit),
                        expected * static_cast<std::uint64_t>(n) * sizeof(int));
  }
  std::set<Permutation> found;
  if (m == n - 1) {
    for_each_cycle(range(1, n), [&](const std::vector<int>& c) { found.insert(from_cycles(n, {c})); });
  } else if (m == 1) {
    std::vector<int> rev(static_cast<std::size_t>(n));
    std::iota(rev.rbegin(), rev.rend(), 1);
    found.insert(Permutation::from_one_line(rev));
  } else {
    const int d = (n - m) / 2;
    for (const auto& t : templates(n, m, reading)) {
      enumerate_template(t, n, d, [&](Permutation p) { found.insert(std::move(p)); });
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> ClassificationAudit::mismatch_report() const {
  std::vector<std::string> out;
  const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
  for (const auto& p : missed) {
    out.push_back("classification mismatch " + where + ": [" + format_one_line(p) +
                  "] is at maximum distance but matches no case");
  }
  for (const auto& p : extra) {
    out.push_back("classification mismatch " + where + ": [" + format_one_line(p) +
                  "] matches a case but is not at maximum distance");
  }
  if (!enumeration_consistent) {
    out.push_back("classification mismatch " + where + ": enumeration disagrees with the recognizer");
  }
  return out;
}

ClassificationAudit audit_classification(int n, int m, Reading reading, const BfsOptions& bfs) {
  check_regime(n, m);
  BfsOptions opts = bfs;
  opts.collect_farthest = true;
  opts.farthest_limit = ~std::uint64_t{0};
  const auto report = bfs_diameter(n, m, opts);

  ClassificationAudit audit;
  audit.n = n;
  audit.m = m;
  audit.reading = reading;
  audit.farthest_count = report.farthest_count;

  const RankCodec codec(n);
  std::vector<Permutation> recognized;
  for (std::uint64_t r = 0; r < codec.size(); ++r) {
    Permutation p = codec.unrank(r);
    if (is_extremal(p, m, reading).tag != ExtremalTag::NONE) recognized.push_back(std::move(p));
  }
  audit.recognized_count = recognized.size();
  // Both lists are in ascending one-line order.
  std::set_difference(report.farthest.begin(), report.farthest.end(), recognized.begin(), recognized.end(),
                      std::back_inserter(audit.missed));
  std::set_difference(recognized.begin(), recognized.end(), report.farthest.begin(), report.farthest.end(),
                      std::back_inserter(audit.extra));
  audit.enumeration_consistent = enumerate_extremal(n, m, reading) == recognized;
  return audit;
}

}  // namespace permband
