#include "permband/factorize.hpp"

#include <algorithm>
#include <numeric>

#include "permband/cayley.hpp"
#include "permband/error.hpp"

namespace permband {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::adjacent, "adjacent"},     {Method::unrestricted, "unrestricted"},
    {Method::hub, "hub"},               {Method::pivot_star, "pivot"},
    {Method::cycle_pair, "pair"},       {Method::cycle_pairing, "cycle-pairing"},
    {Method::peel_last, "peel-last"},   {Method::peel_ends, "peel-ends"},
    {Method::bfs, "bfs"},
};

void check_cycle_regime(int n, int m) {
  if (n < 5 || n > 2 * m + 1 || m > n - 1) {
    throw RegimeError("cycle-class constructions need 5 <= n <= 2m+1 and m <= n-1, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
}

void check_cycle_terms(std::span<const int> cycle, int n) {
  if (cycle.empty()) throw InvalidArgument("empty cycle");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : cycle) {
    if (x < 1 || x > n) {
      throw InvalidArgument("cycle term " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(x)]) throw InvalidArgument("cycle term " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

// Rotates so that `last` becomes the final term.
std::vector<int> rotate_to_end(std::span<const int> cycle, int last) {
  std::vector<int> out(cycle.begin(), cycle.end());
  auto it = std::find(out.begin(), out.end(), last);
  std::rotate(out.begin(), it + 1, out.end());
  return out;
}

// Bubble sort of a 1-based value array; returns the factor list.
std::vector<Transposition> bubble_factors(std::vector<int> a) {
  std::vector<Transposition> swaps;
  for (std::size_t end = a.size(); end > 1; --end) {
    bool any = false;
    for (std::size_t k = 0; k + 1 < end; ++k) {
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        swaps.push_back({static_cast<int>(k) + 1, static_cast<int>(k) + 2});
        any = true;
      }
    }
    if (!any) break;
  }
  // a * s1 * ... * sk = 1, so a = sk * ... * s1.
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

int closed_or_small_delta(int n, int m) {
  m = std::min(m, n - 1);
  if (n <= 1) return 0;
  if (m == 1) return n * (n - 1) / 2;
  if (m == n - 1) return n - 1;
  if (n >= 5 && n <= 2 * m + 1) return n + (n - m) / 2 - 1;
  BfsOptions opts;
  opts.collect_farthest = false;
  opts.kernel = Kernel::serial;
  return bfs_diameter(n, m, opts).delta;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Worst-case length of recursive_factor on S_n (the recurrence evaluated on
// its own base cases).
int recursive_bound(int n, int m, RecursiveStrategy strategy) {
  const int mm = std::min(m, n - 1);
  if (n <= 1) return 0;
  if (mm == 1 || n < 5 || n <= 2 * mm + 1) return closed_or_small_delta(n, mm);
  if (strategy == RecursiveStrategy::move_last) {
    return ceil_div(n - 1, mm) + recursive_bound(n - 1, m, strategy);
  }
  return 2 * ceil_div(n - 1, mm) - 1 + recursive_bound(n - 2, m, strategy);
}

struct Recursion {
  RecursiveStrategy strategy;
  std::optional<Method> top_step;

  std::vector<Transposition> run(std::vector<int> a, int m, int depth) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return {};
    const int mm = std::min(m, n - 1);
    const Permutation p = Permutation::from_one_line(a);
    if (p.is_identity()) return {};
    if (mm == 1) return bubble_factors(std::move(a));
    if (n < 5) return shortest_word(p, mm);
    if (n <= 2 * mm + 1) return cycle_pairing_factor(p, mm).factors;

    const bool move_last = strategy == RecursiveStrategy::move_last;
    if (depth == 0) top_step = move_last ? Method::peel_last : Method::peel_ends;

    std::vector<Transposition> moves;
    auto swap_pos = [&](int x, int y) {
      std::swap(a[static_cast<std::size_t>(x - 1)], a[static_cast<std::size_t>(y - 1)]);
      moves.push_back(Transposition::make(x, y));
    };
    auto pos_of = [&](int value) {
      return static_cast<int>(std::find(a.begin(), a.end(), value) - a.begin()) + 1;
    };

    if (move_last) {
      // Jumps of m from the position of n, then one final hop of at most m.
      int cur = pos_of(n);
      while (n - cur > mm) {
        swap_pos(cur, cur + mm);
        cur += mm;
      }
      if (cur != n) swap_pos(cur, n);
      std::vector<int> rest(a.begin(), a.end() - 1);
      auto factors = run(std::move(rest), m, depth + 1);
      factors.insert(factors.end(), moves.rbegin(), moves.rend());
      return factors;
    }

    // Block points are 1, m+1, 2m+1, ...; n travels up through them and 1
    // travels down through them.
    auto n_chain = [&] {
      int cur = pos_of(n);
      while (cur != n) {
        int next = (cur - 1) / mm * mm + mm + 1;
        if (next >= n) next = n;
        swap_pos(cur, next);
        cur = next;
      }
    };
    auto one_step = [&] {
      const int cur = pos_of(1);
      swap_pos(cur, (cur - 2) / mm * mm + 1);
    };
    const int i = pos_of(n);
    const int j = pos_of(1);
    const int s = (i - 1) / mm + 1;       // (s-1)m+1 <= i < sm+1
    const int t = j >= 2 ? (j - 2) / mm : -1;  // tm+1 < j <= (t+1)m+1
    if (j != 1 && s < t) {
      one_step();
      n_chain();
    } else {
      n_chain();
    }
    while (pos_of(1) != 1) one_step();

    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 2));
    for (int k = 1; k < n - 1; ++k) rest.push_back(a[static_cast<std::size_t>(k)] - 1);
    auto inner = run(std::move(rest), m, depth + 1);
    std::vector<Transposition> factors;
    factors.reserve(inner.size() + moves.size());
    for (auto f : inner) factors.push_back({f.i + 1, f.j + 1});
    factors.insert(factors.end(), moves.rbegin(), moves.rend());
    return factors;
  }
};

}  // namespace

std::string_view to_string(Method m) {
  for (auto [k, name] : kMethodNames) {
    if (k == m) return name;
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view s) {
  for (auto [k, name] : kMethodNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

std::string format_factorization(const Factorization& f) {
  std::string out = std::string(to_string(f.method)) + " " + std::to_string(f.length()) + " " +
                    std::to_string(f.m) + " :";
  if (!f.factors.empty()) out += ' ';
  for (auto t : f.factors) out += format_transposition(t);
  return out;
}

Factorization adjacent_sort(const Permutation& p) {
  Factorization f{p, 1, {}, Method::adjacent, static_cast<int>(inversion_count(p)), {}};
  f.factors = bubble_factors({p.one_line().begin(), p.one_line().end()});
  return f;
}

Factorization unrestricted_factor(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> cur(p.one_line().begin(), p.one_line().end());
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) where[static_cast<std::size_t>(cur[static_cast<std::size_t>(x - 1)])] = x;

  Factorization f{p, std::max(1, n - 1), {}, Method::unrestricted,
                  n - cycle_decomposition(p).count(), {}};
  // Each step left-multiplies by (x, cur(x)) with both points in one cycle,
  // fixing x: t_k ... t_1 p = 1, hence p = t_1 ... t_k.
  for (int x = 1; x <= n; ++x) {
    const int y = cur[static_cast<std::size_t>(x - 1)];
    if (y == x) continue;
    f.factors.push_back(Transposition::make(x, y));
    // Swap the values x and y inside cur.
    const int px = where[static_cast<std::size_t>(x)];
    cur[static_cast<std::size_t>(x - 1)] = x;
    cur[static_cast<std::size_t>(px - 1)] = y;
    where[static_cast<std::size_t>(x)] = x;
    where[static_cast<std::size_t>(y)] = px;
  }
  return f;
}

TranspositionType classify_transposition(Transposition t, const Permutation& p) {
  if (t.i < 1 || t.j > p.degree() || t.i >= t.j) {
    throw InvalidArgument("transposition " + format_transposition(t) + " invalid in degree " +
                          std::to_string(p.degree()));
  }
  for (int y = p(t.i); y != t.i; y = p(y)) {
    if (y == t.j) return TranspositionType::type_one;
  }
  return TranspositionType::type_two;
}

CycleClass cycle_class(std::span<const int> cycle, int m) {
  if (cycle.empty()) throw InvalidArgument("empty cycle");
  CycleClass c;
  const auto [lo, hi] = std::minmax_element(cycle.begin(), cycle.end());
  c.smallest = *lo;
  c.largest = *hi;
  for (int x : cycle) {
    if (std::max(x - c.smallest, c.largest - x) <= m && (!c.pivot || x < *c.pivot)) c.pivot = x;
  }
  c.in_lm = !c.pivot.has_value();
  return c;
}

std::optional<std::pair<int, int>> pair_condition(std::span<const int> ci, std::span<const int> cj, int m) {
  for (int x : ci) {
    if (std::find(cj.begin(), cj.end(), x) != cj.end()) {
      throw InvalidArgument("pair_condition needs disjoint cycles; both contain " + std::to_string(x));
    }
  }
  // r only constrains cj's terms and s only ci's, so pick each independently.
  auto all_within = [m](std::span<const int> terms, int center) {
    return std::all_of(terms.begin(), terms.end(), [&](int x) { return std::abs(x - center) <= m; });
  };
  std::optional<int> r, s;
  for (int x : ci) {
    if (all_within(cj, x) && (!r || x < *r)) r = x;
  }
  for (int y : cj) {
    if (all_within(ci, y) && (!s || y < *s)) s = y;
  }
  if (!r || !s) return std::nullopt;
  return std::pair{*r, *s};
}

Factorization factor_cycle(std::span<const int> cycle, int m, int n, std::optional<int> pivot) {
  check_cycle_regime(n, m);
  check_cycle_terms(cycle, n);
  const std::vector<int> terms(cycle.begin(), cycle.end());
  Factorization f{from_cycles(n, {terms}), m, {}, Method::pivot_star, {}, {}};
  const int len = static_cast<int>(terms.size());
  const CycleClass cls = cycle_class(cycle, m);

  if (cls.in_lm) {
    if (pivot) throw InvalidArgument("cycle " + format_cycle(cycle) + " is in L_m and has no pivot");
    // Every point lies within m of m+1 when n <= 2m+1, and m+1 cannot be a
    // term of an L_m cycle.
    const int hub = m + 1;
    f.method = Method::hub;
    f.claimed_bound = len + 1;
    f.factors.push_back(Transposition::make(hub, terms.back()));
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) f.factors.push_back(Transposition::make(hub, *it));
    f.factors.push_back(Transposition::make(hub, terms.back()));
    return f;
  }

  f.claimed_bound = len - 1;
  if (len == 1) return f;
  int center = *cls.pivot;
  if (pivot) {
    if (std::find(terms.begin(), terms.end(), *pivot) == terms.end() ||
        std::max(*pivot - cls.smallest, cls.largest - *pivot) > m) {
      throw InvalidArgument("term " + std::to_string(*pivot) + " is not a pivot of " + format_cycle(cycle));
    }
    center = *pivot;
  }
  const auto rotated = rotate_to_end(cycle, center);
  for (int k = len - 2; k >= 0; --k) {
    f.factors.push_back(Transposition::make(center, rotated[static_cast<std::size_t>(k)]));
  }
  return f;
}

Factorization factor_cycle_pair(std::span<const int> ci, std::span<const int> cj, int m, int n) {
  check_cycle_regime(n, m);
  check_cycle_terms(ci, n);
  check_cycle_terms(cj, n);
  const auto witness = pair_condition(ci, cj, m);
  if (!cycle_class(ci, m).in_lm) throw InvalidArgument("first cycle " + format_cycle(ci) + " is not in L_m");
  if (!cycle_class(cj, m).in_lm) throw InvalidArgument("second cycle " + format_cycle(cj) + " is not in L_m");
  if (!witness) {
    throw InvalidArgument("cycles " + format_cycle(ci) + format_cycle(cj) + " fail the pair condition");
  }
  const auto is = rotate_to_end(ci, witness->first);
  const auto js = rotate_to_end(cj, witness->second);
  const int ip = is.back();
  const int jq = js.back();

  Factorization f{from_cycles(n, {is, js}), m, {}, Method::cycle_pair,
                  static_cast<int>(is.size() + js.size()), PairingStats{2, 1}};
  for (auto it = is.rbegin(); it != is.rend(); ++it) f.factors.push_back(Transposition::make(jq, *it));
  for (auto it = js.rbegin() + 1; it != js.rend(); ++it) f.factors.push_back(Transposition::make(ip, *it));
  f.factors.push_back(Transposition::make(ip, jq));
  return f;
}

Factorization cycle_pairing_factor(const Permutation& p, int m) {
  const int n = p.degree();
  check_cycle_regime(n, m);
  const auto dec = cycle_decomposition(p);
  const auto& cycles = dec.cycles;
  const std::size_t r = cycles.size();

  std::vector<CycleClass> cls;
  cls.reserve(r);
  std::vector<std::size_t> lm;
  for (std::size_t k = 0; k < r; ++k) {
    cls.push_back(cycle_class(cycles[k], m));
    if (cls.back().in_lm) lm.push_back(k);
  }
  std::stable_sort(lm.begin(), lm.end(),
                   [&](std::size_t a, std::size_t b) { return cls[a].smallest < cls[b].smallest; });

  // Greedy maximal matching: by ascending smallest term, take the unmatched
  // partner with the smallest largest term among those meeting the pair
  // condition.
  std::vector<std::ptrdiff_t> partner(r, -1);
  int pairs = 0;
  for (std::size_t a : lm) {
    if (partner[a] >= 0) continue;
    std::ptrdiff_t best = -1;
    for (std::size_t b : lm) {
      if (b == a || partner[b] >= 0) continue;
      if (!pair_condition(cycles[a], cycles[b], m)) continue;
      if (best < 0 || cls[b].largest < cls[static_cast<std::size_t>(best)].largest) {
        best = static_cast<std::ptrdiff_t>(b);
      }
    }
    if (best >= 0) {
      partner[a] = best;
      partner[static_cast<std::size_t>(best)] = static_cast<std::ptrdiff_t>(a);
      ++pairs;
    }
  }

  Factorization f{p, m, {}, Method::cycle_pairing, {}, PairingStats{static_cast<int>(lm.size()), pairs}};
  std::vector<char> done(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    if (done[k]) continue;
    done[k] = 1;
    Factorization piece = [&] {
      if (partner[k] >= 0) {
        const auto other = static_cast<std::size_t>(partner[k]);
        done[other] = 1;
        return factor_cycle_pair(cycles[k], cycles[other], m, n);
      }
      return factor_cycle(cycles[k], m, n);
    }();
    f.factors.insert(f.factors.end(), piece.factors.begin(), piece.factors.end());
  }
  f.claimed_bound = n - static_cast<int>(r) + 2 * static_cast<int>(lm.size()) - 2 * pairs;
  return f;
}

Factorization recursive_factor(const Permutation& p, int m, RecursiveStrategy strategy) {
  const int n = p.degree();
  validate_degree_width(n, m);
  if (strategy == RecursiveStrategy::automatic) {
    strategy = 2 * m <= n - 1 ? RecursiveStrategy::move_ends : RecursiveStrategy::move_last;
  }
  Recursion rec{strategy, {}};
  Factorization f{p, m, rec.run({p.one_line().begin(), p.one_line().end()}, m, 0), Method::peel_ends,
                  recursive_bound(n, m, strategy), {}};
  if (rec.top_step) {
    f.method = *rec.top_step;
  } else if (m == 1) {
    f.method = Method::adjacent;
  } else if (n < 5) {
    f.method = Method::bfs;
  } else {
    f.method = Method::cycle_pairing;
  }
  return f;
}

Factorization bfs_factor(const Permutation& p, int m) {
  validate_degree_width(p.degree(), m);
  auto word = shortest_word(p, m);
  const int len = static_cast<int>(word.size());
  return Factorization{p, m, std::move(word), Method::bfs, len, {}};
}

Factorization auto_factor(const Permutation& p, int m) {
  const int n = p.degree();
  validate_degree_width(n, m);
  if (m == 1) return adjacent_sort(p);
  if (m == n - 1) return unrestricted_factor(p);
  if (n < 5) return bfs_factor(p, m);
  if (n <= 2 * m + 1) return cycle_pairing_factor(p, m);
  return recursive_factor(p, m);
}

std::optional<Violation> verify(const Factorization& f) {
  const int n = f.target.degree();
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    const auto t = f.factors[k];
    if (t.i < 1 || t.j > n || t.i >= t.j) {
      return Violation{Violation::Kind::bad_factor, static_cast<int>(k),
                       "factor " + std::to_string(k) + " " + format_transposition(t) +
                           " is not a transposition of 1.." + std::to_string(n)};
    }
  }
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    if (f.factors[k].width() > f.m) {
      return Violation{Violation::Kind::width, static_cast<int>(k),
                       "factor " + std::to_string(k) + " " + format_transposition(f.factors[k]) +
                           " has width " + std::to_string(f.factors[k].width()) + " > m=" +
                           std::to_string(f.m)};
    }
  }
  const Permutation prod = product(n, f.factors);
  if (prod != f.target) {
    return Violation{Violation::Kind::product, -1,
                     "product [" + format_one_line(prod) + "] differs from target [" +
                         format_one_line(f.target) + "]"};
  }
  const bool odd_length = f.factors.size() % 2 == 1;
  if (odd_length != (parity(f.target) == Parity::odd)) {
    return Violation{Violation::Kind::parity, -1, "length parity disagrees with target parity"};
  }
  return std::nullopt;
}

}  // namespace permband
