#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "permband/error.hpp"
#include "permband/factorize.hpp"

using namespace permband;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }
using TL = std::vector<Transposition>;

bool brute_pair(const std::vector<int>& ci, const std::vector<int>& cj, int m) {
  for (int r : ci) {
    for (int s : cj) {
      bool ok = true;
      for (int x : ci) ok = ok && std::abs(x - s) <= m;
      for (int y : cj) ok = ok && std::abs(y - r) <= m;
      if (ok) return true;
    }
  }
  return false;
}

void require_sound(const Factorization& f) {
  const auto v = verify(f);
  INFO(format_factorization(f));
  REQUIRE_FALSE(v.has_value());
}

}  // namespace

TEST_SUITE("factorize") {
  TEST_CASE("adjacent sort") {
    auto f = adjacent_sort(P({3, 2, 4, 5, 1}));
    CHECK(f.length() == 5);
    CHECK(f.method == Method::adjacent);
    require_sound(f);
    CHECK(adjacent_sort(Permutation::identity(4)).factors.empty());
    CHECK(adjacent_sort(P({2, 1})).factors == TL{{1, 2}});
  }

  TEST_CASE("unrestricted factor") {
    CHECK(unrestricted_factor(P({2, 1, 4, 3})).length() == 2);
    CHECK(unrestricted_factor(Permutation::identity(5)).length() == 0);
    const auto f = unrestricted_factor(P({2, 3, 4, 5, 1}));
    CHECK(f.length() == 4);
    CHECK(f.m == 4);
    require_sound(f);
    // Each factor splits a cycle of what remains to be sorted.
    for (const auto& v : oracle::all_perms(6)) {
      const auto g = unrestricted_factor(P(v));
      Permutation rest = P(v);
      for (auto t : g.factors) {
        REQUIRE(classify_transposition(t, rest) == TranspositionType::type_one);
        rest = left_multiply(t, rest);
      }
      REQUIRE(rest.is_identity());
    }
  }

  TEST_CASE("transposition types") {
    const auto p = parse_permutation("(1 2)(3 4)", 4);
    CHECK(classify_transposition({1, 2}, p) == TranspositionType::type_one);
    CHECK(classify_transposition({1, 3}, p) == TranspositionType::type_two);
    CHECK(classify_transposition({2, 4}, Permutation::identity(4)) == TranspositionType::type_two);
    CHECK_THROWS_AS(classify_transposition({2, 5}, p), InvalidArgument);

    for (int n = 2; n <= 6; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const auto q = P(v);
        const int r = oracle::cycles(v);
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            const auto tp = left_multiply({i, j}, q);
            const int r2 = cycle_decomposition(tp).count();
            const bool one = classify_transposition({i, j}, q) == TranspositionType::type_one;
            REQUIRE(r2 == r + (one ? 1 : -1));
            // Distance in the complete transposition graph moves by one.
            const int d = oracle::cached_bfs(n, n - 1)(v);
            const int d2 = oracle::cached_bfs(n, n - 1)(std::vector<int>(tp.one_line().begin(), tp.one_line().end()));
            REQUIRE(d == n - r);
            REQUIRE(d2 == d + (one ? -1 : 1));
          }
        }
      }
    }
  }

  TEST_CASE("cycle classes") {
    auto c = cycle_class(std::vector<int>{1, 9}, 5);
    CHECK(c.in_lm);
    CHECK(c.smallest == 1);
    CHECK(c.largest == 9);
    CHECK_FALSE(c.pivot);
    c = cycle_class(std::vector<int>{2, 3, 4, 5, 6}, 5);
    CHECK_FALSE(c.in_lm);
    CHECK(c.pivot == 2);
    c = cycle_class(std::vector<int>{3}, 1);
    CHECK_FALSE(c.in_lm);
    CHECK(c.pivot == 3);
    c = cycle_class(std::vector<int>{1, 4, 7}, 3);
    CHECK_FALSE(c.in_lm);
    CHECK(c.pivot == 4);
  }

  TEST_CASE("pair condition") {
    const std::vector<int> a{1, 7}, b{3, 9}, c{1, 9}, d{2, 8};
    const auto w = pair_condition(a, b, 5);
    REQUIRE(w);
    for (int x : a) CHECK(std::abs(x - w->second) <= 5);
    for (int y : b) CHECK(std::abs(y - w->first) <= 5);
    CHECK_FALSE(pair_condition(c, d, 5));
    CHECK_THROWS_AS(pair_condition(a, std::vector<int>{7, 8}, 5), InvalidArgument);

    // Agrees with the exhaustive witness search on all splits of 1..8.
    for (int mask = 1; mask < 255; ++mask) {
      std::vector<int> x, y;
      for (int k = 0; k < 8; ++k) (mask >> k & 1 ? x : y).push_back(k + 1);
      for (int m = 1; m <= 7; ++m) REQUIRE(pair_condition(x, y, m).has_value() == brute_pair(x, y, m));
    }
  }

  TEST_CASE("single cycle constructions") {
    auto f = factor_cycle(std::vector<int>{1, 9}, 5, 9);
    CHECK(f.factors == TL{{6, 9}, {1, 6}, {6, 9}});
    CHECK(f.method == Method::hub);
    require_sound(f);

    f = factor_cycle(std::vector<int>{2, 3, 4}, 2, 5, 4);
    CHECK(f.factors == TL{{3, 4}, {2, 4}});
    CHECK(f.method == Method::pivot_star);
    require_sound(f);
    f = factor_cycle(std::vector<int>{2, 3, 4}, 2, 5);
    CHECK(f.length() == 2);
    require_sound(f);

    CHECK(factor_cycle(std::vector<int>{5}, 3, 6).factors.empty());
    CHECK_THROWS_AS(factor_cycle(std::vector<int>{1, 9}, 3, 9), RegimeError);
    CHECK_THROWS_AS(factor_cycle(std::vector<int>{1, 2}, 2, 4), RegimeError);
    CHECK_THROWS_AS(factor_cycle(std::vector<int>{2, 3, 4}, 2, 5, 9), InvalidArgument);
  }

  TEST_CASE("every cycle through the single constructions") {
    for (int n = 5; n <= 8; ++n) {
      for (int m = (n - 1 + 1) / 2; m <= n - 1; ++m) {
        if (n > 2 * m + 1) continue;
        for (const auto& v : oracle::all_perms(n)) {
          for (const auto& cyc : cycle_decomposition(P(v)).cycles) {
            const auto f = factor_cycle(cyc, m, n);
            require_sound(f);
            const int p = static_cast<int>(cyc.size());
            REQUIRE(f.length() == (cycle_class(cyc, m).in_lm ? p + 1 : std::max(p - 1, 0)));
          }
        }
      }
    }
  }

  TEST_CASE("pair construction") {
    const std::vector<int> a{1, 7}, b{3, 9};
    const auto f = factor_cycle_pair(a, b, 5, 9);
    CHECK(f.length() == 4);
    CHECK(f.target == from_cycles(9, {a, b}));
    require_sound(f);
    CHECK_THROWS_AS(factor_cycle_pair(std::vector<int>{1, 9}, std::vector<int>{2, 8}, 5, 9), InvalidArgument);
    CHECK_THROWS_AS(factor_cycle_pair(std::vector<int>{2, 3}, b, 5, 9), InvalidArgument);
  }

  TEST_CASE("cycle pairing examples") {
    auto f = cycle_pairing_factor(parse_permutation("(1 9)(2 8)(3 4 5 6 7)", 9), 5);
    CHECK(f.length() == 10);
    CHECK(f.claimed_bound == 10);
    require_sound(f);

    f = cycle_pairing_factor(parse_permutation("(1 7)(3 9)", 9), 5);
    REQUIRE(f.pairing);
    CHECK(f.pairing->lm_cycles == 2);
    CHECK(f.pairing->pairs == 1);
    CHECK(f.length() == 4);
    require_sound(f);

    f = cycle_pairing_factor(Permutation::identity(7), 4);
    CHECK(f.length() == 0);
    CHECK_THROWS_AS(cycle_pairing_factor(Permutation::identity(8), 3), RegimeError);
  }

  TEST_CASE("cycle pairing meets its bound and the search distance, n <= 8") {
    for (int n = 5; n <= 8; ++n) {
      for (int m = 1; m <= n - 1; ++m) {
        if (n > 2 * m + 1) continue;
        const auto& ref = oracle::cached_bfs(n, m);
        int worst = 0;
        for (const auto& v : oracle::all_perms(n)) {
          const auto f = cycle_pairing_factor(P(v), m);
          require_sound(f);
          const int r = oracle::cycles(v);
          REQUIRE(f.length() == n - r + 2 * f.pairing->lm_cycles - 2 * f.pairing->pairs);
          REQUIRE(f.length() >= ref(v));
          REQUIRE(2 * (f.pairing->lm_cycles - 2 * f.pairing->pairs) <= n - m);
          worst = std::max(worst, f.length());
        }
        CHECK(worst == ref.delta());
      }
    }
  }

  TEST_CASE("recursive construction") {
    auto f = recursive_factor(P({7, 6, 5, 4, 3, 2, 1}), 2);
    CHECK(f.length() <= 10);
    require_sound(f);
    CHECK(recursive_factor(Permutation::identity(9), 3).length() == 0);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      auto v = oracle::identity(11);
      std::shuffle(v.begin(), v.end(), rng);
      const auto g = recursive_factor(P(v), 4);
      require_sound(g);
      REQUIRE(g.length() <= 15);
      REQUIRE(g.claimed_bound == 15);
    }
  }

  TEST_CASE("recursive construction stays within its bound, both strategies") {
    for (int n = 5; n <= 8; ++n) {
      for (int m = 1; m <= n - 1; ++m) {
        const auto& ref = oracle::cached_bfs(n, m);
        for (auto s : {RecursiveStrategy::automatic, RecursiveStrategy::move_last, RecursiveStrategy::move_ends}) {
          int worst = 0;
          for (const auto& v : oracle::all_perms(n)) {
            const auto f = recursive_factor(P(v), m, s);
            require_sound(f);
            REQUIRE(f.claimed_bound);
            REQUIRE(f.length() <= *f.claimed_bound);
            REQUIRE(f.length() >= ref(v));
            worst = std::max(worst, f.length());
          }
          CHECK(worst <= *recursive_factor(Permutation::identity(n), m, s).claimed_bound);
          CHECK(*recursive_factor(Permutation::identity(n), m, s).claimed_bound >= ref.delta());
        }
      }
    }
  }

  TEST_CASE("random soundness for every method, n <= 10") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 1500; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      auto v = oracle::identity(n);
      std::shuffle(v.begin(), v.end(), rng);
      const auto p = P(v);
      require_sound(auto_factor(p, m));
      require_sound(recursive_factor(p, m, RecursiveStrategy::move_last));
      require_sound(recursive_factor(p, m, RecursiveStrategy::move_ends));
      auto a = adjacent_sort(p);
      a.m = m;
      require_sound(a);
      if (n >= 5 && n <= 2 * m + 1) require_sound(cycle_pairing_factor(p, m));
      if (m == n - 1) require_sound(unrestricted_factor(p));
      if (n <= 8) {
        const auto b = bfs_factor(p, m);
        require_sound(b);
        REQUIRE(b.length() == oracle::cached_bfs(n, m)(v));
      }
    }
  }

  TEST_CASE("verification reports the first violation") {
    auto f = auto_factor(P({3, 2, 4, 5, 1}), 1);
    REQUIRE_FALSE(verify(f));
    auto missing = f;
    missing.factors.pop_back();
    auto v = verify(missing);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::product);
    CHECK(v->index == -1);

    auto wide = f;
    wide.factors.insert(wide.factors.begin() + 2, Transposition{1, 3});
    v = verify(wide);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::width);
    CHECK(v->index == 2);

    auto bad = f;
    bad.factors[1] = Transposition{4, 9};
    v = verify(bad);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::bad_factor);
    CHECK(v->index == 1);
  }

  TEST_CASE("method names and text form") {
    for (auto m : {Method::adjacent, Method::unrestricted, Method::hub, Method::pivot_star, Method::cycle_pair,
                   Method::cycle_pairing, Method::peel_last, Method::peel_ends, Method::bfs}) {
      CHECK(method_from_string(to_string(m)) == m);
    }
    CHECK_FALSE(method_from_string("nope"));
    const auto f = adjacent_sort(P({2, 1, 3}));
    CHECK(format_factorization(f) == "adjacent 1 1 : (1,2)");
    CHECK(format_factorization(adjacent_sort(Permutation::identity(2))) == "adjacent 0 1 :");
  }
}
