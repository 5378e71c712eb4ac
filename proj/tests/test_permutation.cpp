#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "permband/error.hpp"
#include "permband/permutation.hpp"
#include "permband/rank.hpp"

using namespace permband;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }
Permutation T(int n, int i, int j) { return Permutation::from_transposition(n, Transposition::make(i, j)); }

}  // namespace

TEST_SUITE("perm-core") {
  TEST_CASE("compose applies the right factor first") {
    CHECK(compose(T(3, 1, 2), Permutation::identity(3)) == P({2, 1, 3}));
    // (4,3)(4,2) is the 3-cycle (2 3 4)
    CHECK(compose(T(4, 3, 4), T(4, 2, 4)) == P({1, 3, 4, 2}));
    CHECK(compose(T(4, 3, 4), T(4, 2, 4)) == from_cycles(4, {{2, 3, 4}}));
    const auto p = P({3, 1, 4, 2});
    CHECK(compose(p, invert(p)).is_identity());
    CHECK_THROWS_AS(compose(P({1, 2}), P({1, 2, 3})), InvalidArgument);
  }

  TEST_CASE("compose agrees with the brute-force oracle and is associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      auto rand_perm = [&] {
        auto v = oracle::identity(n);
        std::shuffle(v.begin(), v.end(), rng);
        return v;
      };
      const auto a = rand_perm(), b = rand_perm(), c = rand_perm();
      CHECK(compose(P(a), P(b)) == P(oracle::compose(a, b)));
      CHECK(compose(compose(P(a), P(b)), P(c)) == compose(P(a), compose(P(b), P(c))));
      CHECK(compose(P(a), Permutation::identity(n)) == P(a));
      CHECK(compose(Permutation::identity(n), P(a)) == P(a));
      const bool odd = (parity(P(a)) == Parity::odd) != (parity(P(b)) == Parity::odd);
      CHECK((parity(compose(P(a), P(b))) == Parity::odd) == odd);
    }
  }

  TEST_CASE("left and right multiplication") {
    const auto p = P({3, 1, 4, 2});
    const auto t = Transposition::make(1, 2);
    CHECK(left_multiply(t, p) == compose(T(4, 1, 2), p));
    CHECK(right_multiply(p, t) == compose(p, T(4, 1, 2)));
    CHECK(right_multiply(p, t) == P({1, 3, 4, 2}));
    CHECK(left_multiply(t, p) == P({3, 2, 4, 1}));
  }

  TEST_CASE("invert") {
    CHECK(invert(Permutation::identity(5)).is_identity());
    CHECK(invert(P({2, 3, 1})) == P({3, 1, 2}));
    CHECK(invert(T(6, 2, 5)) == T(6, 2, 5));
  }

  TEST_CASE("cycle decomposition in normal form") {
    auto d = cycle_decomposition(P({7, 3, 4, 5, 6, 2, 1}));
    CHECK(d.count() == 2);
    CHECK(d.cycles == std::vector<std::vector<int>>{{1, 7}, {2, 3, 4, 5, 6}});
    d = cycle_decomposition(Permutation::identity(4));
    CHECK(d.count() == 4);
    CHECK(d.cycles == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
    d = cycle_decomposition(P({2, 1, 4, 3}));
    CHECK(d.cycles == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(normalize_cycle({5, 2, 9}) == std::vector<int>{2, 9, 5});
    for (const auto& v : oracle::all_perms(6)) {
      const auto dec = cycle_decomposition(P(v));
      CHECK(from_cycles(6, dec.cycles) == P(v));
      CHECK(dec.count() == oracle::cycles(v));
    }
  }

  TEST_CASE("inversion count and parity") {
    CHECK(inversion_count(P({3, 2, 4, 5, 1})) == 5);
    CHECK(inversion_count(Permutation::identity(9)) == 0);
    CHECK(inversion_count(P({4, 3, 2, 1})) == 6);
    CHECK(parity(Permutation::identity(4)) == Parity::even);
    CHECK(parity(T(7, 2, 6)) == Parity::odd);
    CHECK(parity(P({8, 7, 6, 5, 4, 3, 2, 1})) == Parity::even);
    for (int n = 1; n <= 7; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const auto p = P(v);
        REQUIRE(inversion_count(p) == oracle::inversions(v));
        REQUIRE(inversion_count(p) % 2 == static_cast<std::uint64_t>(n - oracle::cycles(v)) % 2);
        REQUIRE((parity(p) == Parity::odd) == (oracle::inversions(v) % 2 == 1));
      }
    }
  }

  TEST_CASE("product of transpositions") {
    const std::vector<Transposition> f{{3, 4}, {2, 4}};
    CHECK(product(4, f) == P({1, 3, 4, 2}));
    CHECK(product(5, {}).is_identity());
  }

  TEST_CASE("transposition validation") {
    CHECK(Transposition::make(5, 2) == Transposition{2, 5});
    CHECK(Transposition::make(5, 2).width() == 3);
    CHECK_THROWS_AS(Transposition::make(3, 3), InvalidArgument);
    CHECK_THROWS_AS(Transposition::make(0, 3), InvalidArgument);
    CHECK_THROWS_AS(P({1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(P({1, 4, 2}), InvalidArgument);
  }

  TEST_CASE("text codec") {
    CHECK(parse_permutation("3 2 4 5 1") == P({3, 2, 4, 5, 1}));
    CHECK(parse_permutation("[3,2,4,5,1]") == P({3, 2, 4, 5, 1}));
    CHECK(parse_permutation("(1 7)(2 3 4 5 6)", 7) == P({7, 3, 4, 5, 6, 2, 1}));
    CHECK(parse_permutation("(1,9,2)(3,4)", 9) == from_cycles(9, {{1, 9, 2}, {3, 4}}));
    CHECK(parse_permutation("()", 3).is_identity());
    CHECK(format_one_line(P({7, 3, 4, 5, 6, 2, 1})) == "7 3 4 5 6 2 1");
    CHECK(format_cycles(P({7, 3, 4, 5, 6, 2, 1})) == "(1 7)(2 3 4 5 6)");
    CHECK(format_cycles(Permutation::identity(3)) == "()");
    CHECK(format_transposition({2, 5}) == "(2,5)");

    for (const auto& v : oracle::all_perms(5)) {
      const auto p = P(v);
      REQUIRE(parse_permutation(format_one_line(p)) == p);
      REQUIRE(parse_permutation(format_cycles(p), 5) == p);
    }

    auto message_of = [](const std::string& text, int n = 0) {
      try {
        parse_permutation(text, n);
      } catch (const ParseError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message_of("1 1 2").find("'1'") != std::string::npos);
    CHECK(message_of("1 5 2").find("'5'") != std::string::npos);
    CHECK(message_of("1 x 2").find("'x'") != std::string::npos);
    CHECK(message_of("(1 2)(2 3)").find("'2'") != std::string::npos);
    CHECK_FALSE(message_of("(1 2").empty());
    CHECK_FALSE(message_of("(1 9)", 5).empty());
    CHECK_FALSE(message_of("1 2 3", 4).empty());
  }
}

TEST_SUITE("rank") {
  TEST_CASE("identity ranks to zero and ranks are lexicographic") {
    for (int n = 1; n <= 7; ++n) {
      const RankCodec codec(n);
      CHECK(codec.rank(Permutation::identity(n)) == 0);
      std::uint64_t k = 0;
      for (const auto& v : oracle::all_perms(n)) REQUIRE(codec.rank(P(v)) == k++);
      CHECK(k == codec.size());
    }
  }

  TEST_CASE("round trips") {
    for (int n = 1; n <= 6; ++n) {
      const RankCodec codec(n);
      std::set<std::uint64_t> seen;
      for (std::uint64_t k = 0; k < codec.size(); ++k) {
        const auto p = codec.unrank(k);
        REQUIRE(codec.rank(p) == k);
        seen.insert(k);
      }
      CHECK(seen.size() == factorial(n));
    }
    const RankCodec c4(4);
    std::set<std::uint64_t> ranks;
    for (const auto& v : oracle::all_perms(4)) ranks.insert(c4.rank(P(v)));
    CHECK(ranks.size() == 24);
    CHECK(*ranks.rbegin() == 23);

    std::mt19937_64 rng(5);
    const RankCodec c16(16);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint64_t k = rng() % c16.size();
      REQUIRE(c16.rank(c16.unrank(k)) == k);
    }
  }

  TEST_CASE("range errors") {
    const RankCodec codec(5);
    CHECK_THROWS_AS(codec.unrank(120), InvalidArgument);
    CHECK_THROWS_AS(codec.rank(Permutation::identity(4)), InvalidArgument);
    CHECK_THROWS_AS(RankCodec(17), InvalidArgument);
    CHECK(std::string(RankCodec::kScheme) == "lehmer-lex/1");
  }
}
