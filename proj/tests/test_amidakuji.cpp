#include <doctest.h>

#include "oracle.hpp"
#include "permband/amidakuji.hpp"
#include "permband/error.hpp"

using namespace permband;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

// Follows each person down the drawing, independent of apply().
std::vector<int> trace(const Ladder& l) {
  std::vector<int> out;
  for (int person = 1; person <= l.n; ++person) {
    int line = person;
    for (const auto& lv : l.levels) {
      for (int c : lv) {
        if (line == c) {
          line = c + 1;
          break;
        }
        if (line == c + 1) {
          line = c;
          break;
        }
      }
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_SUITE("amidakuji") {
  TEST_CASE("validation") {
    CHECK_FALSE(validate(Ladder{4, {}}));
    auto v = validate(Ladder{3, {{1, 2}}});
    REQUIRE(v);
    CHECK(v->level == 1);
    CHECK(v->column == 2);
    CHECK_FALSE(validate(Ladder{4, {{1, 3}}}));
    v = validate(Ladder{4, {{1}, {2}, {4}}});
    REQUIRE(v);
    CHECK(v->level == 3);
    CHECK(v->column == 4);
    CHECK(validate(Ladder{3, {{2, 2}}}));
    CHECK_THROWS_AS(apply(Ladder{3, {{1, 2}}}), InvalidArgument);
  }

  TEST_CASE("apply") {
    CHECK(apply(Ladder{4, {}}).is_identity());
    CHECK(apply(Ladder{2, {{1}}}) == P({2, 1}));
    const Ladder l{3, {{1}, {2}}};
    CHECK(apply(l) == P(trace(l)));
    CHECK(apply(l) == P({3, 1, 2}));
    // Bottom rung applied last: sigma = (2,3)(1,2).
    CHECK(apply(l) == compose(Permutation::from_transposition(3, {2, 3}), Permutation::from_transposition(3, {1, 2})));
  }

  TEST_CASE("synthesize") {
    const auto l = synthesize(P({3, 2, 4, 5, 1}));
    CHECK(l.rung_count() == 5);
    CHECK(apply(l) == P({3, 2, 4, 5, 1}));
    CHECK(synthesize(Permutation::identity(6)).rung_count() == 0);
    CHECK(synthesize(P({2, 1})).rung_count() == 1);

    for (int n = 1; n <= 7; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const auto lad = synthesize(P(v));
        REQUIRE_FALSE(validate(lad));
        REQUIRE(apply(lad) == P(v));
        REQUIRE(trace(lad) == v);
        REQUIRE(static_cast<std::uint64_t>(lad.rung_count()) == oracle::inversions(v));
        for (const auto& lv : lad.levels) REQUIRE(std::is_sorted(lv.begin(), lv.end()));
        if (n <= 6) REQUIRE(lad.rung_count() == oracle::cached_bfs(std::max(n, 2), 1)(n == 1 ? oracle::identity(2) : v));
      }
    }
  }

  TEST_CASE("text form") {
    const std::string text = "# a ladder\nn=4\n1 3\n\n2   # middle\n1\n";
    const auto l = parse_ladder(text);
    CHECK(l.n == 4);
    CHECK(l.levels == std::vector<std::vector<int>>{{1, 3}, {2}, {1}});
    CHECK(format_ladder(l) == "n=4\n1 3\n2\n1\n");
    CHECK(parse_ladder(format_ladder(l)).levels == l.levels);
    CHECK_THROWS_AS(parse_ladder("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_ladder("n=4\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_ladder(""), ParseError);
    CHECK(render_ascii(Ladder{3, {{1}, {2}}}) == "|---|   |\n|   |---|\n");
    CHECK(render_ascii(Ladder{3, {{2}}}, 1) == "| |-|\n");
  }
}
