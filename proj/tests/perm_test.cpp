#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qf/perm.hpp"

using qf::Pattern;
using qf::Permutation;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("identity fixes everything") {
  const auto id3 = Permutation::identity(3);
  for (int p = 1; p <= 3; ++p) CHECK(id3(p) == p);
  CHECK(id3.cycle_string() == "(1)(2)(3)");
  CHECK(Permutation::identity(4).pattern() == Pattern({1, 1, 1, 1}));
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);

  std::mt19937 rng(1);
  for (int round = 0; round < 20; ++round) {
    const auto p = random_permutation(5, rng);
    CHECK(Permutation::identity(5).compose(p) == p);
    CHECK(p.compose(Permutation::identity(5)) == p);
  }
}

TEST_CASE("from_cycles lays out images") {
  const auto p = Permutation::from_cycles(6, {{1, 2, 3, 4}});
  CHECK(p.images() == std::vector<int>{2, 3, 4, 1, 5, 6});
  const auto q = Permutation::from_cycles(6, {{1, 6, 3, 5}});
  CHECK(q.images() == std::vector<int>{6, 2, 5, 4, 1, 3});
  CHECK(Permutation::from_cycles(3, {}) == Permutation::identity(3));

  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{3, 3}}), std::invalid_argument);
}

TEST_CASE("composition applies the right argument first") {
  const auto swap2 = Permutation::from_cycles(2, {{1, 2}});
  CHECK(swap2.compose(swap2) == Permutation::identity(2));

  const auto c4 = Permutation::from_cycles(6, {{1, 2, 3, 4}});
  CHECK(c4.compose(c4) == Permutation::from_cycles(6, {{1, 3}, {2, 4}}));

  // conjugating (1 6 3 5) by (1 2 3 4), evaluated pointwise by hand
  const auto conj = Permutation::from_cycles(6, {{1, 6, 3, 5}}).conjugated_by(c4);
  CHECK(conj == Permutation::from_cycles(6, {{2, 6, 4, 5}}));

  CHECK_THROWS_AS(swap2.compose(c4), std::invalid_argument);
}

TEST_CASE("inverse and power") {
  const auto c4 = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK(c4.inverse() == Permutation::from_cycles(4, {{1, 4, 3, 2}}));
  CHECK(c4.power(-1) == c4.inverse());
  CHECK(c4.power(0) == Permutation::identity(4));
  CHECK(c4.power(4) == Permutation::identity(4));

  const auto c5 = Permutation::from_cycles(7, {{2, 4, 5, 6, 7}});
  CHECK(c5.power(5) == Permutation::identity(7));
  CHECK(c5.power(-3) == c5.power(2));
}

TEST_CASE("cycle decomposition is canonical") {
  const auto p = Permutation::from_cycles(6, {{5, 1, 2, 3}});  // same as (1 2 3 5)
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == std::vector<int>{1, 2, 3, 5});
  CHECK(cycles[1] == std::vector<int>{4});
  CHECK(cycles[2] == std::vector<int>{6});
  CHECK(p.cycle_string() == "(1 2 3 5)(4)(6)");

  CHECK(Permutation::from_cycles(6, {{1, 2, 3, 4}}).pattern() == Pattern({1, 1, 4}));
  CHECK(Permutation::from_cycles(6, {{1, 6, 3, 5}}).fixed_points() == std::vector<int>{2, 4});
  CHECK(Permutation::identity(5).moved_points().empty());
}

TEST_CASE("cycle notation parses with omitted fixed points") {
  const auto p = Permutation::parse_cycles(6, "(1 2 3 4)");
  CHECK(p == Permutation::from_cycles(6, {{1, 2, 3, 4}}));
  CHECK(p.cycle_string() == "(1 2 3 4)(5)(6)");
  CHECK(Permutation::parse_cycles(6, " (2)(4) (1 6 3 5) ") ==
        Permutation::from_cycles(6, {{1, 6, 3, 5}}));
  CHECK(Permutation::parse_cycles(3, "") == Permutation::identity(3));

  CHECK_THROWS_AS(Permutation::parse_cycles(4, "(1 2"), qf::ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles(4, "1 2"), qf::ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles(4, "(1 x)"), qf::ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles(4, "(1 9)"), qf::ParseError);
}

TEST_CASE("group identities hold on random permutations") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto p = random_permutation(n, rng);
    const auto q = random_permutation(n, rng);
    const auto r = random_permutation(n, rng);

    CHECK(p.compose(q).compose(r) == p.compose(q.compose(r)));
    CHECK(p.compose(p.inverse()) == Permutation::identity(n));
    CHECK(p.compose(q).inverse() == q.inverse().compose(p.inverse()));
    CHECK(q.conjugated_by(p).pattern() == q.pattern());

    const auto a = static_cast<long long>(rng() % 13) - 6;
    const auto b = static_cast<long long>(rng() % 13) - 6;
    CHECK(p.power(a + b) == p.power(a).compose(p.power(b)));

    const auto cycles = p.cycles();
    CHECK(Permutation::from_cycles(n, cycles) == p);
    CHECK(Permutation::parse_cycles(n, p.cycle_string()) == p);
  }
}

TEST_CASE("pattern invariants") {
  CHECK(Pattern::cyclic(6, 2) == Pattern({1, 1, 4}));
  CHECK(Pattern::cyclic(4, 2).to_string() == "{1,1,2}");
  CHECK(Pattern({4, 1, 1}).lengths() == std::vector<int>{1, 1, 4});
  CHECK(Pattern({4, 1, 1}).total() == 6);
  CHECK_THROWS_AS(Pattern::cyclic(5, 4), std::invalid_argument);
}
