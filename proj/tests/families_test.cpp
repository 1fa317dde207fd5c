#include <doctest.h>

#include <random>

#include "qf/families.hpp"
#include "qf/formats.hpp"
#include "qf/iso.hpp"
#include "qf/structure.hpp"

using namespace qf;

namespace {

Quandle q5() {
  return read_quandle_file(std::string(QF_TEST_DATA_DIR) + "/table_q5.txt").result.value();
}

}  // namespace

TEST_CASE("trivial and dihedral families") {
  CHECK(trivial(1).order() == 1);
  CHECK(trivial(3).mu(2) == Permutation::identity(3));
  CHECK_THROWS_AS(trivial(0), std::invalid_argument);
  CHECK_THROWS_AS(dihedral(1), std::invalid_argument);

  CHECK(dihedral(4).table() == Table{{1, 3, 1, 3}, {4, 2, 4, 2}, {3, 1, 3, 1}, {2, 4, 2, 4}});
  for (int n = 2; n <= 9; ++n) CHECK(Quandle::verify(dihedral(n).permutations()).empty());
}

TEST_CASE("two_f_canonical") {
  const Quandle q4 = two_f_canonical(2);
  CHECK(find_isomorphism(q4, dihedral(4)).has_value());

  const Quandle q6 = two_f_canonical(3);
  CHECK(q6.order() == 6);
  CHECK(q6.mu(1) == Permutation::from_cycles(6, {{4, 5, 6}}));
  CHECK(q6.mu(4) == Permutation::from_cycles(6, {{1, 2, 3}}));
  CHECK(is_cyclic_type(q6, 3));

  for (int f = 2; f <= 6; ++f) {
    const Quandle q = two_f_canonical(f);
    CHECK(is_cyclic_type(q, f));
    CHECK_FALSE(is_connected(q));
  }
  CHECK_THROWS_AS(two_f_canonical(1), std::invalid_argument);
}

TEST_CASE("the block family for (n-f) | f") {
  const Quandle q = divisible_family(6, 4);
  CHECK(q.mu(1) == Permutation::from_cycles(6, {{3, 4}}));
  CHECK(q.mu(2) == q.mu(1));
  CHECK(q.mu(3) == Permutation::from_cycles(6, {{5, 6}}));
  CHECK(q.mu(4) == q.mu(3));
  CHECK(q.mu(5) == Permutation::from_cycles(6, {{1, 2}}));
  CHECK(q.mu(6) == q.mu(5));

  for (int f = 2; f <= 4; ++f) CHECK(divisible_family(2 * f, f) == two_f_canonical(f));

  CHECK_THROWS_AS(divisible_family(5, 3), std::invalid_argument);   // 2 does not divide 3
  CHECK_THROWS_AS(divisible_family(7, 4), std::invalid_argument);   // 3 does not divide 4
  CHECK_THROWS_AS(divisible_family(10, 4), std::invalid_argument);  // n > 2f
  CHECK_THROWS_AS(divisible_family(5, 4), std::invalid_argument);   // n < f+2
}

TEST_CASE("extraction of a common fixed point") {
  const Quandle extracted = extract_common_fixed_point(q5(), 1);
  CHECK(extracted == two_f_canonical(2));  // exact labels, not just isomorphic
  CHECK(is_cyclic_type(extracted, 2));

  CHECK_THROWS_AS(extract_common_fixed_point(q5(), 2), std::invalid_argument);
  // no common fixed point at all
  CHECK_THROWS_AS(extract_common_fixed_point(divisible_family(6, 4), 1), std::invalid_argument);
  const Quandle adjoined =
      adjoin_common_fixed_point(two_f_canonical(2), Permutation::parse_cycles(4, "(3 4)"));
  CHECK(extract_common_fixed_point(adjoined, 5) == two_f_canonical(2));
}

TEST_CASE("adjoining a commuting permutation") {
  const Quandle adjoined =
      adjoin_common_fixed_point(two_f_canonical(2), Permutation::parse_cycles(4, "(3 4)"));
  CHECK(adjoined.order() == 5);
  CHECK(is_cyclic_type(adjoined, 3));
  CHECK(find_isomorphism(adjoined, q5()).has_value());
  CHECK(common_fixed_points(adjoined) == std::vector<int>{5});

  // the identity commutes with everything; the result is a quandle but not
  // of cyclic type since the new permutation has no long cycle
  const Quandle with_id = adjoin_common_fixed_point(q62(), Permutation::identity(6));
  CHECK(with_id.order() == 7);
  CHECK(Quandle::verify(with_id.permutations()).empty());
  CHECK_FALSE(infer_fixed_point_count(with_id).has_value());

  try {
    adjoin_common_fixed_point(q62(), Permutation::parse_cycles(6, "(1 2)"));
    FAIL("commutation failure not detected");
  } catch (const CommutationError& e) {
    CHECK(e.index == 1);
  }
  CHECK_THROWS_AS(adjoin_common_fixed_point(q62(), Permutation::identity(5)),
                  std::invalid_argument);
}

TEST_CASE("extract undoes adjoin") {
  std::mt19937 rng(41);
  const std::vector<std::pair<int, int>> cells = {{4, 2}, {6, 3}, {6, 4}, {8, 4}, {8, 6}};
  for (int round = 0; round < 20; ++round) {
    const auto [n, f] = cells[rng() % cells.size()];
    const Quandle q = divisible_family(n, f);
    const int i0 = 1 + static_cast<int>(rng() % n);
    const int k = 1 + static_cast<int>(rng() % (n - f));
    const Permutation mu = q.mu(i0).power(k);
    if (mu.is_identity()) continue;

    const Quandle adjoined = adjoin_common_fixed_point(q, mu);
    const Quandle back = infer_fixed_point_count(adjoined)
                             ? extract_common_fixed_point(adjoined, n + 1)
                             : extract_unchecked(adjoined, n + 1);
    CHECK(back == q);
  }
}

TEST_CASE("iterated adjoining") {
  const Quandle base = divisible_family(6, 4);
  CHECK(iterate_adjoin(base, 1, 0) == base);
  for (int k = 1; k <= 3; ++k) {
    const Quandle q = iterate_adjoin(base, 1, k);
    CHECK(q.order() == 6 + k);
    CHECK(is_cyclic_type(q, 4 + k));
    CHECK(static_cast<int>(common_fixed_points(q).size()) >= k);
  }
  CHECK_THROWS_AS(iterate_adjoin(q62(), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(iterate_adjoin(base, 7, 1), std::invalid_argument);
}

TEST_CASE("every constructor output passes verification") {
  const std::vector<Quandle> all = {
      trivial(1),          trivial(7),           dihedral(2),
      dihedral(9),         q62(),                two_f_canonical(5),
      divisible_family(9, 6), divisible_family(12, 10),
      iterate_adjoin(divisible_family(8, 6), 3, 2),
  };
  for (const Quandle& q : all) CHECK(Quandle::verify(q.permutations()).empty());
}
