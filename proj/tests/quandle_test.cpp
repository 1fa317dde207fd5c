#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "qf/families.hpp"
#include "qf/formats.hpp"
#include "qf/quandle.hpp"

using namespace qf;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(QF_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& name) {
  std::ifstream in(fixture_path(name));
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Quandle load(const std::string& name) {
  return read_quandle_file(fixture_path(name)).result.value();
}

}  // namespace

TEST_CASE("verify accepts the golden quandles") {
  CHECK(Quandle::verify(q62().permutations()).empty());
  CHECK(Quandle::verify(dihedral(4).permutations()).empty());
  CHECK(Quandle::verify(trivial(5).permutations()).empty());
  const std::vector<Permutation> singleton = {Permutation::identity(1)};
  CHECK(Quandle::verify(singleton).empty());
}

TEST_CASE("verify reports idempotency and conjugation failures") {
  const std::vector<Permutation> bad_idem = {Permutation::from_cycles(2, {{1, 2}}),
                                             Permutation::identity(2)};
  const auto violations = Quandle::verify(bad_idem);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().kind == AxiomViolation::Kind::Idempotency);
  CHECK(violations.front().i == 1);

  // replacing one permutation of a valid quandle breaks conjugation
  const Quandle q = q62();
  std::vector<Permutation> mus(q.permutations().begin(), q.permutations().end());
  mus[3] = Permutation::from_cycles(6, {{1, 5, 3, 6}});
  const auto broken = Quandle::verify(mus);
  CHECK_FALSE(broken.empty());
  CHECK(std::all_of(broken.begin(), broken.end(), [](const AxiomViolation& v) {
    return v.kind == AxiomViolation::Kind::Conjugation;
  }));

  const std::vector<Permutation> mismatched = {Permutation::identity(3)};
  CHECK_THROWS_AS(Quandle::verify(mismatched), std::invalid_argument);
}

TEST_CASE("tables round-trip through permutations") {
  const Quandle q = q62();
  CHECK(Quandle::from_table(q.table()).value() == q);
  CHECK(q.op(1, 2) == 5);  // row 1, column 2
  CHECK(q.mu(6) == Permutation::from_cycles(6, {{1, 2, 3, 4}}));
  CHECK(q.mu(4) == Permutation::from_cycles(6, {{1, 6, 3, 5}}));

  const Quandle q5 = load("table_q5.txt");
  CHECK(q5.mu(1) == Permutation::from_cycles(5, {{4, 5}}));
  CHECK(q5.mu(2) == q5.mu(1));
  CHECK(q5.mu(3) == q5.mu(1));
  CHECK(q5.mu(4) == Permutation::from_cycles(5, {{2, 3}}));
  CHECK(q5.mu(5) == q5.mu(4));
}

TEST_CASE("from_table flags non-bijective columns") {
  Table table = q62().table();
  table[0][1] = 6;  // column 2 now hits 6 twice
  const auto result = Quandle::from_table(table);
  CHECK_FALSE(result.ok());
  REQUIRE_FALSE(result.violations.empty());
  CHECK(result.violations.front().kind == AxiomViolation::Kind::NotBijection);
  CHECK(result.violations.front().i == 2);
  CHECK_THROWS_AS(result.value(), std::invalid_argument);

  CHECK_THROWS_AS(Quandle::from_table(Table{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Quandle::from_table(Table{{1, 7}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("profiles and cyclic type detection") {
  CHECK(is_cyclic_type(q62(), 2));
  CHECK(is_cyclic_type(dihedral(4), 2));
  CHECK(cyclic_type_status(q62(), 3) == CyclicTypeStatus::WrongProfile);
  CHECK(cyclic_type_status(q62(), 1) == CyclicTypeStatus::FOutOfRange);
  CHECK(cyclic_type_status(q62(), 5) == CyclicTypeStatus::FOutOfRange);

  // even dihedral of order 6 has profile {1,1,2,2}^6: never cyclic type
  const Quandle r6 = dihedral(6);
  CHECK(r6.profile().constant());
  CHECK(r6.profile().at(1) == Pattern({1, 1, 2, 2}));
  for (int f = 2; f <= 4; ++f) CHECK_FALSE(is_cyclic_type(r6, f));

  CHECK(infer_fixed_point_count(q62()) == 2);
  CHECK(infer_fixed_point_count(load("table_q5.txt")) == 3);
  CHECK_FALSE(infer_fixed_point_count(trivial(4)).has_value());
  CHECK_FALSE(infer_fixed_point_count(r6).has_value());
}

TEST_CASE("text formats parse each other's output") {
  const Quandle q = load("table_q62.txt");
  CHECK(load("perms_q62.txt") == q);

  const ParsedQuandle from_table_text_q = parse_quandle_text(to_table_text(q));
  CHECK(from_table_text_q.format == QuandleFormat::Table);
  CHECK(from_table_text_q.result.value() == q);

  const ParsedQuandle from_perm_text_q = parse_quandle_text(to_permutation_text(q));
  CHECK(from_perm_text_q.format == QuandleFormat::Permutations);
  CHECK(from_perm_text_q.result.value() == q);

  CHECK(to_table_text(q) == slurp("table_q62.txt"));
  CHECK(to_permutation_text(q) == slurp("perms_q62.txt"));
}

TEST_CASE("parser reports positions") {
  CHECK_THROWS_AS(parse_quandle_text(""), ParseError);
  try {
    parse_quandle_text("2\n1 1\n");
    FAIL("missing line not caught");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  try {
    parse_quandle_text("2\n1 2\n2 x\n");
    FAIL("bad token not caught");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 3);
  }
  CHECK_THROWS_AS(parse_quandle_text("2\n1 2\n2 1\n9 9\n"), ParseError);   // extra line
  CHECK_THROWS_AS(parse_quandle_text("2\n1 3\n2 1\n"), ParseError);        // out of range
  CHECK_THROWS_AS(parse_quandle_text("2\n(1 2\n(1 2)\n"), ParseError);     // bad cycle
}

TEST_CASE("table-level axioms agree with permutation-level verification") {
  std::mt19937 rng(11);
  const std::vector<Quandle> corpus = {q62(), dihedral(4), dihedral(5), trivial(3),
                                       load("table_q5.txt")};
  for (const Quandle& q : corpus) {
    CHECK(table_axiom_violations(q.table()).empty());

    // random single-entry corruption must be flagged by both routes
    for (int round = 0; round < 25; ++round) {
      Table broken = q.table();
      const int n = q.order();
      const int a = 1 + static_cast<int>(rng() % n);
      const int b = 1 + static_cast<int>(rng() % n);
      const int v = 1 + static_cast<int>(rng() % n);
      if (broken[a - 1][b - 1] == v) continue;
      broken[a - 1][b - 1] = v;
      const bool table_route = !table_axiom_violations(broken).empty();
      const bool perm_route = !Quandle::from_table(broken).ok();
      CHECK(table_route);
      CHECK(table_route == perm_route);
    }
  }
}

TEST_CASE("relabeling preserves the axioms and the profile multiset") {
  std::mt19937 rng(23);
  const Quandle q = q62();
  for (int round = 0; round < 50; ++round) {
    std::vector<int> images(6);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const Quandle moved = relabel(q, Permutation(images));
    CHECK(moved.profile().same_multiset(q.profile()));
    CHECK(Quandle::verify(moved.permutations()).empty());
  }
  CHECK_THROWS_AS(relabel(q, Permutation::identity(5)), std::invalid_argument);
}
