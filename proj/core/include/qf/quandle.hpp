#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qf/perm.hpp"

namespace qf {

using Table = std::vector<std::vector<int>>;

/// One failed axiom instance. Violations are data, not errors: a sequence
/// of permutations that is not a quandle produces a list of these.
struct AxiomViolation {
  enum class Kind {
    NotBijection,  // a table column is not a bijection (i = column)
    Idempotency,   // mu_i(i) != i
    Conjugation,   // mu_{mu_i(j)} != mu_i mu_j mu_i^-1
  };
  Kind kind;
  int i = 0;
  int j = 0;  // Conjugation only

  std::string describe() const;
};

/// The n patterns of a quandle's permutations, indexed and as a multiset.
class Profile {
 public:
  explicit Profile(std::vector<Pattern> by_index) : patterns_(std::move(by_index)) {}

  const Pattern& at(int i) const { return patterns_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Pattern>& by_index() const noexcept { return patterns_; }
  bool constant() const;

  /// Sorted (pattern, multiplicity) pairs.
  std::vector<std::pair<Pattern, int>> histogram() const;
  bool same_multiset(const Profile& other) const;
  std::string to_string() const;

 private:
  std::vector<Pattern> patterns_;
};

struct QuandleResult;

/// A finite quandle on {1..n}, held as its sequence of permutations.
/// mu(i) is the right translation by i; the operation is a*b = mu_b(a).
/// Construction always verifies the axioms, so a Quandle value is valid
/// by construction and immutable afterwards.
class Quandle {
 public:
  /// Every violated axiom instance; empty iff the sequence is a quandle.
  /// Throws std::invalid_argument when degrees mismatch the length.
  static std::vector<AxiomViolation> verify(std::span<const Permutation> mus);

  static QuandleResult from_permutations(std::vector<Permutation> mus);

  /// Columns are read as permutations: mu_b(a) = table[a-1][b-1].
  /// Throws std::invalid_argument on non-square input or out-of-range
  /// entries; non-bijective columns and axiom failures come back as
  /// violations.
  static QuandleResult from_table(const Table& table);

  int order() const noexcept { return n_; }
  const Permutation& mu(int i) const { return mus_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const Permutation> permutations() const noexcept { return mus_; }

  int op(int a, int b) const { return mu(b)(a); }  // a*b
  Table table() const;
  Profile profile() const;

  friend bool operator==(const Quandle&, const Quandle&) = default;

 private:
  struct verified_tag {};
  Quandle(std::vector<Permutation> mus, verified_tag)
      : n_(static_cast<int>(mus.size())), mus_(std::move(mus)) {}

  int n_;
  std::vector<Permutation> mus_;
};

/// Outcome of a verifying constructor: either the quandle or the list of
/// violated axiom instances (malformed input throws instead).
struct QuandleResult {
  std::optional<Quandle> quandle;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return quandle.has_value(); }
  /// Unwraps, throwing std::invalid_argument with the violation list.
  Quandle value() const;
};

enum class CyclicTypeStatus {
  Yes,
  FOutOfRange,   // outside n-2 >= f > 1
  WrongProfile,  // some permutation is not {1 x f, n-f}
};

CyclicTypeStatus cyclic_type_status(const Quandle& q, int f);
bool is_cyclic_type(const Quandle& q, int f);

/// f = n - (longest cycle length), defined only when the profile is
/// constant and of cyclic shape with f in range.
std::optional<int> infer_fixed_point_count(const Quandle& q);

/// The quandle with permutations mu'_{alpha(i)} = alpha mu_i alpha^-1,
/// i.e. the relabeling of q along alpha. Always a quandle again.
Quandle relabel(const Quandle& q, const Permutation& alpha);

/// Deterministic ordering helper: lexicographic comparison of tables.
bool table_less(const Quandle& a, const Quandle& b);

/// Axiom check performed directly on a multiplication table: idempotency,
/// right-invertibility (column bijectivity) and self-distributivity.
/// Independent of Quandle::verify; the two must agree on every input.
struct TableAxiomViolation {
  enum class Kind { NotBijection, Idempotency, Distributivity };
  Kind kind;
  int a = 0;
  int b = 0;
  int c = 0;
};
std::vector<TableAxiomViolation> table_axiom_violations(const Table& table);

}  // namespace qf
