#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

/// Per-index fixed-point sets F[i], and for cyclic-type quandles the
/// supports C[i] of the single non-singular cycles.
struct FixedPointData {
  std::vector<std::vector<int>> fixed;              // fixed[i-1], sorted
  std::optional<std::vector<std::vector<int>>> cycle;  // present iff cyclic type

  const std::vector<int>& F(int i) const { return fixed.at(static_cast<std::size_t>(i - 1)); }
  /// Throws std::logic_error when the quandle is not of cyclic type.
  const std::vector<int>& C(int i) const;
};

FixedPointData fixed_point_data(const Quandle& q);

/// Orbit closure of point 1 under all mu_i and their inverses. The word
/// for a reached point applies generators left to right starting from 1;
/// entry +i means mu_i, -i means mu_i^-1.
struct Connectivity {
  bool connected = false;
  std::vector<bool> reached;               // reached[p-1]
  std::vector<std::vector<int>> words;     // words[p-1]; empty for point 1
};

Connectivity connectivity(const Quandle& q);
bool is_connected(const Quandle& q);

/// i != j, mu_i(j) = j and mu_j(i) = i.
bool are_associate(const Quandle& q, int i, int j);

/// A set partition of {1..n}; classes sorted internally and ordered by
/// their minimum elements.
struct PartitionClasses {
  std::vector<std::vector<int>> classes;

  static PartitionClasses singletons(int n);
  static PartitionClasses from_classes(int n, std::vector<std::vector<int>> classes);
  int size() const noexcept { return static_cast<int>(classes.size()); }
  int class_of(int element) const;  // 1-based class index
  std::string label(int class_index) const;  // "{1,3}"
};

/// Classes of the reflexive closure of the associate relation when that
/// closure is transitive; otherwise the witnessing triple (i,j,k) with
/// i~j, j~k but not i~k.
struct AssociationClasses {
  std::optional<PartitionClasses> classes;
  std::optional<std::array<int, 3>> failure;
  bool ok() const noexcept { return classes.has_value(); }
};

AssociationClasses association_classes(const Quandle& q);

bool is_congruence(const Quandle& q, const PartitionClasses& partition);

/// Quotient quandle over the classes, ordered by minimum representative.
/// Throws std::invalid_argument when the partition is not a congruence.
Quandle quotient(const Quandle& q, const PartitionClasses& partition);

/// Quotient table rendered with class labels, e.g. rows of
/// "{1,3} {5,6} {2,4}" after a first line holding the class count.
std::string quotient_table_text(const Quandle& q, const PartitionClasses& partition);

std::vector<int> common_fixed_points(const Quandle& q);

/// Results of checking the six structural conditions a normalized
/// cyclic-type quandle with n >= 2f satisfies (conditions 4-6 need
/// n > 2f). All witnesses re-verify their defining identity.
struct ConditionReport {
  std::array<bool, 6> holds{};

  struct AssocPower {  // condition 2: mu_h = mu_{h'}^exponent
    int h;
    int h_prime;
    int exponent;
  };
  std::vector<AssocPower> assoc_powers;

  struct CentralizerFactor {  // condition 6: g = sigma * tau^exponent
    int m;
    int exponent;
    Permutation sigma;
  };
  std::vector<CentralizerFactor> factors;

  bool all() const;
  bool first_three() const;
  std::string to_string() const;
};

/// f must satisfy n-2 >= f > 1 (std::invalid_argument otherwise). The
/// quandle is checked literally: condition 1 requires the normalized
/// labeling with mu_n = (1 2 ... n-f).
ConditionReport check_structure_conditions(const Quandle& q, int f);

/// Relabels q so that mu_n becomes (1 2 ... n-f): the non-singular cycle
/// of the input's mu_n is sent to 1..n-f starting from its smallest moved
/// point, fixed points to n-f+1..n in increasing order. Returns nullopt
/// when mu_n does not consist of one cycle plus fixed points.
std::optional<Quandle> normalize_labeling(const Quandle& q);

}  // namespace qf
