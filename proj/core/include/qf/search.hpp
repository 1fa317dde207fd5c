#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

enum class SearchMode { Auto, Structured, General, BruteForce };

const char* search_mode_name(SearchMode mode);
std::optional<SearchMode> parse_search_mode(std::string_view name);

/// Feasibility and candidate-filter rules. Each can be disabled to force
/// the enumerator to re-derive the corresponding fact empirically; every
/// rule is a sound filter, so disabling one never changes the class set.
enum class PruneRule {
  Divisibility,   // n >= 2f and f does not divide n: no quandles
  Gcd,            // exponent-set gcd obstruction at n > 2f
  MultipleBound,  // closed-form non-existence at n = cf (c = 3, f > 2, or c > 3)
  FixedSet,       // forced fixed set of mu_{n-f} (structured mode, n >= 2f)
  ImageCoset,     // mu_{n-f}(F_n) is a fixed-set coset (structured, n > 2f)
  CycleSpacing,   // that image is equally spaced along the cycle (structured, n > 2f)
};
inline constexpr int kPruneRuleCount = 6;

const char* prune_rule_name(PruneRule rule);
std::optional<PruneRule> parse_prune_rule(std::string_view name);

struct RuleSet {
  std::array<bool, kPruneRuleCount> enabled;

  RuleSet() { enabled.fill(true); }
  bool on(PruneRule rule) const { return enabled[static_cast<std::size_t>(rule)]; }
  RuleSet& disable(PruneRule rule) {
    enabled[static_cast<std::size_t>(rule)] = false;
    return *this;
  }
  /// The three closed-form feasibility rules at once.
  RuleSet& disable_closed_form() {
    return disable(PruneRule::Divisibility).disable(PruneRule::Gcd).disable(PruneRule::MultipleBound);
  }
};

struct SearchParams {
  int n = 0;
  int f = 0;
  SearchMode mode = SearchMode::Auto;
  std::uint64_t node_budget = 100'000'000;
  std::chrono::milliseconds time_budget = std::chrono::minutes(10);
  unsigned jobs = 1;
  RuleSet rules;
  bool force_search = false;  // search even when the precheck proves emptiness
};

struct Feasibility {
  enum class Reason { None, Divisibility, Gcd, MultipleBound };
  bool feasible = true;
  Reason reason = Reason::None;
  std::vector<int> exponents;  // the l-values examined by the gcd rule
  std::string describe() const;
};

/// Closed-form non-existence checks; requires n-2 >= f > 1.
Feasibility feasibility_precheck(int n, int f);
Feasibility feasibility_precheck(int n, int f, const RuleSet& rules);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaf_checks = 0;
  std::array<std::uint64_t, kPruneRuleCount> pruned{};
  /// Structured mode: the mu_{n-f} candidates that survived all filters.
  std::vector<Permutation> structured_candidates;
  double wall_seconds = 0.0;
};

enum class LabeledKind {
  AllLabelings,         // general and brute-force modes count every labeling
  NormalizedLabelings,  // structured mode counts labelings with mu_n canonical
};

struct EnumerationResult {
  int n = 0;
  int f = 0;
  std::vector<Quandle> representatives;  // pairwise non-isomorphic
  std::vector<int> class_sizes;          // labelings seen per class
  std::uint64_t labeled_count = 0;
  LabeledKind labeled_kind = LabeledKind::AllLabelings;
  bool exhaustive = true;
  std::string note;  // e.g. the precheck rule that proved emptiness
  SearchMode mode_used = SearchMode::Auto;
  SearchStats stats;
};

/// The machine-readable summary: "result n=N f=F classes=C labeled=L
/// exhaustive=yes|no".
std::string result_line(const EnumerationResult& result);

/// All quandles of cyclic type of order n with f fixed points, up to
/// isomorphism. Auto mode picks Structured for n >= 2f (where the
/// normalized search frame is justified) and General otherwise.
EnumerationResult enumerate_quandles(const SearchParams& params);

/// Independent slow oracle: enumerates every assignment of n
/// pattern-constrained permutations, rejecting prefixes only by direct
/// axiom instances, with a full axiom check at each leaf. No normalized
/// frame, no structural filters. Requires n <= 7.
EnumerationResult brute_force_oracle(int n, int f,
                                     std::uint64_t node_budget = 2'000'000'000);

struct CellReport {
  int n = 0;
  int f = 0;
  std::uint64_t classes = 0;
  bool all_connected = true;
  bool none_connected = true;
  std::optional<std::uint64_t> expected_classes;
  bool ok = true;
  bool exhaustive = true;
};

struct ClaimReport {
  std::vector<CellReport> cells;
  bool all_ok = true;
};

/// Enumerates every cell with n_min <= n <= n_max, n-2 >= f > 1, and
/// checks the closed-form class counts and connectivity statements cell
/// by cell. Any disagreement flips ok (and all_ok) to false.
ClaimReport rederive_claims(int n_min, int n_max, const SearchParams& base);

}  // namespace qf
