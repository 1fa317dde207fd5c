#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

/// A verified quandle isomorphism: mu'_{alpha(i)} = alpha mu_i alpha^-1
/// for all i. Only produced by find_isomorphism after re-verification.
struct IsoWitness {
  Permutation alpha;
};

bool is_isomorphism(const Quandle& q, const Quandle& r, const Permutation& alpha);

/// Exhaustive backtracking over bijections, pruned by order, profile
/// multiset, per-element invariant signatures and forward-checking of the
/// conjugation identity on assigned indices. Returns a verified witness
/// iff the quandles are isomorphic.
std::optional<IsoWitness> find_isomorphism(const Quandle& q, const Quandle& r);

struct IsoClass {
  Quandle representative;  // lexicographically least table seen in the class
  int size = 0;
};

/// Partitions the input into isomorphism classes, keeping the order in
/// which classes first occur. Representatives are pairwise non-isomorphic.
std::vector<IsoClass> dedup_up_to_iso(std::span<const Quandle> quandles);

/// Witness rendering: cycle notation plus one "i -> alpha(i)" line per point.
std::string witness_text(const IsoWitness& witness);

}  // namespace qf
