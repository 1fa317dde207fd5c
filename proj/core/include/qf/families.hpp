#pragma once

#include <stdexcept>

#include "qf/quandle.hpp"

namespace qf {

/// Thrown by adjoin_common_fixed_point when the supplied permutation does
/// not commute with some mu_i; carries the smallest failing index.
struct CommutationError : std::invalid_argument {
  CommutationError(std::string msg, int index)
      : std::invalid_argument(std::move(msg)), index(index) {}
  int index;
};

/// All constructors verify their output; none can return a non-quandle.

Quandle trivial(int n);   // mu_i = identity for all i
Quandle dihedral(int n);  // a*b = 2b - a mod n, residues mapped to 1..n
Quandle q62();            // the connected cyclic-type quandle of order 6

/// Order 2f: mu_1..mu_f = (f+1 ... 2f), mu_{f+1}..mu_{2f} = (1 ... f).
/// Cyclic type with f fixed points, not connected. Requires f >= 2.
Quandle two_f_canonical(int f);

/// Requires f+2 <= n <= 2f and (n-f) | f. Block i of n-f equal
/// permutations cycles block i+1 (blocks read cyclically). Cyclic type of
/// order n with f fixed points.
Quandle divisible_family(int n, int f);

/// Removes a common fixed point g0 and relabels the surviving points
/// order-preservingly to 1..n-1. Enforces the cyclic-type hypotheses
/// (f > 2, f+2 <= n <= 2f) and yields cyclic type (n-1, f-1).
Quandle extract_common_fixed_point(const Quandle& q, int g0);

/// The same restriction for any common fixed point of any quandle; only
/// the quandle axioms are re-verified.
Quandle extract_unchecked(const Quandle& q, int g0);

/// Appends a new element n+1 fixed by everything, whose own permutation
/// is mu extended by fixing n+1. mu must commute with every mu_i
/// (CommutationError otherwise).
Quandle adjoin_common_fixed_point(const Quandle& q, const Permutation& mu);

/// k successive adjoinings, each reusing the extension of the original
/// mu_{i0}. Requires any two permutations of q to be equal or to move
/// disjoint point sets (the shape produced by divisible_family).
Quandle iterate_adjoin(const Quandle& q, int i0, int k);

}  // namespace qf
