#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

/// Thrown by the text parsers. Positions are 1-based; line is 0 when the
/// input is a single line (the caller then fills it in).
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg)), line(line), col(col) {}
  int line;
  int col;
};

/// Multiset of cycle lengths of a permutation, stored sorted ascending.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<int> lengths);

  /// The pattern {1 x f, n-f}: f singletons plus one (n-f)-cycle.
  static Pattern cyclic(int n, int f);

  const std::vector<int>& lengths() const noexcept { return lengths_; }
  int total() const noexcept;  // sum of lengths = degree of the source
  std::string to_string() const;  // e.g. "{1,1,4}"

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> lengths_;
};

/// A bijection of {1..n}. All points in the public interface are 1-based;
/// values are immutable after construction.
class Permutation {
 public:
  /// From the list of images: images[k] is the image of point k+1.
  /// Throws std::invalid_argument when the list is not a bijection.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int n);

  /// From disjoint cycles; points left out are fixed. Throws
  /// std::invalid_argument on repeated or out-of-range points.
  static Permutation from_cycles(int n, std::span<const std::vector<int>> cycles);
  static Permutation from_cycles(int n, std::initializer_list<std::vector<int>> cycles);

  /// Parses cycle notation, e.g. "(1 2 3 4)(5)(6)". Fixed points may be
  /// omitted. Throws ParseError (column set, line 0).
  static Permutation parse_cycles(int n, std::string_view text);

  int degree() const noexcept { return static_cast<int>(img_.size()); }
  int operator()(int point) const;
  bool fixes(int point) const { return (*this)(point) == point; }

  /// compose(p, q) applies q first: result(x) = p(q(x)).
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation power(long long k) const;
  /// alpha * (*this) * alpha^-1.
  Permutation conjugated_by(const Permutation& alpha) const;

  /// Disjoint cycles, each rotated to start at its minimum, sorted by
  /// minimum. Fixed points appear as singleton cycles.
  std::vector<std::vector<int>> cycles() const;
  Pattern pattern() const;
  std::vector<int> fixed_points() const;  // sorted ascending
  std::vector<int> moved_points() const;  // sorted ascending
  bool is_identity() const;

  /// 1-based image list (inverse of the vector constructor).
  std::vector<int> images() const;

  /// Canonical cycle notation; fixed points always printed.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the image list; used for deterministic orderings.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct raw_tag {};
  Permutation(std::vector<int> zero_based, raw_tag) : img_(std::move(zero_based)) {}

  std::vector<int> img_;  // 0-based internally; never exposed
};

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return p.compose(q);
}

}  // namespace qf
