#pragma once

#include <string>
#include <vector>

namespace permstat {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-indexed throughout; n >= 1. Immutable after construction.
class Permutation {
 public:
  /// Validates that `letters` is a rearrangement of 1..n.
  /// Throws std::invalid_argument on duplicates, out-of-range values,
  /// or empty input.
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }

  /// Image of position i, 1-indexed.
  int operator()(int i) const { return letters_[i - 1]; }

  /// One-line notation, letters()[i] = image of position i+1.
  const std::vector<int>& letters() const { return letters_; }

  int first_letter() const { return letters_.front(); }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> letters_;
};

/// compose(p, q)(i) = p(q(i)): q is applied first. Sizes must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// Left product t_i * p with t_i = (i, i+1): the one-line notation of p
/// with the letters of value i and i+1 swapped in place. 1 <= i <= n-1.
Permutation left_adjacent_transposition(const Permutation& p, int i);

/// Number of pairs i < j with p(i) > p(j). Merge-count; the quadratic
/// pair enumeration lives in the tests as the oracle.
long long inversions(const Permutation& p);

/// +1 if inversions(p) is even, -1 otherwise.
int sign(const Permutation& p);

/// Cycle decomposition in canonical writing: each cycle is rotated so its
/// minimum element is last (the cycle through m starts at p(m)), and the
/// cycles are ordered by strictly increasing minimum.
struct CycleForm {
  std::vector<std::vector<int>> cycles;
  bool operator==(const CycleForm&) const = default;
};

CycleForm foata_cycle_form(const Permutation& p);

/// Positions i with p(i) < p(j) for every j > i, ascending. Position n is
/// always present.
std::vector<int> right_to_left_minima(const Permutation& p);

/// The unique permutation of [m] order-isomorphic to a word of m distinct
/// letters. Throws std::invalid_argument on duplicates or empty input.
Permutation standardize(const std::vector<int>& word);

/// Word over `ground` (strictly increasing, |ground| = p.size()) that is
/// order-isomorphic to p; standardize(unstandardize(p, g)) == p.
std::vector<int> unstandardize(const Permutation& p, const std::vector<int>& ground);

/// Comma-separated one-line notation, e.g. "4,6,2,3,1,5".
std::string to_string(const Permutation& p);

}  // namespace permstat
