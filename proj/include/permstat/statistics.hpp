#pragma once

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Statistics readable off consecutive pairs of the one-line notation.
/// All sets are returned ascending. The three value sets partition the
/// non-initial letters {p(2),...,p(n)}.
struct LinearStats {
  std::vector<int> des_positions;  // i in [n-1] with p(i) > p(i+1)
  std::vector<int> des_values;     // letters p(i+1) at descents
  std::vector<int> asc2_values;    // letters p(i+1) with p(i+1) >= p(i)+2
  std::vector<int> suc_positions;  // i in [n-1] with p(i+1) = p(i)+1
  std::vector<int> suc_values;     // letters p(i+1) at successions
  int asc_count = 0;               // ascents; asc_count + des count = n-1

  bool operator==(const LinearStats&) const = default;
};

/// Statistics comparing each position with its value. The hatted value
/// sets range over positions 2..n and partition {p(2),...,p(n)};
/// fix_positions is capped to [n-1].
struct CyclicStats {
  std::vector<int> exc_positions;   // i in [n] with p(i) > i
  int exc_count = 0;
  std::vector<int> exc_hat_values;  // p(i) with p(i) > i, i in [2,n]
  std::vector<int> aexc_values;     // p(i) with p(i) < i, i in [2,n]
  std::vector<int> fix_hat_values;  // p(i) with p(i) = i, i in [2,n]
  std::vector<int> fix_positions;   // i in [n-1] with p(i) = i
  std::vector<int> drop_positions;  // i with p(i) < i
  int nexc_count = 0;               // |drop_positions|

  bool operator==(const CyclicStats&) const = default;
};

LinearStats linear_stats(const Permutation& p);
CyclicStats cyclic_stats(const Permutation& p);

/// Total excedance height: sum of p(i) - i over positions with p(i) > i.
int depth(const Permutation& p);

/// Total descent height: sum of p(i) - p(i+1) over descent positions.
int drp(const Permutation& p);

/// Half of sum |p(i) - i|; the total is always even. Equals depth(p) and
/// depth(p.inverse()).
int displacement(const Permutation& p);

}  // namespace permstat
