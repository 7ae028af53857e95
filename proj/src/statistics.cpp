#include "permstat/statistics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace permstat {

LinearStats linear_stats(const Permutation& p) {
  LinearStats s;
  for (int i = 1; i < p.size(); ++i) {
    const int a = p(i), b = p(i + 1);
    if (a > b) {
      s.des_positions.push_back(i);
      s.des_values.push_back(b);
    } else if (b == a + 1) {
      s.suc_positions.push_back(i);
      s.suc_values.push_back(b);
      ++s.asc_count;
    } else {
      s.asc2_values.push_back(b);
      ++s.asc_count;
    }
  }
  std::sort(s.des_values.begin(), s.des_values.end());
  std::sort(s.suc_values.begin(), s.suc_values.end());
  std::sort(s.asc2_values.begin(), s.asc2_values.end());
  return s;
}

CyclicStats cyclic_stats(const Permutation& p) {
  CyclicStats s;
  for (int i = 1; i <= p.size(); ++i) {
    const int v = p(i);
    if (v > i) {
      s.exc_positions.push_back(i);
      ++s.exc_count;
      if (i >= 2) s.exc_hat_values.push_back(v);
    } else if (v < i) {
      s.drop_positions.push_back(i);
      s.aexc_values.push_back(v);
      ++s.nexc_count;
    } else {
      if (i <= p.size() - 1) s.fix_positions.push_back(i);
      if (i >= 2) s.fix_hat_values.push_back(v);
    }
  }
  std::sort(s.exc_hat_values.begin(), s.exc_hat_values.end());
  std::sort(s.aexc_values.begin(), s.aexc_values.end());
  std::sort(s.fix_hat_values.begin(), s.fix_hat_values.end());
  return s;
}

int depth(const Permutation& p) {
  int total = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > i) total += p(i) - i;
  return total;
}

int drp(const Permutation& p) {
  int total = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) total += p(i) - p(i + 1);
  return total;
}

int displacement(const Permutation& p) {
  int total = 0;
  for (int i = 1; i <= p.size(); ++i) total += std::abs(p(i) - i);
  if (total % 2 != 0) throw std::logic_error("total displacement must be even");
  return total / 2;
}

}  // namespace permstat
