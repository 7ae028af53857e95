#include "permstat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument outside 0..20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - i);
  }
  return rank;
}

SnRange::SnRange(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw std::out_of_range("enumeration size outside 1.." +
                            std::to_string(kMaxEnumerationN));
}

SnRange::iterator& SnRange::iterator::operator++() {
  done_ = !std::next_permutation(state_.begin(), state_.end());
  return *this;
}

}  // namespace permstat
