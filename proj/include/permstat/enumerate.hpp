#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Hard cap for exhaustive enumeration; verification uses n <= 9.
inline constexpr int kMaxEnumerationN = 12;

std::uint64_t factorial(int n);

/// Lexicographic index of p among the n! permutations of [n], from 0.
std::uint64_t lex_rank(const Permutation& p);

/// All of S_n in lexicographic order, one permutation at a time.
/// Throws std::out_of_range unless 1 <= n <= kMaxEnumerationN.
class SnRange {
 public:
  explicit SnRange(int n);

  class iterator {
   public:
    using value_type = Permutation;

    iterator() = default;
    explicit iterator(int n) : state_(static_cast<std::size_t>(n)), done_(false) {
      std::iota(state_.begin(), state_.end(), 1);
    }

    Permutation operator*() const { return Permutation(state_); }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_; }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    std::vector<int> state_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

  int n() const { return n_; }

 private:
  int n_;
};

}  // namespace permstat
