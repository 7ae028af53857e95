#include "permstat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permstat {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("permutation must be nonempty");
  const int n = static_cast<int>(letters_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : letters_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("letter " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("duplicate letter " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  return Permutation(std::move(letters));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(letters_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(letters_[i - 1] - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("length mismatch in compose");
  std::vector<int> r(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) r[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(r));
}

Permutation left_adjacent_transposition(const Permutation& p, int i) {
  if (i < 1 || i >= p.size())
    throw std::invalid_argument("transposition index " + std::to_string(i) + " outside 1..n-1");
  std::vector<int> letters = p.letters();
  for (int& v : letters) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(letters));
}

namespace {

// merge step counting pairs (left, right) with left > right
long long merge_count(std::vector<int>& a, std::vector<int>& buf, std::size_t lo,
                      std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long count = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      buf[k++] = a[i++];
    } else {
      count += static_cast<long long>(mid - i);
      buf[k++] = a[j++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

long long inversions(const Permutation& p) {
  std::vector<int> a = p.letters();
  std::vector<int> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

int sign(const Permutation& p) {
  // parity via cycle count: sign = (-1)^(n - #cycles)
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    ++cycles;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = p(i))
      seen[static_cast<std::size_t>(i - 1)] = 1;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

CycleForm foata_cycle_form(const Permutation& p) {
  const int n = p.size();
  CycleForm form;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  // ascending start guarantees each cycle is reached at its minimum
  for (int m = 1; m <= n; ++m) {
    if (seen[static_cast<std::size_t>(m - 1)]) continue;
    std::vector<int> cycle;
    int v = p(m);
    while (v != m) {
      cycle.push_back(v);
      seen[static_cast<std::size_t>(v - 1)] = 1;
      v = p(v);
    }
    cycle.push_back(m);
    seen[static_cast<std::size_t>(m - 1)] = 1;
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

std::vector<int> right_to_left_minima(const Permutation& p) {
  std::vector<int> positions;
  int best = p.size() + 1;
  for (int i = p.size(); i >= 1; --i) {
    if (p(i) < best) {
      best = p(i);
      positions.push_back(i);
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

Permutation standardize(const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("cannot standardize an empty word");
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate letter in word");
  std::vector<int> ranks(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                                sorted.begin()) +
               1;
  }
  return Permutation(std::move(ranks));
}

std::vector<int> unstandardize(const Permutation& p, const std::vector<int>& ground) {
  if (static_cast<int>(ground.size()) != p.size())
    throw std::invalid_argument("ground size does not match permutation length");
  for (std::size_t i = 1; i < ground.size(); ++i)
    if (ground[i - 1] >= ground[i])
      throw std::invalid_argument("ground must be strictly increasing");
  std::vector<int> word(ground.size());
  for (int i = 1; i <= p.size(); ++i)
    word[static_cast<std::size_t>(i - 1)] = ground[static_cast<std::size_t>(p(i) - 1)];
  return word;
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ',';
    out << p(i);
  }
  return out.str();
}

}  // namespace permstat
