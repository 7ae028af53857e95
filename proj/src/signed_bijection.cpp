#include "permstat/signed_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permstat/statistics.hpp"

namespace permstat {

CaseLabel classify(const Permutation& p) {
  switch (p.first_letter()) {
    case 1: return CaseLabel::A1;
    case 2: return CaseLabel::A2;
    default: return CaseLabel::B;
  }
}

Permutation foata_map(const Permutation& w) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(w.size()));
  for (const std::vector<int>& cycle : foata_cycle_form(w).cycles)
    flat.insert(flat.end(), cycle.begin(), cycle.end());
  return Permutation(std::move(flat));
}

Permutation foata_map_inverse(const Permutation& v) {
  std::vector<int> image(static_cast<std::size_t>(v.size()));
  int start = 1;
  // each piece ending at a right-to-left minimum is one cycle
  for (int m : right_to_left_minima(v)) {
    for (int j = start; j < m; ++j) image[static_cast<std::size_t>(v(j) - 1)] = v(j + 1);
    image[static_cast<std::size_t>(v(m) - 1)] = v(start);
    start = m + 1;
  }
  return Permutation(std::move(image));
}

Permutation phi_tilde(const Permutation& w) {
  if (classify(w) != CaseLabel::B)
    throw std::domain_error("phi_tilde requires a first letter of at least 3");
  Permutation v = foata_map(w);
  if (sign(v) == sign(w)) return v;
  return left_adjacent_transposition(v, 1);
}

Permutation psi1(const Permutation& w, TranspositionTrail* trail) {
  if (classify(w) != CaseLabel::A1)
    throw std::domain_error("psi1 requires first letter 1");
  const int n = w.size();

  Permutation cur = w;
  std::vector<int> recorded;
  Permutation result = Permutation::identity(n);

  int i = 1;
  while (true) {
    while (i <= n && cur(i) == i) ++i;
    if (i > n) {
      // drained to the identity; the trail alone is the image
      break;
    }
    if (cur(i) == i + 1) {
      const int d0 = depth(cur), r0 = drp(cur);
      cur = left_adjacent_transposition(cur, i);
      if (depth(cur) != d0 - 1 || drp(cur) != r0 - 1)
        throw std::logic_error("peeling a succession must lower depth and drp by one");
      recorded.push_back(i);
    } else {
      // cur(i) - i >= 2: the suffix standardizes into class B
      const std::vector<int> suffix(cur.letters().begin() + (i - 1), cur.letters().end());
      const Permutation mapped = phi_tilde(standardize(suffix));
      std::vector<int> ground(suffix.size());
      std::iota(ground.begin(), ground.end(), i);
      const std::vector<int> tail = unstandardize(mapped, ground);
      std::vector<int> letters;
      letters.reserve(static_cast<std::size_t>(n));
      for (int j = 1; j < i; ++j) letters.push_back(j);
      letters.insert(letters.end(), tail.begin(), tail.end());
      result = Permutation(std::move(letters));
      break;
    }
  }

  // left product of the recorded transpositions, in recorded order
  for (auto it = recorded.rbegin(); it != recorded.rend(); ++it)
    result = left_adjacent_transposition(result, *it);
  if (trail) trail->indices = std::move(recorded);
  return result;
}

Permutation psi2(const Permutation& w) {
  if (classify(w) != CaseLabel::A2)
    throw std::domain_error("psi2 requires first letter 2");
  return left_adjacent_transposition(psi1(left_adjacent_transposition(w, 1)), 1);
}

Permutation f_map(const Permutation& w) {
  switch (classify(w)) {
    case CaseLabel::A1: return psi1(w);
    case CaseLabel::A2: return psi2(w);
    case CaseLabel::B: return phi_tilde(w);
  }
  throw std::logic_error("unreachable");
}

}  // namespace permstat
