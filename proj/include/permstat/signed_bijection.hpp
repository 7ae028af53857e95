#pragma once

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// First-letter classes: A1 = {p(1) = 1}, A2 = {p(1) = 2}, B = {p(1) >= 3}.
enum class CaseLabel { A1, A2, B };

CaseLabel classify(const Permutation& p);

/// Canonical-cycle flattening: write each cycle minimum-last, order the
/// cycles by increasing minimum, erase parentheses. Preserves the first
/// letter; nexc(w) = des(result) and depth(w) = drp(result).
Permutation foata_map(const Permutation& w);

/// Cut after each right-to-left minimum and read the pieces as cycles;
/// foata_map_inverse(foata_map(w)) == w.
Permutation foata_map_inverse(const Permutation& v);

/// foata_map followed by a (1,2)-twist when that restores the sign.
/// Requires class B (the twist must not touch the first letter); throws
/// std::domain_error otherwise. Sign-preserving with depth -> drp.
Permutation phi_tilde(const Permutation& w);

/// Indices of the adjacent transpositions peeled off by psi1, in
/// application order; always strictly increasing.
struct TranspositionTrail {
  std::vector<int> indices;
};

/// Sign- and first-letter-preserving map on A1 with drp(psi1(w)) = depth(w):
/// peel leading successions i -> i+1 with adjacent transpositions (each
/// peel lowers depth and drp by exactly one), transform the remaining
/// suffix through standardize / phi_tilde / unstandardize, then reapply
/// the recorded transpositions. Throws std::domain_error off A1.
Permutation psi1(const Permutation& w, TranspositionTrail* trail = nullptr);

/// Conjugate of psi1 by (1,2); acts on A2. Throws std::domain_error off A2.
Permutation psi2(const Permutation& w);

/// Dispatch phi_tilde / psi1 / psi2 by class: a bijection on S_n that
/// preserves sign and first letter and carries depth to drp.
Permutation f_map(const Permutation& w);

}  // namespace permstat
