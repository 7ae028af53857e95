#pragma once

#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Increasing word over {0} u [n]. F(w)/L(w) are its first/last letters.
struct Word {
  std::vector<int> letters;

  int first() const { return letters.front(); }
  int last() const { return letters.back(); }

  bool operator==(const Word&) const = default;
};

/// Two-row array of the drop positions (strictly decreasing) over their
/// images: bottom[j] = p(top[j]) and top[j] > bottom[j] for every column.
struct DropBiword {
  std::vector<int> top;
  std::vector<int> bottom;

  int columns() const { return static_cast<int>(top.size()); }

  bool operator==(const DropBiword&) const = default;
};

/// One merge step: the word with the largest first letter is appended to
/// the rank-Y remaining word. host is recorded pre-merge; the junction
/// always satisfies host_last > pick_first.
struct PhiIteration {
  Word pick;
  int rank = 0;  // 1-based position Y of pick.first() in the bottom row
  Word host;
  int host_last = 0;
  int pick_first = 0;
};

struct PhiTrace {
  std::vector<Word> initial_words;
  DropBiword initial_biword;
  std::vector<PhiIteration> iterations;
};

struct PhiResult {
  Permutation image;
  PhiTrace trace;
};

/// The letters 0..n split into increasing words: x starts a new word iff
/// p^{-1}(x) > x, otherwise x is appended to the word currently ending in
/// p^{-1}(x) - 1. Result sorted by strictly decreasing last letter.
std::vector<Word> initial_words(const Permutation& p);

DropBiword drop_biword(const Permutation& p);

/// The merge bijection: repeatedly append the word with the largest first
/// letter to the Y-th remaining word (Y = position of its first letter in
/// the current bottom row), deleting that column, until one word remains;
/// strip the leading 0. Carries (exc_hat, aexc, fix_hat) of p onto
/// (asc2, des_values, suc_values) of the image.
PhiResult phi_triple(const Permutation& p);

/// Rebuilds p from phi_triple(p).image by splitting 0.s into ascent
/// blocks and replaying the merges in decreasing first-letter order.
Permutation phi_triple_inverse(const Permutation& s);

/// "pick=2,3 Y=1 host=0,4,6 junction=6>2"
std::string render_iteration(const PhiIteration& it);

struct TraceCheck {
  bool ok = true;
  std::string what;  // first violated condition, if any
};

/// Structural facts of the correspondence, checked on one trace:
///  - top row of the initial bi-word = {L(w)+1 : w initial word, L(w) != n};
///  - for bottom-row entry x at position Y, at least Y+1 initial words
///    have last letter >= x;
///  - every iteration has host_last > pick_first;
///  - iteration count = #drops of p = descent count of the image, and the
///    descent bottom values of the image equal the aexc values of p.
TraceCheck check_trace_invariants(const Permutation& p, const PhiResult& r);

}  // namespace permstat
