#include "permstat/phi_triple.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permstat/statistics.hpp"

namespace permstat {

namespace {

void sort_by_last_letter_desc(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(),
            [](const Word& a, const Word& b) { return a.last() > b.last(); });
}

std::string render_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ',';
    out << w.letters[i];
  }
  return out.str();
}

}  // namespace

std::vector<Word> initial_words(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = p.inverse();
  std::vector<Word> words{Word{{0}}};
  for (int x = 1; x <= n; ++x) {
    if (inv(x) > x) {
      words.push_back(Word{{x}});
      continue;
    }
    const int tail = inv(x) - 1;  // t(x) = p^{-1}(x) - 1
    auto it = std::find_if(words.begin(), words.end(),
                           [tail](const Word& w) { return w.last() == tail; });
    if (it == words.end())
      throw std::logic_error("no word ends in " + std::to_string(tail));
    it->letters.push_back(x);
  }
  sort_by_last_letter_desc(words);
  return words;
}

DropBiword drop_biword(const Permutation& p) {
  DropBiword bw;
  for (int i = p.size(); i >= 1; --i) {
    if (p(i) < i) {
      bw.top.push_back(i);
      bw.bottom.push_back(p(i));
    }
  }
  return bw;
}

PhiResult phi_triple(const Permutation& p) {
  std::vector<Word> words = initial_words(p);
  DropBiword bw = drop_biword(p);
  PhiTrace trace{words, bw, {}};

  while (words.size() > 1) {
    auto pick_it = std::max_element(
        words.begin(), words.end(),
        [](const Word& a, const Word& b) { return a.first() < b.first(); });
    const Word pick = *pick_it;
    words.erase(pick_it);

    auto bottom_it = std::find(bw.bottom.begin(), bw.bottom.end(), pick.first());
    if (bottom_it == bw.bottom.end())
      throw std::logic_error("first letter of the pick is not in the bottom row");
    const int rank = static_cast<int>(bottom_it - bw.bottom.begin()) + 1;

    Word& host = words[static_cast<std::size_t>(rank - 1)];
    if (host.last() <= pick.first())
      throw std::logic_error("junction inequality violated");
    trace.iterations.push_back({pick, rank, host, host.last(), pick.first()});

    host.letters.insert(host.letters.end(), pick.letters.begin(), pick.letters.end());
    bw.top.erase(bw.top.begin() + (rank - 1));
    bw.bottom.erase(bw.bottom.begin() + (rank - 1));
    sort_by_last_letter_desc(words);
  }

  const std::vector<int>& final_letters = words.front().letters;
  if (final_letters.front() != 0) throw std::logic_error("final word must start with 0");
  std::vector<int> image(final_letters.begin() + 1, final_letters.end());
  return PhiResult{Permutation(std::move(image)), std::move(trace)};
}

Permutation phi_triple_inverse(const Permutation& s) {
  const int n = s.size();
  std::vector<int> full;
  full.reserve(static_cast<std::size_t>(n) + 1);
  full.push_back(0);
  full.insert(full.end(), s.letters().begin(), s.letters().end());

  // maximal ascending runs of 0.s are the initial words of the preimage
  std::vector<Word> blocks;
  for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
    if (j == 0 || full[j] < full[j - 1]) blocks.push_back(Word{{full[j]}});
    else blocks.back().letters.push_back(full[j]);
  }

  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (std::size_t j = 0; j < full.size(); ++j)
    position[static_cast<std::size_t>(full[j])] = static_cast<int>(j);

  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  for (const Word& b : blocks)
    for (std::size_t j = 1; j < b.letters.size(); ++j)
      image[static_cast<std::size_t>(b.letters[j - 1] + 1)] = b.letters[j];

  // remaining targets: the drop positions, i.e. successors of the
  // non-maximal last letters, kept descending
  std::vector<int> targets;
  for (const Word& b : blocks)
    if (b.last() != n) targets.push_back(b.last() + 1);
  std::sort(targets.rbegin(), targets.rend());

  std::vector<int> alphas;
  for (const Word& b : blocks)
    if (b.first() != 0) alphas.push_back(b.first());
  std::sort(alphas.rbegin(), alphas.rend());

  std::vector<Word> words = blocks;
  for (int alpha : alphas) {
    const auto word_index = [&words](auto pred) {
      for (std::size_t k = 0; k < words.size(); ++k)
        if (pred(words[k])) return k;
      throw std::logic_error("expected word not found");
    };
    const std::size_t wi =
        word_index([alpha](const Word& w) { return w.first() == alpha; });
    const int prev_letter = full[static_cast<std::size_t>(position[static_cast<std::size_t>(alpha)] - 1)];
    const std::size_t ui =
        word_index([prev_letter](const Word& w) { return w.last() == prev_letter; });

    // rank of the host among the words other than the pick
    int rank = 1;
    for (std::size_t k = 0; k < words.size(); ++k)
      if (k != wi && words[k].last() > words[ui].last()) ++rank;

    image[static_cast<std::size_t>(targets[static_cast<std::size_t>(rank - 1)])] = alpha;
    targets.erase(targets.begin() + (rank - 1));

    words[ui].letters.insert(words[ui].letters.end(), words[wi].letters.begin(),
                             words[wi].letters.end());
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(wi));
  }

  return Permutation(std::vector<int>(image.begin() + 1, image.end()));
}

std::string render_iteration(const PhiIteration& it) {
  std::ostringstream out;
  out << "pick=" << render_word(it.pick) << " Y=" << it.rank
      << " host=" << render_word(it.host) << " junction=" << it.host_last << '>'
      << it.pick_first;
  return out.str();
}

TraceCheck check_trace_invariants(const Permutation& p, const PhiResult& r) {
  const auto fail = [](std::string what) { return TraceCheck{false, std::move(what)}; };

  std::vector<int> expected_top;
  for (const Word& w : r.trace.initial_words)
    if (w.last() != p.size()) expected_top.push_back(w.last() + 1);
  if (r.trace.initial_biword.top != expected_top)
    return fail("top row differs from the successors of the non-maximal last letters");

  const std::vector<int>& bottom = r.trace.initial_biword.bottom;
  for (std::size_t j = 0; j < bottom.size(); ++j) {
    int count = 0;
    for (const Word& w : r.trace.initial_words)
      if (w.last() >= bottom[j]) ++count;
    if (count < static_cast<int>(j) + 2)
      return fail("fewer than Y+1 words end at or above bottom entry " +
                  std::to_string(bottom[j]));
  }

  for (const PhiIteration& it : r.trace.iterations) {
    if (it.host_last <= it.pick_first)
      return fail("junction " + std::to_string(it.host_last) + ">" +
                  std::to_string(it.pick_first) + " violated");
  }

  const CyclicStats cs = cyclic_stats(p);
  const LinearStats ls = linear_stats(r.image);
  if (r.trace.iterations.size() != cs.drop_positions.size())
    return fail("iteration count differs from the number of drops");
  if (ls.des_positions.size() != cs.drop_positions.size())
    return fail("image descent count differs from the number of drops");
  if (ls.des_values != cs.aexc_values)
    return fail("image descent bottoms differ from the aexc values");

  return TraceCheck{};
}

}  // namespace permstat
