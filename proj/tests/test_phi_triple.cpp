#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "permstat/enumerate.hpp"
#include "permstat/permutation.hpp"
#include "permstat/phi_triple.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

namespace {

std::vector<Word> words_of(std::vector<std::vector<int>> ls) {
  std::vector<Word> out;
  for (auto& v : ls) out.push_back(Word{std::move(v)});
  return out;
}

}  // namespace

TEST_CASE("initial words of the worked example") {
  CHECK(initial_words(Permutation({4, 5, 3, 1, 6, 2})) ==
        words_of({{0, 4, 6}, {1, 5}, {2, 3}}));
  CHECK(initial_words(Permutation::identity(4)) == words_of({{0, 1, 2, 3, 4}}));
  CHECK(initial_words(Permutation({2, 3, 1})) == words_of({{1, 3}, {0, 2}}));
}

TEST_CASE("drop bi-word") {
  const DropBiword bw = drop_biword(Permutation({4, 5, 3, 1, 6, 2}));
  CHECK(bw.top == std::vector<int>{6, 4});
  CHECK(bw.bottom == std::vector<int>{2, 1});

  CHECK(drop_biword(Permutation::identity(4)).columns() == 0);

  const DropBiword bw3 = drop_biword(Permutation({2, 3, 1}));
  CHECK(bw3.top == std::vector<int>{3});
  CHECK(bw3.bottom == std::vector<int>{1});
}

TEST_CASE("drop bi-word columns are drops of p") {
  for (const Permutation& p : SnRange(6)) {
    const DropBiword bw = drop_biword(p);
    for (int j = 0; j < bw.columns(); ++j) {
      CHECK(bw.top[j] > bw.bottom[j]);
      CHECK(p(bw.top[j]) == bw.bottom[j]);
      if (j + 1 < bw.columns()) CHECK(bw.top[j] > bw.top[j + 1]);
    }
  }
}

TEST_CASE("phi on the worked example, with trace") {
  const PhiResult r = phi_triple(Permutation({4, 5, 3, 1, 6, 2}));
  CHECK(r.image == Permutation({4, 6, 2, 3, 1, 5}));
  CHECK(r.trace.initial_words == words_of({{0, 4, 6}, {1, 5}, {2, 3}}));
  CHECK(r.trace.initial_biword.top == std::vector<int>{6, 4});
  CHECK(r.trace.initial_biword.bottom == std::vector<int>{2, 1});
  REQUIRE(r.trace.iterations.size() == 2);
  CHECK(r.trace.iterations[0].pick == Word{{2, 3}});
  CHECK(r.trace.iterations[0].rank == 1);
  CHECK(r.trace.iterations[0].host == Word{{0, 4, 6}});
  CHECK(render_iteration(r.trace.iterations[0]) == "pick=2,3 Y=1 host=0,4,6 junction=6>2");
  CHECK(r.trace.iterations[1].pick == Word{{1, 5}});
  CHECK(r.trace.iterations[1].rank == 1);
  CHECK(r.trace.iterations[1].host == Word{{0, 4, 6, 2, 3}});
  CHECK(render_iteration(r.trace.iterations[1]) == "pick=1,5 Y=1 host=0,4,6,2,3 junction=3>1");
}

TEST_CASE("phi fixed points and small cases") {
  CHECK(phi_triple(Permutation::identity(5)).image == Permutation::identity(5));
  CHECK(phi_triple(Permutation::identity(5)).trace.iterations.empty());
  CHECK(phi_triple(Permutation({2, 3, 1})).image == Permutation({2, 1, 3}));
  CHECK(phi_triple(Permutation({1})).image == Permutation({1}));
}

TEST_CASE("phi inverse on the worked example and small cases") {
  CHECK(phi_triple_inverse(Permutation({4, 6, 2, 3, 1, 5})) ==
        Permutation({4, 5, 3, 1, 6, 2}));
  CHECK(phi_triple_inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(phi_triple_inverse(Permutation({2, 1, 3})) == Permutation({2, 3, 1}));
}

TEST_CASE("phi roundtrips and is injective over small symmetric groups") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for (const Permutation& p : SnRange(n)) {
      const PhiResult r = phi_triple(p);
      CHECK(phi_triple_inverse(r.image) == p);
      images.insert(r.image.letters());
    }
    CHECK(images.size() == factorial(n));
  }
  // the other composition order, spot-checked across S_5
  for (const Permutation& s : SnRange(5))
    CHECK(phi_triple(phi_triple_inverse(s)).image == s);
}

TEST_CASE("phi transports the hatted triple onto the linear triple") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : SnRange(n)) {
      const CyclicStats cs = cyclic_stats(p);
      const LinearStats ls = linear_stats(phi_triple(p).image);
      CHECK(ls.asc2_values == cs.exc_hat_values);
      CHECK(ls.des_values == cs.aexc_values);
      CHECK(ls.suc_values == cs.fix_hat_values);
    }
  }
}

TEST_CASE("trace invariants hold for every permutation") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : SnRange(n)) {
      const PhiResult r = phi_triple(p);
      const TraceCheck tc = check_trace_invariants(p, r);
      INFO(to_string(p), ": ", tc.what);
      CHECK(tc.ok);
    }
  }
}

TEST_CASE("top row of the bi-word lists the successor of each non-maximal last letter") {
  for (const Permutation& p : SnRange(6)) {
    const std::vector<Word> words = initial_words(p);
    std::vector<int> expected;
    for (const Word& w : words)
      if (w.last() != p.size()) expected.push_back(w.last() + 1);
    // words are sorted by decreasing last letter, so expected is descending
    CHECK(drop_biword(p).top == expected);
  }
}

TEST_CASE("bottom-row availability: entry at position Y has Y+1 words ending at or above it") {
  for (const Permutation& p : SnRange(6)) {
    const std::vector<Word> words = initial_words(p);
    const DropBiword bw = drop_biword(p);
    for (int j = 0; j < bw.columns(); ++j) {
      const int x = bw.bottom[j];
      int count = 0;
      for (const Word& w : words)
        if (w.last() >= x) ++count;
      CHECK(count >= j + 2);  // Y = j + 1
    }
  }
}

TEST_CASE("iteration count matches drops and image descents") {
  for (const Permutation& p : SnRange(6)) {
    const PhiResult r = phi_triple(p);
    const CyclicStats cs = cyclic_stats(p);
    const LinearStats ls = linear_stats(r.image);
    CHECK(r.trace.iterations.size() == cs.drop_positions.size());
    CHECK(r.trace.iterations.size() == ls.des_positions.size());
    for (const PhiIteration& it : r.trace.iterations) CHECK(it.host_last > it.pick_first);
  }
}
