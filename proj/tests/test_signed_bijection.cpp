#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "permstat/enumerate.hpp"
#include "permstat/permutation.hpp"
#include "permstat/signed_bijection.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

namespace {

Permutation twist12(const Permutation& p) { return left_adjacent_transposition(p, 1); }

int nexc(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) < i) ++c;
  return c;
}

int des_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("classify by first letter") {
  CHECK(classify(Permutation({1, 4, 2, 5, 3})) == CaseLabel::A1);
  CHECK(classify(Permutation({2, 1})) == CaseLabel::A2);
  CHECK(classify(Permutation({8, 9, 1, 6, 2, 4, 3, 7, 5})) == CaseLabel::B);
}

TEST_CASE("foata map on the worked example") {
  CHECK(foata_map(Permutation({8, 9, 1, 6, 2, 4, 3, 7, 5})) ==
        Permutation({8, 7, 3, 1, 9, 5, 2, 6, 4}));
  CHECK(foata_map(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(foata_map(Permutation({3, 2, 1})) == Permutation({3, 1, 2}));
}

TEST_CASE("foata map inverse") {
  CHECK(foata_map_inverse(Permutation({8, 7, 3, 1, 9, 5, 2, 6, 4})) ==
        Permutation({8, 9, 1, 6, 2, 4, 3, 7, 5}));
  CHECK(foata_map_inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(foata_map_inverse(Permutation({3, 1, 2})) == Permutation({3, 2, 1}));
}

TEST_CASE("foata roundtrip, statistic transport, first letter") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : SnRange(n)) {
      const Permutation v = foata_map(w);
      CHECK(foata_map_inverse(v) == w);
      CHECK(v.first_letter() == w.first_letter());
      CHECK(des_count(v) == nexc(w));
      CHECK(drp(v) == depth(w));
    }
  }
}

TEST_CASE("foata commutes with the (1,2) twist on B") {
  for (const Permutation& w : SnRange(6)) {
    if (classify(w) != CaseLabel::B) continue;
    const Permutation tw = twist12(w);
    CHECK(classify(tw) == CaseLabel::B);
    CHECK(foata_map(tw) == twist12(foata_map(w)));
    CHECK(depth(tw) == depth(w));
    CHECK(drp(tw) == drp(w));
  }
}

TEST_CASE("phi tilde repairs sign and keeps the first letter") {
  CHECK(phi_tilde(Permutation({3, 1, 2})) == Permutation({3, 1, 2}));
  CHECK(phi_tilde(Permutation({3, 2, 1})) == Permutation({3, 2, 1}));
  // worked example: signs of source and foata image must be compared
  {
    const Permutation w({8, 9, 1, 6, 2, 4, 3, 7, 5});
    const Permutation v = foata_map(w);
    const Permutation expected = sign(v) == sign(w) ? v : twist12(v);
    CHECK(phi_tilde(w) == expected);
  }
  CHECK_THROWS_AS(phi_tilde(Permutation({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(phi_tilde(Permutation({2, 1, 3})), std::domain_error);

  for (const Permutation& w : SnRange(6)) {
    if (classify(w) != CaseLabel::B) continue;
    const Permutation v = phi_tilde(w);
    CHECK(sign(v) == sign(w));
    CHECK(v.first_letter() == w.first_letter());
    CHECK(drp(v) == depth(w));
  }
}

TEST_CASE("phi tilde with equal signs returns the foata image untouched") {
  for (const Permutation& w : SnRange(5)) {
    if (classify(w) != CaseLabel::B) continue;
    const Permutation v = foata_map(w);
    if (sign(v) == sign(w)) CHECK(phi_tilde(w) == v);
  }
}

TEST_CASE("psi1 on worked cases") {
  CHECK(psi1(Permutation({1, 4, 2, 5, 3})) == Permutation({1, 4, 5, 3, 2}));
  CHECK(psi1(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(psi1(Permutation({1, 3, 2})) == Permutation({1, 3, 2}));
  CHECK_THROWS_AS(psi1(Permutation({2, 1})), std::domain_error);
}

TEST_CASE("psi1 trail is strictly increasing and sign-neutral overall") {
  for (const Permutation& w : SnRange(6)) {
    if (classify(w) != CaseLabel::A1) continue;
    TranspositionTrail trail;
    const Permutation v = psi1(w, &trail);
    for (std::size_t j = 1; j < trail.indices.size(); ++j)
      CHECK(trail.indices[j - 1] < trail.indices[j]);
    CHECK(sign(v) == sign(w));
    CHECK(v.first_letter() == 1);
    CHECK(drp(v) == depth(w));
  }
}

TEST_CASE("psi2 on worked cases") {
  CHECK(psi2(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(psi2(Permutation({2, 1, 3})) == Permutation({2, 1, 3}));
  CHECK(psi2(Permutation({2, 4, 1, 3})) == Permutation({2, 4, 1, 3}));
  CHECK_THROWS_AS(psi2(Permutation({1, 2})), std::domain_error);

  for (const Permutation& w : SnRange(6)) {
    if (classify(w) != CaseLabel::A2) continue;
    const Permutation v = psi2(w);
    CHECK(sign(v) == sign(w));
    CHECK(v.first_letter() == 2);
    CHECK(drp(v) == depth(w));
  }
}

TEST_CASE("f dispatches by class") {
  CHECK(f_map(Permutation({3, 1, 2})) == Permutation({3, 1, 2}));
  CHECK(f_map(Permutation({1, 4, 2, 5, 3})) == Permutation({1, 4, 5, 3, 2}));
  CHECK(f_map(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(f_map(Permutation({1})) == Permutation({1}));
}

TEST_CASE("f is a sign- and first-letter-preserving bijection carrying depth to drp") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for (const Permutation& w : SnRange(n)) {
      const Permutation v = f_map(w);
      CHECK(sign(v) == sign(w));
      CHECK(v.first_letter() == w.first_letter());
      CHECK(drp(v) == depth(w));
      images.insert(v.letters());
    }
    CHECK(images.size() == factorial(n));
  }
}

TEST_CASE("f restricted to the alternating group hits every even permutation") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for (const Permutation& w : SnRange(n)) {
      if (sign(w) != 1) continue;
      const Permutation v = f_map(w);
      CHECK(sign(v) == 1);
      CHECK(drp(v) == depth(w));
      images.insert(v.letters());
    }
    CHECK(images.size() == factorial(n) / 2);
  }
}
