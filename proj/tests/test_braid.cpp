#include "braidrot/braid.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace braidrot;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  BraidWord w;
  w.n = n;
  for (int t = 0; t < len; ++t) w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
  return w;
}

}  // namespace

TEST_CASE("braid: parsing") {
  auto w = parse_braid("1 -2 1 -2", 3);
  CHECK(w.n == 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(braid_to_string(w) == "1 -2 1 -2");
  CHECK(parse_braid("", 2).letters.empty());

  CHECK_THROWS_AS((void)parse_braid("0", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_braid("3", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_braid("-3", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_braid("1 x", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_braid("1", 1), std::invalid_argument);
}

TEST_CASE("braid: closure permutation against hand composition") {
  // 1 -2 1 -2 on three strands: transpositions (12)(23)(12)(23) move the
  // strand starting at row 1 to row 2, 2 to 3, and 3 to 1.
  auto p = closure_permutation(parse_braid("1 -2 1 -2", 3));
  CHECK(p.images == std::vector<int>{2, 3, 1});
  CHECK(p.is_single_cycle());
  CHECK(is_knot(parse_braid("1 -2 1 -2", 3)));

  // 2 -1 on three strands: (23)(12) sends 1 to 2, 2 to 3, 3 to 1.
  auto q = closure_permutation(parse_braid("2 -1", 3));
  CHECK(q.images == std::vector<int>{2, 3, 1});
  CHECK(is_knot(parse_braid("2 -1", 3)));

  // A pure braid closes to an n-component link, not a knot.
  CHECK_FALSE(is_knot(parse_braid("1 1", 2)));
  CHECK(is_knot(parse_braid("1", 2)));
  CHECK(is_knot(parse_braid("1 -2 -3", 4)));
}

TEST_CASE("braid: permutation algebra") {
  auto p = closure_permutation(parse_braid("1 2", 3));
  CHECK(p.compose_after(p.inverse()).is_identity());
  CHECK(Permutation::identity(4).is_identity());
  CHECK_FALSE(Permutation::identity(3).is_single_cycle());

  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto w = random_word(rng, 4, 6);
    auto u = random_word(rng, 4, 5);
    BraidWord uw = u;
    uw.letters.insert(uw.letters.end(), w.letters.begin(), w.letters.end());
    // permutations compose along concatenation
    CHECK(closure_permutation(uw) ==
          closure_permutation(w).compose_after(closure_permutation(u)));
  }
}

TEST_CASE("braid: half-twist word") {
  CHECK(delta_word(2).letters == std::vector<int>{1});
  CHECK(delta_word(3).letters == std::vector<int>{1, 2, 1});
  CHECK(delta_word(4).letters == std::vector<int>{1, 2, 3, 1, 2, 1});
  for (int n = 2; n <= 8; ++n) {
    auto d = delta_word(n);
    CHECK(d.length() == n * (n - 1) / 2);
    auto p = closure_permutation(d);
    for (int i = 1; i <= n; ++i) CHECK(p.apply(i) == n + 1 - i);
  }
}

TEST_CASE("braid: reverse, flip, conjugate, rotate") {
  auto w = parse_braid("1 -2 3", 4);
  CHECK(reverse(w).letters == std::vector<int>{3, -2, 1});
  CHECK(flip(w).letters == std::vector<int>{3, -2, 1});
  CHECK(flip(flip(w)) == w);
  CHECK(reverse(reverse(w)) == w);

  auto u = parse_braid("2 -1", 4);
  CHECK(conjugate(w, u).letters == std::vector<int>{2, -1, 1, -2, 3, 1, -2});
  CHECK(rotate(w, 1).letters == std::vector<int>{-2, 3, 1});
  CHECK(rotate(w, -1).letters == std::vector<int>{3, 1, -2});
  CHECK(rotate(w, 3) == w);

  // conjugation and rotation preserve the closure's knot property
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto v = random_word(rng, 5, 7);
    auto g = random_word(rng, 5, 4);
    CHECK(is_knot(conjugate(v, g)) == is_knot(v));
    CHECK(is_knot(rotate(v, 3)) == is_knot(v));
  }
}

TEST_CASE("braid: cabling doubles strands as rigid ribbons") {
  auto c = cable(parse_braid("1", 2), 2, false);
  CHECK(c.n == 4);
  CHECK(c.letters == std::vector<int>{2, 1, 3, 2});
  // the two bundles cross in parallel: rows 1,2 go to 3,4 keeping order
  CHECK(closure_permutation(c).images == std::vector<int>{3, 4, 1, 2});

  auto neg = cable(parse_braid("-1", 2), 2, false);
  CHECK(neg.letters == std::vector<int>{-2, -1, -3, -2});

  auto tw = cable(parse_braid("1", 2), 2, true);
  CHECK(tw.letters == std::vector<int>{2, 1, 3, 2, 1, 2, 3});
  CHECK(is_knot(tw));

  // blown-up permutation oracle: bundle b of w lands where w sends it,
  // order-preserving inside the bundle
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 3;
    int k = 2 + t % 2;
    auto w = random_word(rng, n, 5);
    auto cw = cable(w, k, false);
    CHECK(cw.length() == k * k * w.length());
    auto base = closure_permutation(w);
    auto blown = closure_permutation(cw);
    for (int s = 1; s <= n; ++s)
      for (int j = 1; j <= k; ++j)
        CHECK(blown.apply((s - 1) * k + j) == (base.apply(s) - 1) * k + j);
  }
}
