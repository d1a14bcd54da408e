#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "braidrot/gauss.hpp"
#include "braidrot/loop.hpp"

using namespace braidrot;

namespace {

MarkedDiagram diagram_of(const BraidWord& w) {
  MarkedDiagram d;
  d.word = w;
  d.ids.resize(w.length());
  std::iota(d.ids.begin(), d.ids.end(), CrossingId{0});
  return d;
}

BraidWord random_knot(std::mt19937& rng, int n, int len) {
  if (len < n - 1) len = n - 1;
  if (len % 2 != (n - 1) % 2) ++len;
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (;;) {
    BraidWord w;
    w.n = n;
    for (int t = 0; t < len; ++t)
      w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
    if (is_knot(w)) return w;
  }
}

// Recompute one marking by brute force: list every crossing point in circle
// order together with the pass it lies on, then walk from the under point
// to the over point counting hand-offs between passes.
int walked_marking(const BraidWord& w, int column) {
  const int n = w.n;
  const int c = w.length();
  const Permutation rho = closure_permutation(w);
  std::vector<int> pass_of;   // per circle position
  std::vector<int> col_of;    // per circle position
  std::vector<bool> is_over;  // per circle position
  int row = 1;
  for (int k = 0; k < n; ++k) {
    int at = row;
    for (int p = 0; p < c; ++p) {
      const int i = std::abs(w.letters[p]);
      if (at != i && at != i + 1) continue;
      pass_of.push_back(k);
      col_of.push_back(p);
      is_over.push_back((w.letters[p] > 0) == (at == i));
      at = (at == i) ? i + 1 : i;
    }
    row = rho.apply(row);
  }
  const int total = 2 * c;
  int u = -1, o = -1;
  for (int q = 0; q < total; ++q) {
    if (col_of[q] != column) continue;
    (is_over[q] ? o : u) = q;
  }
  REQUIRE(u >= 0);
  REQUIRE(o >= 0);
  int seams = 0;
  for (int q = u; q != o; q = (q + 1) % total)
    if (pass_of[(q + 1) % total] != pass_of[q]) ++seams;
  return seams;
}

}  // namespace

TEST_CASE("gauss: circle layout of a two-letter closure") {
  auto g = gauss_diagram(diagram_of(parse_braid("1 2", 3)));
  REQUIRE(g.arrows.size() == 2);
  CHECK(g.points == 4);

  CHECK(g.arrows[0].over_pos == 0);
  CHECK(g.arrows[0].under_pos == 3);
  CHECK(g.arrows[0].writhe == 1);
  CHECK(g.arrows[0].marking == 1);

  CHECK(g.arrows[1].over_pos == 1);
  CHECK(g.arrows[1].under_pos == 2);
  CHECK(g.arrows[1].writhe == 1);
  CHECK(g.arrows[1].marking == 2);

  CHECK(g.at_column(1).id == 1);
  CHECK_THROWS_AS(g.at_column(2), std::out_of_range);
}

TEST_CASE("gauss: alternating four-crossing closure") {
  auto g = gauss_diagram(diagram_of(parse_braid("1 -2 1 -2", 3)));
  REQUIRE(g.arrows.size() == 4);

  const int under[] = {3, 1, 7, 5};
  const int over[] = {0, 6, 4, 2};
  const int writhe[] = {1, -1, 1, -1};
  for (int p = 0; p < 4; ++p) {
    CAPTURE(p);
    CHECK(g.arrows[p].under_pos == under[p]);
    CHECK(g.arrows[p].over_pos == over[p]);
    CHECK(g.arrows[p].writhe == writhe[p]);
    CHECK(g.arrows[p].marking == 2);
  }
}

TEST_CASE("gauss: markings agree with walking the circle") {
  std::mt19937 rng(41);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 5;
    const auto w = random_knot(rng, n, 3 + t % 9);
    auto g = gauss_diagram(diagram_of(w));
    for (int p = 0; p < w.length(); ++p) {
      CAPTURE(braid_to_string(w));
      CAPTURE(p);
      const int m = g.arrows[p].marking;
      CHECK(m >= 1);
      CHECK(m <= n - 1);
      CHECK(m == walked_marking(w, p));
    }
  }
}

TEST_CASE("gauss: switching one crossing reverses its marking") {
  std::mt19937 rng(43);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + t % 4;
    const auto w = random_knot(rng, n, 4 + t % 7);
    auto base = gauss_diagram(diagram_of(w));
    for (int p = 0; p < w.length(); ++p) {
      BraidWord v = w;
      v.letters[p] = -v.letters[p];
      auto flipped = gauss_diagram(diagram_of(v));
      CAPTURE(braid_to_string(w));
      CAPTURE(p);
      CHECK(flipped.arrows[p].marking == n - base.arrows[p].marking);
      CHECK(flipped.arrows[p].under_pos == base.arrows[p].over_pos);
      CHECK(flipped.arrows[p].over_pos == base.arrows[p].under_pos);
      for (int q = 0; q < w.length(); ++q) {
        if (q == p) continue;
        CHECK(flipped.arrows[q].marking == base.arrows[q].marking);
        CHECK(flipped.arrows[q].under_pos == base.arrows[q].under_pos);
      }
    }
  }
}

TEST_CASE("gauss: linkedness is endpoint interleaving") {
  GaussArrow a, b;
  a.under_pos = 0;
  a.over_pos = 4;
  b.under_pos = 2;
  b.over_pos = 6;
  CHECK(linked(a, b));
  CHECK(linked(b, a));
  b.over_pos = 3;  // both endpoints inside
  CHECK_FALSE(linked(a, b));
  b.under_pos = 5;
  b.over_pos = 6;  // both outside
  CHECK_FALSE(linked(a, b));
}

TEST_CASE("gauss: snapshots taken mid rotation stay well formed") {
  const auto w = parse_braid("1 -2 1 2 1 1 2 1", 3);
  const auto log = generate_rot(w, 1);
  int checked = 0;
  for (std::size_t e = 0; e < log.events.size() && checked < 6; ++e) {
    if (!std::holds_alternative<R3>(log.events[e])) continue;
    const auto snap = snapshot_at(log, static_cast<int>(e));
    auto g = gauss_diagram(snap);
    for (const auto& arrow : g.arrows) {
      CHECK(arrow.marking >= 1);
      CHECK(arrow.marking <= 2);
      CHECK(arrow.marking == walked_marking(snap.word, arrow.column));
    }
    ++checked;
  }
  CHECK(checked == 6);
}

TEST_CASE("gauss: rejects non knot closures") {
  CHECK_THROWS_AS(gauss_diagram(diagram_of(parse_braid("1 1", 2))),
                  std::invalid_argument);
}
