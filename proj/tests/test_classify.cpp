#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "braidrot/classify.hpp"
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

R3 move_at(const MarkedDiagram& d, int p) {
  std::array<int, 3> before{d.word.letters[p], d.word.letters[p + 1],
                            d.word.letters[p + 2]};
  return R3{p,
            {d.ids[p], d.ids[p + 1], d.ids[p + 2]},
            before,
            r3_rewrite(before[0], before[1], before[2])};
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

}  // namespace

TEST_CASE("classify: expanding triangle with one negative crossing") {
  const auto d = diagram_of(parse_braid("1 2 -2 1 2 1 2 1", 3));
  const auto ev = classify_triple(d, move_at(d, 2), 7);

  CHECK(ev.event_index == 7);
  CHECK(ev.position == 2);
  CHECK(ev.plus_type);
  CHECK(ev.col_ml == 2);
  CHECK(ev.col_hm == 3);
  CHECK(ev.col_hl == 4);
  CHECK(ev.id_ml == 2);
  CHECK(ev.id_hm == 3);
  CHECK(ev.id_hl == 4);
  CHECK(ev.marking_ml == 2);
  CHECK(ev.marking_hm == 2);
  CHECK(ev.marking_hl == 1);
  CHECK(ev.writhe_ml == -1);
  CHECK(ev.writhe_hm == 1);
  CHECK(ev.sign == -1);
  CHECK(ev.a == 2);
  CHECK(ev.b == 2);
  CHECK(ev.corner_l == 15);
  CHECK(ev.corner_m == 5);
  CHECK(ev.corner_h == 25);
}

TEST_CASE("classify: expanding triangle with all positive crossings") {
  const auto d = diagram_of(parse_braid("1 2 1 2 1 2 1 -2", 3));
  const auto ev = classify_triple(d, move_at(d, 3), 0);

  CHECK(ev.plus_type);
  CHECK(ev.col_ml == 3);
  CHECK(ev.col_hm == 5);
  CHECK(ev.col_hl == 4);
  CHECK(ev.marking_ml == 2);
  CHECK(ev.marking_hm == 2);
  CHECK(ev.marking_hl == 1);
  CHECK(ev.writhe_ml == 1);
  CHECK(ev.writhe_hm == 1);
  CHECK(ev.sign == 1);
  CHECK(ev.corner_l == 5);
  CHECK(ev.corner_m == 27);
  CHECK(ev.corner_h == 17);
}

TEST_CASE("classify: marking identities hold across whole rotations") {
  std::mt19937 rng(59);
  for (int t = 0; t < 12; ++t) {
    const int n = 3 + t % 4;
    const auto w = random_knot(rng, n, 3 + t % 6);
    const auto log = generate_rot(w, 1);
    const auto moves = classify_all(log);
    CHECK(static_cast<int>(moves.size()) == 2 * w.length() * (n - 2));
    for (const auto& ev : moves) {
      CAPTURE(braid_to_string(w));
      CAPTURE(ev.event_index);
      const std::set<int> cols{ev.col_ml, ev.col_hm, ev.col_hl};
      CHECK(cols ==
            std::set<int>{ev.position, ev.position + 1, ev.position + 2});
      CHECK((ev.sign == 1 || ev.sign == -1));
      CHECK(ev.marking_ml >= 1);
      CHECK(ev.marking_ml <= n - 1);
      CHECK(ev.marking_hm >= 1);
      CHECK(ev.marking_hm <= n - 1);
      if (ev.plus_type) {
        CHECK(ev.marking_ml + ev.marking_hm >= n + 1);
        CHECK(ev.marking_hl == ev.marking_ml + ev.marking_hm - n);
      } else {
        CHECK(ev.marking_ml + ev.marking_hm <= n - 1);
        CHECK(ev.marking_hl == ev.marking_ml + ev.marking_hm);
      }
      const std::set<int> corners{ev.corner_l, ev.corner_m, ev.corner_h};
      CHECK(corners.size() == 3);
      for (int corner : corners) CHECK(corner % 2 == 1);
    }
  }
}

TEST_CASE("classify: coordinate order follows the convention switches") {
  const auto d = diagram_of(parse_braid("1 2 -2 1 2 1 2 1", 3));
  Conventions conv;
  conv.kappa_plus = -1;
  conv.plus_swaps_ab = false;
  const auto ev = classify_triple(d, move_at(d, 2), 0, conv);
  CHECK(ev.sign == 1);
  CHECK(ev.a == ev.marking_ml);
  CHECK(ev.b == ev.marking_hm);
}

TEST_CASE("classify: rejects moves that do not fit the diagram") {
  const auto d = diagram_of(parse_braid("1 2 1 2 1 2 1 -2", 3));
  auto mv = move_at(d, 3);
  mv.before[0] = -mv.before[0];
  CHECK_THROWS_AS(classify_triple(d, mv, 0), std::logic_error);
  auto mv2 = move_at(d, 3);
  mv2.ids[1] = 99;
  CHECK_THROWS_AS(classify_triple(d, mv2, 0), std::logic_error);
}
