#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "braidrot/loop.hpp"
#include "braidrot/trace.hpp"

using namespace braidrot;

namespace {

EventLog rot_of(const char* word, int n, int l = 1) {
  return generate_rot(parse_braid(word, n), l);
}

BraidWord random_knot(std::mt19937& rng, int n, int len) {
  if (len < n - 1) len = n - 1;
  if (len % 2 != (n - 1) % 2) ++len;
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (;;) {
    BraidWord w;
    w.n = n;
    for (int i = 0; i < len; ++i) {
      int g = idx(rng);
      w.letters.push_back(sgn(rng) ? g : -g);
    }
    if (is_knot(w)) return w;
  }
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

// a two-crossing knot word pushed through the braid relation and back:
// the two triple points form a trihedron with direct, winding-free edges
EventLog trihedron_pair_log() {
  EventLog log;
  log.initial.word = parse_braid("1 2", 3);
  log.initial.ids = {10, 20};
  log.events = {
      R2Plus{2, {30, 40}, {1, -1}},
      R3{0, {10, 20, 30}, {1, 2, 1}, {2, 1, 2}},
      R3{0, {30, 20, 10}, {2, 1, 2}, {1, 2, 1}},
      R2Minus{2, {30, 40}},
  };
  log.l = 1;
  return log;
}

}  // namespace

TEST_CASE("triple node census of small loops") {
  TraceGraph g2 = build_trace(rot_of("1", 2));
  CHECK(g2.triple_count() == 0);
  TraceGraph g3 = build_trace(rot_of("2 -1", 3));
  CHECK(g3.triple_count() == 4);
  CHECK(g3.triple_count() == rot_of("2 -1", 3).r3_count());
}

TEST_CASE("arcs partition into circles") {
  TraceGraph g = build_trace(rot_of("2 -1", 3));
  const auto circles = trace_circles(g);
  size_t covered = 0;
  for (const auto& c : circles) covered += c.members.size();
  CHECK(covered == g.arcs.size());
  for (const auto& a : g.arcs) CHECK(a.circle >= 0);
  for (const auto& c : circles) {
    const bool positive = c.torus_class.first > 0 ||
                          (c.torus_class.first == 0 && c.torus_class.second >= 0);
    CHECK(positive);
  }
}

TEST_CASE("one rotation yields one circle per marking") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord w = random_knot(rng, n, 3 + trial % 9);
    TraceGraph g = build_trace(generate_rot(w, 1));
    const auto circles = trace_circles(g);
    REQUIRE(static_cast<int>(circles.size()) == n - 1);
    std::set<int> markings;
    for (const auto& c : circles) markings.insert(c.marking);
    CHECK(static_cast<int>(markings.size()) == n - 1);
    CHECK(*markings.begin() == 1);
    CHECK(*markings.rbegin() == n - 1);
  }
}

TEST_CASE("two rotations of the alternating 3-braid split into four circles") {
  TraceGraph g = build_trace(rot_of("2 -1 2 -1", 3, 2));
  const auto circles = trace_circles(g);
  REQUIRE(circles.size() == 4);
  std::vector<int> markings;
  for (const auto& c : circles) markings.push_back(c.marking);
  std::sort(markings.begin(), markings.end());
  CHECK(markings == std::vector<int>{1, 1, 2, 2});

  // all four starting crossings lie on one circle, their one-rotation
  // shifts on another of the same marking
  std::set<int> start, shifted;
  for (const CrossingId id : g.seam_start) {
    start.insert(circle_of(g, id));
    shifted.insert(circle_of(g, g.deck.at(id)));
  }
  REQUIRE(start.size() == 1);
  REQUIRE(shifted.size() == 1);
  CHECK(*start.begin() != *shifted.begin());
  CHECK(circles[*start.begin()].marking == circles[*shifted.begin()].marking);

  const auto perm = circle_monodromy(g, circles);
  for (size_t i = 0; i < perm.size(); ++i) {
    CHECK(perm[i] != static_cast<int>(i));
    CHECK(circles[perm[i]].marking == circles[i].marking);
    CHECK(perm[perm[i]] == static_cast<int>(i));
  }
}

TEST_CASE("single-crossing loop has trivial monodromy") {
  TraceGraph g = build_trace(rot_of("1", 2));
  const auto circles = trace_circles(g);
  REQUIRE(circles.size() == 1);
  const auto perm = circle_monodromy(g, circles);
  CHECK(perm == std::vector<int>{0});
  CHECK(crossing_monodromy(parse_braid("1", 2)).size() == 1);
}

TEST_CASE("crossing monodromy iterates to the closure identification") {
  std::mt19937 rng(11);
  int survivors = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = random_knot(rng, n, 4 + trial);
    const auto perm = crossing_monodromy(w);
    REQUIRE(perm.size() == w.letters.size());

    // crossings whose id lives through all l rotations must land where the
    // iterated survivor map sends them
    for (const int l : {1, 2, 3}) {
      const EventLog log = generate_rot(w, l);
      const MarkedDiagram fin = replay(log).back();
      for (size_t p = 0; p < perm.size(); ++p) {
        const auto it =
            std::find(fin.ids.begin(), fin.ids.end(), log.initial.ids[p]);
        if (it == fin.ids.end()) continue;
        ++survivors;
        int q = static_cast<int>(p);
        for (int k = 0; k < l && q >= 0; ++k) q = perm[q];
        CHECK(q == static_cast<int>(it - fin.ids.begin()));
      }
    }
  }
  CHECK(survivors > 0);
}

TEST_CASE("circle monodromy preserves markings and has order dividing l") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = random_knot(rng, n, 4 + trial % 5);
    const int l = 2 + trial % 2;
    TraceGraph g = build_trace(generate_rot(w, l));
    const auto circles = trace_circles(g);
    const auto perm = circle_monodromy(g, circles);
    std::vector<int> p(perm.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    for (int k = 0; k < l; ++k) p = compose(perm, p);
    for (size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] == static_cast<int>(i));
      CHECK(circles[perm[i]].marking == circles[i].marking);
    }
  }
}

TEST_CASE("three rotations of the eight-crossing braid give six circles") {
  TraceGraph g = build_trace(rot_of("-1 2 -1 -1 -1 2 2 2", 3, 3));
  const auto circles = trace_circles(g);
  REQUIRE(circles.size() == 6);
  int m1 = 0, m2 = 0;
  for (const auto& c : circles) {
    if (c.marking == 1) ++m1;
    if (c.marking == 2) ++m2;
  }
  CHECK(m1 == 3);
  CHECK(m2 == 3);
}

TEST_CASE("no generalized trihedrons on the two-crossing loop") {
  TraceGraph g = build_trace(rot_of("2 -1", 3));
  const ESet e = detect_generalized_trihedrons(g);
  CHECK(e.pairing.empty());
  CHECK(e.members.size() == 4);

  int minus_pos = 0, minus_neg = 0, plus_pos = 0, plus_neg = 0;
  for (const int v : e.members) {
    const TraceNode& nd = g.nodes[v];
    if (!nd.plus_type && nd.a == 1 && nd.b == 1)
      (nd.sign > 0 ? minus_pos : minus_neg) += 1;
    if (nd.plus_type && nd.a == 2 && nd.b == 2)
      (nd.sign > 0 ? plus_pos : plus_neg) += 1;
  }
  CHECK(minus_pos == 1);
  CHECK(minus_neg == 1);
  CHECK(plus_pos == 1);
  CHECK(plus_neg == 1);
}

TEST_CASE("a directly connected opposite pair is matched") {
  const EventLog log = trihedron_pair_log();
  TraceGraph g = build_trace(log);
  CHECK(g.triple_count() == 2);
  int sign_sum = 0;
  for (const auto& nd : g.nodes)
    if (nd.kind == TraceNode::Kind::triple) sign_sum += nd.sign;
  CHECK(sign_sum == 0);

  const ESet e = detect_generalized_trihedrons(g);
  CHECK(e.members.empty());
  REQUIRE(e.pairing.size() == 1);
}

TEST_CASE("trihedron count is stable under conjugation") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const BraidWord w = random_knot(rng, 3, 5 + trial);
    std::uniform_int_distribution<int> idx(1, 2);
    std::uniform_int_distribution<int> sgn(0, 1);
    const int u = sgn(rng) ? idx(rng) : -idx(rng);
    const BraidWord v = conjugate(w, BraidWord{3, {u}});
    for (const int l : {1, 2}) {
      TraceGraph ga = build_trace(generate_rot(w, l));
      TraceGraph gb = build_trace(generate_rot(v, l));
      const ESet ea = detect_generalized_trihedrons(ga);
      const ESet eb = detect_generalized_trihedrons(gb);
      CHECK(ea.members.size() == eb.members.size());
    }
  }
}
