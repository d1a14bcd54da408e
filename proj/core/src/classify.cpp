#include "braidrot/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>

namespace braidrot {
namespace {

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("triple classification: " + what);
}

}  // namespace

TripleEvent classify_triple(const MarkedDiagram& before, const R3& move,
                            int event_index, const Conventions& conv) {
  const int p = move.position;
  const auto& w = before.word.letters;
  if (p < 0 || p + 2 >= before.length()) bug("move position out of range");
  for (int t = 0; t < 3; ++t) {
    if (w[p + t] != move.before[t]) bug("move letters do not match diagram");
    if (before.ids[p + t] != move.ids[t]) bug("move ids do not match diagram");
  }

  TripleEvent ev;
  ev.event_index = event_index;
  ev.position = p;
  ev.gauss = gauss_diagram(before);

  // Strands a, b, c enter the triangle at rows i, i+1, i+2. The row pattern
  // of the three letters fixes which pair meets at each column and which of
  // the two sits on the lower row there.
  const int i = std::min(std::abs(w[p]), std::abs(w[p + 1]));
  const bool low_first = std::abs(w[p]) == i;
  struct Pair {
    int lower, upper;
  };
  Pair parts[3];
  if (low_first) {
    parts[0] = {0, 1};
    parts[1] = {0, 2};
    parts[2] = {1, 2};
  } else {
    parts[0] = {1, 2};
    parts[1] = {0, 2};
    parts[2] = {0, 1};
  }

  int over_count[3] = {0, 0, 0};
  int over_at[3];
  for (int t = 0; t < 3; ++t) {
    over_at[t] = w[p + t] > 0 ? parts[t].lower : parts[t].upper;
    ++over_count[over_at[t]];
  }
  // a strand over both others is highest, over one is middle, over none is
  // lowest; counts must come out pairwise distinct
  int strand_at[3] = {-1, -1, -1};  // height -> strand
  for (int s = 0; s < 3; ++s) {
    const int h = over_count[s];
    if (h < 0 || h > 2 || strand_at[h] != -1) bug("height order broke");
    strand_at[h] = s;
  }

  int col_pair[3][3];
  for (int t = 0; t < 3; ++t) {
    col_pair[parts[t].lower][parts[t].upper] = p + t;
    col_pair[parts[t].upper][parts[t].lower] = p + t;
  }
  const int low = strand_at[0], mid = strand_at[1], high = strand_at[2];
  ev.col_ml = col_pair[mid][low];
  ev.col_hm = col_pair[high][mid];
  ev.col_hl = col_pair[high][low];

  const GaussArrow& ml = ev.gauss.at_column(ev.col_ml);
  const GaussArrow& hm = ev.gauss.at_column(ev.col_hm);
  const GaussArrow& hl = ev.gauss.at_column(ev.col_hl);
  ev.id_ml = ml.id;
  ev.id_hm = hm.id;
  ev.id_hl = hl.id;
  ev.marking_ml = ml.marking;
  ev.marking_hm = hm.marking;
  ev.marking_hl = hl.marking;
  ev.writhe_ml = ml.writhe;
  ev.writhe_hm = hm.writhe;
  ev.writhe_hl = hl.writhe;

  // Each strand meets the other two at consecutive circle points; its
  // corner is the gap between them.
  int corner_of[3];
  for (int s = 0; s < 3; ++s) {
    int pts[2];
    int found = 0;
    for (int t = 0; t < 3; ++t) {
      if (parts[t].lower != s && parts[t].upper != s) continue;
      const GaussArrow& arrow = ev.gauss.at_column(p + t);
      pts[found++] = over_at[t] == s ? arrow.over_pos : arrow.under_pos;
    }
    if (found != 2) bug("strand not on two crossings");
    if (std::abs(pts[0] - pts[1]) != 1) bug("corner points not adjacent");
    corner_of[s] = 2 * std::min(pts[0], pts[1]) + 1;
  }
  ev.corner_l = corner_of[low];
  ev.corner_m = corner_of[mid];
  ev.corner_h = corner_of[high];

  // Walking forward from the low corner, meeting the mid corner first makes
  // the triangle the contracting kind, meeting the high corner first the
  // expanding kind; the marking of the high-low crossing must agree.
  const int modulus = 2 * ev.gauss.points;
  const auto ahead = [&](int from, int to) {
    int d = (to - from) % modulus;
    return d < 0 ? d + modulus : d;
  };
  ev.plus_type =
      ahead(ev.corner_l, ev.corner_m) > ahead(ev.corner_l, ev.corner_h);
  const int n = before.word.n;
  if (ev.plus_type) {
    if (ev.marking_hl != ev.marking_ml + ev.marking_hm - n)
      bug("marking identity failed for an expanding triangle");
  } else {
    if (ev.marking_hl != ev.marking_ml + ev.marking_hm)
      bug("marking identity failed for a contracting triangle");
  }

  if (ev.plus_type) {
    ev.a = conv.plus_swaps_ab ? ev.marking_hm : ev.marking_ml;
    ev.b = conv.plus_swaps_ab ? ev.marking_ml : ev.marking_hm;
    const int j = ev.col_ml < ev.col_hm ? 1 : -1;
    ev.sign = conv.kappa_plus * ev.writhe_ml * ev.writhe_hm * j;
  } else {
    ev.a = conv.minus_swaps_ab ? ev.marking_hm : ev.marking_ml;
    ev.b = conv.minus_swaps_ab ? ev.marking_ml : ev.marking_hm;
    const int j = ev.col_hm < ev.col_ml ? 1 : -1;
    ev.sign = conv.kappa_minus * ev.writhe_ml * ev.writhe_hm * j;
  }
  return ev;
}

std::vector<TripleEvent> classify_all(const EventLog& log,
                                      const Conventions& conv) {
  std::vector<TripleEvent> out;
  MarkedDiagram d = log.initial;
  for (std::size_t e = 0; e < log.events.size(); ++e) {
    if (const auto* mv = std::get_if<R3>(&log.events[e]))
      out.push_back(classify_triple(d, *mv, static_cast<int>(e), conv));
    apply_event(d, log.events[e]);
  }
  return out;
}

std::array<CrossingId, 3> name_slots(const TripleEvent& ev,
                                     const Conventions& conv) {
  const bool swap = ev.plus_type ? conv.plus_swaps_ab : conv.minus_swaps_ab;
  if (swap) return {ev.id_hm, ev.id_ml, ev.id_hl};
  return {ev.id_ml, ev.id_hm, ev.id_hl};
}

}  // namespace braidrot
