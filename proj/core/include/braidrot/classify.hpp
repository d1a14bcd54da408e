#pragma once

#include <array>
#include <vector>

#include "braidrot/events.hpp"
#include "braidrot/gauss.hpp"

namespace braidrot {

// Calibration switches for the sign and coordinate conventions of triple
// moves. Defaults are the values pinned by the worked reference data; the
// fitting tool explores the alternatives.
struct Conventions {
  int kappa_plus = +1;
  int kappa_minus = -1;
  bool plus_swaps_ab = false;
  bool minus_swaps_ab = true;
};

// One triple move together with everything its weight depends on: the
// height order of the three strands, columns, markings and writhes of the
// three crossings keyed by height pair (ml, hm, hl), the move's global
// type and sign, and where the triangle corners sit on the knot circle.
//
// Corner positions use doubled circle coordinates, so they fall strictly
// between crossing points; the three corners cut the circle into the arcs
// used by configuration counting.
struct TripleEvent {
  int event_index = 0;
  int position = 0;
  bool plus_type = false;
  int col_ml = 0, col_hm = 0, col_hl = 0;
  CrossingId id_ml = 0, id_hm = 0, id_hl = 0;
  int marking_ml = 0, marking_hm = 0, marking_hl = 0;
  int writhe_ml = 0, writhe_hm = 0, writhe_hl = 0;
  int a = 0, b = 0;  // family coordinates
  int sign = 0;
  int corner_l = 0, corner_m = 0, corner_h = 0;
  GaussDiagram gauss;  // of the diagram the move acts on
};

// Classifies one triple move against the diagram it acts on. Throws
// std::logic_error if the move does not fit the diagram or the classified
// data violates the marking identities.
TripleEvent classify_triple(const MarkedDiagram& before, const R3& move,
                            int event_index, const Conventions& conv = {});

// Replays the log and classifies every triple move in order.
std::vector<TripleEvent> classify_all(const EventLog& log,
                                      const Conventions& conv = {});

// The three crossings of a triple move in name-slot order: the one whose
// marking is reported as a, the one reported as b, then the third.
std::array<CrossingId, 3> name_slots(const TripleEvent& ev,
                                     const Conventions& conv = {});

}  // namespace braidrot
