#pragma once

#include <vector>

#include "braidrot/events.hpp"

namespace braidrot {

// A crossing of the closed-braid diagram seen on the knot circle. Circle
// positions enumerate the 2c crossing points in traversal order; traversal
// starts where the strand entering at row 1 leaves the left edge, and each
// closure arc hands over to the pass at the row where the previous one
// ended.
struct GaussArrow {
  CrossingId id = 0;
  int column = 0;     // braid word position of the crossing
  int under_pos = 0;  // circle position of the undercrossing point
  int over_pos = 0;   // circle position of the overcrossing point
  int writhe = 0;     // +1 or -1
  int marking = 0;    // 1..n-1: closure arcs crossed walking under -> over
};

// Chord endpoints interleave on the circle.
bool linked(const GaussArrow& x, const GaussArrow& y);

struct GaussDiagram {
  int n = 0;
  int points = 0;                  // 2 * crossing count
  std::vector<GaussArrow> arrows;  // indexed by braid word position

  const GaussArrow& at_column(int column) const;
};

// Reads the knot circle off a closed-braid diagram. Positive letters put
// the strand on the lower row on top. Throws std::invalid_argument when
// the closure is not a knot.
GaussDiagram gauss_diagram(const MarkedDiagram& d);

}  // namespace braidrot
