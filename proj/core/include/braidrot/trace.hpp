#pragma once

#include "braidrot/braid.hpp"
#include "braidrot/classify.hpp"
#include "braidrot/events.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidrot {

// The trace graph of a loop of closed braid diagrams: the union over the
// loop parameter of all crossings, a graph in a thickened torus. Vertices
// are the Reidemeister events, arcs are the pieces of crossing lifetimes
// between the events they take part in.

struct TraceNode {
  enum class Kind { triple, birth, death };
  Kind kind = Kind::triple;
  int event_index = -1;
  // participating crossings: three for a triple point, two for a tangency
  std::vector<CrossingId> ids;
  // classification data, filled for triple points only
  bool plus_type = false;
  int sign = 0;
  int a = 0;
  int b = 0;
  std::array<CrossingId, 3> slots{-1, -1, -1};  // name-slot order (a, b, third)
};

struct TraceArc {
  CrossingId id = -1;
  // node indices; -1 means the end sits on the closure seam of the log
  int from_node = -1;
  int to_node = -1;
  int sticker = 0;  // generator index carried over this segment
  int phi = 0;      // signed passes across the cyclic seam of the word
  int circle = -1;  // component of the resolution, set by trace_circles
};

struct TraceGraph {
  int n = 0;
  int l = 1;
  int events_per_rotation = 0;
  std::vector<TraceNode> nodes;
  std::vector<TraceArc> arcs;
  std::map<CrossingId, std::vector<int>> arcs_of;  // in lifetime order
  std::map<CrossingId, int> marking;
  std::vector<CrossingId> seam_start;  // ids of the initial diagram
  std::vector<CrossingId> seam_end;    // ids of the final diagram
  // shift of crossings by one rotation of the loop
  std::map<CrossingId, CrossingId> deck;

  int triple_count() const;
};

// Builds the trace graph by replaying the log. R2 events become tangency
// nodes joining the paired crossings, R3 events become classified triple
// nodes, CyclicShift events add to the phi winding of every crossing they
// carry across the seam. Throws std::logic_error if the log is not
// rotation-periodic with respect to its factor l or if a crossing changes
// its homological marking during its lifetime.
TraceGraph build_trace(const EventLog& log, const Conventions& conv = {});

struct TraceCircle {
  std::string name;
  int marking = 0;
  std::pair<int, int> torus_class{0, 0};  // (phi, t), sign-normalized
  std::vector<int> members;               // arc indices in traversal order
};

// Connected components of the resolution: strands stay together through
// triple points and join through tangencies and the closure seam. Fills in
// the circle field of every arc. Circles are ordered and named by
// (marking, torus_class, order of first appearance).
std::vector<TraceCircle> trace_circles(TraceGraph& g);

// The circle a crossing's lifetime belongs to. Requires trace_circles to
// have run on the graph.
int circle_of(const TraceGraph& g, CrossingId id);

// Where each crossing of the closed braid travels after one full rotation:
// entry p holds the final word position of the crossing starting at
// position p, or -1 when that crossing is annihilated along the way (its
// class lives on through the trace circles). Injective where defined.
std::vector<int> crossing_monodromy(const BraidWord& w);

// The permutation of trace circles induced by shifting the loop by one
// rotation. Identity when l = 1.
std::vector<int> circle_monodromy(const TraceGraph& g,
                                  const std::vector<TraceCircle>& circles);

struct ESet {
  std::vector<int> members;  // triple nodes outside all generalized trihedrons
  std::vector<std::pair<int, int>> pairing;  // matched opposite-sign pairs
};

// A generalized trihedron is a pair of opposite-sign triple points whose
// three strands connect them by edge paths (running through other events
// transversally) that are pairwise homologous in the thickened torus.
// Matching is greedy in event order and repeats until no pair is left.
ESet detect_generalized_trihedrons(const TraceGraph& g);

}  // namespace braidrot
