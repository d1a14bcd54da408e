#pragma once

#include "braidrot/braid.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace braidrot {

// Persistent identity of one crossing across the moves of a log.
// Ids are unique within one EventLog and are never reused.
using CrossingId = std::int64_t;

// A braid diagram whose letters carry persistent crossing ids.
struct MarkedDiagram {
  BraidWord word;
  std::vector<CrossingId> ids;  // one per letter
  // Accumulated cyclic shift (sum of CyclicShift amounts); informational.
  std::int64_t phase = 0;

  int length() const { return word.length(); }
  bool operator==(const MarkedDiagram&) const = default;
};

// Elementary diagram moves. Positions index letters of the current word.
//
// R2Plus inserts the inverse pair `letters` at `position` (two fresh ids).
// R2Minus removes the cancelling pair at (position, position+1).
// R3 rewrites the three letters at (position .. position+2) by the braid
//   relation; the outer two ids swap places, the middle id stays.
// DistantExchange swaps the commuting letters at (position, position+1).
// CyclicShift rotates the word left by k letters (the first k letters wrap
//   to the end; the only move that crosses the closure seam).
struct R2Plus {
  int position;
  std::pair<CrossingId, CrossingId> new_ids;
  std::pair<int, int> letters;
  bool operator==(const R2Plus&) const = default;
};
struct R2Minus {
  int position;
  std::pair<CrossingId, CrossingId> dead_ids;
  bool operator==(const R2Minus&) const = default;
};
struct R3 {
  int position;
  std::array<CrossingId, 3> ids;      // ids at (position..position+2) before
  std::array<int, 3> before;          // letters before the move
  std::array<int, 3> after;           // letters after the move
  bool operator==(const R3&) const = default;
};
struct DistantExchange {
  int position;
  bool operator==(const DistantExchange&) const = default;
};
struct CyclicShift {
  int k;
  bool operator==(const CyclicShift&) const = default;
};

using Event = std::variant<R2Plus, R2Minus, R3, DistantExchange, CyclicShift>;

// The discretized loop: an initial diagram and the ordered moves that bring
// it back to itself. Crossing ids present at both ends are identified
// positionally (the monodromy closure).
struct EventLog {
  MarkedDiagram initial;
  std::vector<Event> events;
  int l = 1;  // number of full rotations realized

  int r3_count() const;
  bool operator==(const EventLog&) const = default;
};

// True if the three adjacent signed letters admit a braid relation: outer
// indices equal, middle index adjacent, and not the sign pattern (s, t, s)
// with s != t (which has no consistent strand height order).
bool r3_applicable(int a, int b, int c);

// The rewritten letter triple of a braid relation (indices exchange, signs
// travel with their strand pairs).
std::array<int, 3> r3_rewrite(int a, int b, int c);

// Applies one event in place. Throws std::runtime_error with a description
// of the violated precondition if the event does not fit the diagram
// (the engine-bug detector used by replay()).
void apply_event(MarkedDiagram& d, const Event& e);

// The diagram state after every event (replayed from log.initial).
// result.front() is the state after events[0]; an empty log yields {initial}.
std::vector<MarkedDiagram> replay(const EventLog& log);

// The diagram immediately before the event at event_index, which must be an
// R3 event; throws std::invalid_argument otherwise.
MarkedDiagram snapshot_at(const EventLog& log, int event_index);

// The same loop with every crossing switched: all letters of the initial
// word and of the events are negated. Ids, positions and move order are
// unchanged, so the result replays move for move.
EventLog mirror_log(const EventLog& log);

}  // namespace braidrot
