#pragma once

#include "braidrot/events.hpp"

namespace braidrot {

// Builds the event log of l full rotations of the closed braid gamma around
// the solid-torus axis. gamma must close to a knot and l must be >= 1;
// throws std::invalid_argument otherwise.
//
// One half rotation inserts the half-twist pair Delta Delta^-1 in front of
// the braid, shifts the closure seam past the Delta block, carries every
// braid letter through the remaining half-twist right to left, and cancels
// the two blocks again; the braid comes back letterwise flipped
// (sigma_i -> sigma_{n-i}). Two half rotations restore the word exactly, so
// after 2l of them the log closes up positionally. Carrying one letter
// through the half-twist costs exactly n - 2 triple moves, which makes
// 2c(n-2) of them per rotation.
//
// The output is deterministic: equal inputs give equal logs.
EventLog generate_rot(const BraidWord& gamma, int l);

namespace detail {

// Carries the letter at position q-1 through the half-twist word occupying
// [q, q+N), leaving the half-twist at [q-1, q-1+N) and the flipped letter
// after it. Appends the emitted events to out and advances d. Exposed for
// testing the pass identity sigma_i * Delta -> Delta * sigma_{n-i}.
void pass_through_delta(MarkedDiagram& d, std::vector<Event>& out,
                        CrossingId& next_id, int q);

}  // namespace detail

}  // namespace braidrot
