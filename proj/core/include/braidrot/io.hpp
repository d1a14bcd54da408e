#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidrot/laurent.hpp"
#include "braidrot/trace.hpp"

namespace braidrot {

// Sparse map encoding of a polynomial: (exponent, coefficient) pairs in
// ascending exponent order, both sides as decimal strings. This is the
// wire format used by the JSON output.
std::vector<std::pair<std::string, std::string>> poly_map(
    const LaurentPoly& p);

// GraphViz rendering of a trace graph. Requires trace_circles to have run
// on g so every arc carries its circle. Triple nodes are labeled with sign
// and type, tangency nodes with R2+/R2-, and the closure identification is
// collapsed into a single seam node; arcs carry their braid position and
// circle name. Output is deterministic.
std::string trace_dot(const TraceGraph& g,
                      const std::vector<TraceCircle>& circles);

}  // namespace braidrot
