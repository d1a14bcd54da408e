#pragma once

#include "braidrot/cocycle.hpp"
#include "braidrot/laurent.hpp"
#include "braidrot/trace.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidrot {

// A character invariant refines a one-cocycle by the trace circles the
// participating crossings belong to: one value per tuple of circles. Keys
// index into the trace_circles output; values are constant polynomials for
// degree 0 and Laurent polynomials otherwise. Zero entries are dropped, so
// tables of non-matching braids stay comparable.
struct CharacterTable {
  std::string tag;  // family id this table refines
  int degree = 0;
  int l = 1;
  std::map<std::vector<int>, LaurentPoly> entries;
};

// Signed counts of triple points per circle triple (a-slot, b-slot, third
// crossing). Returns an empty table when the marking constraint of the
// type has no solutions.
CharacterTable characters0(const TraceGraph& g,
                           const std::vector<TraceCircle>& circles, int a,
                           int b, bool plus_type);

// Unsigned counts of the positive and of the negative triple points that
// survive trihedron matching, keyed like characters0.
std::pair<CharacterTable, CharacterTable> pos_neg_characters(
    const TraceGraph& g, const ESet& e,
    const std::vector<TraceCircle>& circles, int a, int b, bool plus_type);

// Laurent-polynomial characters of a configuration family: every matching
// triple move adds its sign times x to the exponent collected from the
// instances that name a given circle tuple (triangle slots first, then the
// configuration arrows in slot order). Constant terms are annihilated per
// entry. Mirror selectors are rejected; evaluate those on the mirrored log.
CharacterTable characters_d(const EventLog& log, const TraceGraph& g,
                            const std::vector<TraceCircle>& circles,
                            const FamilySelector& f,
                            const Conventions& conv = {});

// True if some bijection of circles preserving marking and torus class
// maps every table of a onto the tag-matching table of b exactly.
bool compare_invariants(const std::vector<CharacterTable>& a,
                        const std::vector<TraceCircle>& circles_a,
                        const std::vector<CharacterTable>& b,
                        const std::vector<TraceCircle>& circles_b);

}  // namespace braidrot
