#pragma once

#include <string>
#include <vector>

#include "braidrot/classify.hpp"
#include "braidrot/laurent.hpp"

namespace braidrot {

enum class Corner { low, high };

// A non-triangle arrow of a triple move's diagram, classified against the
// three circle arcs the triangle corners cut out. For expanding triangles
// the arcs run A: m->l, B: l->h, C: h->m; for contracting ones A: l->m,
// B: m->h, C: h->l.
struct ClassifiedArrow {
  CrossingId id = -1;
  int tail_arc = 0;
  int head_arc = 0;
  bool tail_first = true;  // meaningful only when both ends share an arc
  int marking = 0;
  int writhe = 0;
  int under_pos = 0;
  int over_pos = 0;
};

std::vector<ClassifiedArrow> classify_arrows(const TripleEvent& ev);

// Signed count of triple moves with the given marked type.
int eval_gamma0(const std::vector<TripleEvent>& moves, int a, int b,
                bool plus_type);
int eval_gamma0(const EventLog& log, int a, int b, bool plus_type,
                const Conventions& conv = {});

// Reconstruction switches for the configuration families over triples of
// type (2n/3, 2n/3)+. Defaults are the values frozen by the fitting tool;
// the exponent's constant term is not loop-invariant and is always
// annihilated.
//
// A degree-d configuration consists of an alternating bunch of straddlers
// of the corner (parallel chords met in the same order along both adjacent
// arcs, directions alternating), of size d for even d; for odd d the bunch
// has size d-1 and one extra wandering arrow contributes its writhe with a
// weight depending on its class. The wandering arrow cannot slide across a
// bunch arrow (that would close a loop of trivial marking), so its position
// relative to the bunch is part of the configuration.
struct ThirdsOptions {
  // which direction the alternating bunch starts with, per corner
  bool low_starts_forward = true;
  bool high_starts_forward = false;
  // straddling arrows pointing forward across the corner carry marking
  // n/3, backward ones 2n/3, at both corners
  bool high_forward_low_marking = true;
  int eps_high = 1;
  // wandering-arrow weights for odd degrees at the low corner, keyed by
  // (tail arc, head arc), marking n/3
  int eps_wander_ab = 1;
  int eps_wander_bc = -1;
  // where the wandering arrow sits relative to the chosen bunch:
  // 0 anywhere, 1 past the last bunch arrow along both arcs, 2 before the
  // first one. For the second class only its endpoint on the shared arc is
  // compared.
  int wander_pos_ab = 1;
  int wander_pos_bc = 0;
};

// One concrete configuration instance inside one triple move: the arrows
// filling the configuration's slots (bunch in near-end order, then the
// wandering arrow for odd degrees) and the signed writhe product they
// contribute to the move's exponent.
struct ConfigInstance {
  std::vector<CrossingId> slots;
  long long weight = 0;
};

// All configuration instances of degree d at the chosen corner inside one
// move; empty when the move's type does not carry the family.
std::vector<ConfigInstance> enumerate_configurations(
    const TripleEvent& mv, int n, int d, Corner corner,
    const ThirdsOptions& opt = {});

// Laurent polynomial of Gauss degree d at the chosen corner; requires
// 3 | n, and the high corner requires even d.
LaurentPoly eval_gamma_d(const std::vector<TripleEvent>& moves, int n, int d,
                         Corner corner, const ThirdsOptions& opt = {});
LaurentPoly eval_gamma_d(const EventLog& log, int d, Corner corner,
                         const ThirdsOptions& opt = {},
                         const Conventions& conv = {});

// Degree-1 family over triples of type (n-2, 1)-; requires n > 3.
// Wandering-arrow weights are keyed by (tail arc, head arc, marking) with
// the marking drawn from the triangle's values {1, n-2, n-1}.
struct Nm2Entry {
  int tail_arc = 0;
  int head_arc = 0;
  int marking_sym = 0;  // 0 -> 1, 1 -> n-2, 2 -> n-1
  int eps = 0;
};
struct Nm2Options {
  std::vector<Nm2Entry> table;
  Nm2Options();  // default table frozen by the fitting tool
};

// Instances of the (n-2, 1)- family inside one move, one per table-matched
// arrow; empty when the move's type does not carry the family.
std::vector<ConfigInstance> enumerate_nm2(const TripleEvent& mv, int n,
                                          const Nm2Options& opt = {});

LaurentPoly eval_gamma1_nm2(const std::vector<TripleEvent>& moves, int n,
                            const Nm2Options& opt = {});
LaurentPoly eval_gamma1_nm2(const EventLog& log, const Nm2Options& opt = {},
                            const Conventions& conv = {});

// Sum of writhes over crossings with the given marking.
int w_a(const MarkedDiagram& d, int a);

// Least Gauss degree from which every degree-d polynomial vanishes on
// rotation logs of a c-crossing closure.
int vanishing_bound(int c, int n);

// CLI-facing family selectors: "deg0:(a,b)+", "deg0:(a,b)-",
// "degd-l:<d>", "degd-h:<d>", "deg1-nm2", optionally suffixed ":mirror".
// The degree may be omitted from degd selectors and supplied separately.
// The mirror variant of a family reverses every configuration arrow and
// interchanges the complementary markings, which eval_family realizes by
// evaluating the base family on mirror_log(log).
struct FamilySelector {
  enum class Kind { deg0, thirds, nm2 };
  Kind kind = Kind::deg0;
  int a = 0, b = 0;
  bool plus_type = true;
  Corner corner = Corner::low;
  int d = -1;
  bool mirror = false;
};

FamilySelector parse_family(const std::string& text, int degree = -1);
std::string family_to_string(const FamilySelector& f);

// Validates the selector against the braid's strand count; throws
// std::invalid_argument with a reason when the family does not apply.
void check_family(const FamilySelector& f, int n);

LaurentPoly eval_family(const EventLog& log, const FamilySelector& f,
                        const Conventions& conv = {});

}  // namespace braidrot
