#include "braidrot/cocycle.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidrot {
namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("cocycle: " + what);
}

// Doubled-coordinate arcs A, B, C between the triangle corners, in the
// cyclic order fixed by the move type.
struct Arcs {
  int start[3];
  int len[3];
  int m;
};

Arcs triangle_arcs(const TripleEvent& ev) {
  Arcs a;
  a.m = 2 * ev.gauss.points;
  int s[3], e[3];
  if (ev.plus_type) {
    s[0] = ev.corner_m; e[0] = ev.corner_l;
    s[1] = ev.corner_l; e[1] = ev.corner_h;
    s[2] = ev.corner_h; e[2] = ev.corner_m;
  } else {
    s[0] = ev.corner_l; e[0] = ev.corner_m;
    s[1] = ev.corner_m; e[1] = ev.corner_h;
    s[2] = ev.corner_h; e[2] = ev.corner_l;
  }
  int total = 0;
  for (int i = 0; i < 3; ++i) {
    a.start[i] = s[i];
    a.len[i] = mod(e[i] - s[i], a.m);
    total += a.len[i];
  }
  if (total != a.m) bug("corner arcs do not tile the circle");
  return a;
}

int arc_of(const Arcs& a, int x2) {
  for (int i = 0; i < 3; ++i)
    if (mod(x2 - a.start[i], a.m) < a.len[i]) return i;
  bug("point on a corner");
}

struct ClassSpec {
  int tail = 0, head = 0, marking = 0;
};

bool in_class(const ClassifiedArrow& a, const ClassSpec& c) {
  return a.tail_arc == c.tail && a.head_arc == c.head &&
         a.marking == c.marking;
}

// One arrow straddling a corner, keyed by how far along each adjacent arc
// its endpoints sit (walking each arc in circle direction).
struct Straddler {
  int near_key = 0;  // along the arc before the corner
  int far_key = 0;   // along the arc after the corner
  bool fwd = false;  // points from the near arc to the far arc
  int writhe = 0;
  int index = 0;     // into the move's classified arrow list
};

int resolve_marking(int sym, int n) {
  switch (sym) {
    case 0: return 1;
    case 1: return n - 2;
    case 2: return n - 1;
    default: throw std::invalid_argument("marking symbol out of range");
  }
}

int parse_positive(const std::string& s, const std::string& what) {
  int v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || v < 1)
    throw std::invalid_argument("bad " + what + " '" + s + "'");
  return v;
}

}  // namespace

std::vector<ClassifiedArrow> classify_arrows(const TripleEvent& ev) {
  const Arcs arcs = triangle_arcs(ev);
  std::vector<ClassifiedArrow> out;
  out.reserve(ev.gauss.arrows.size());
  for (const auto& ar : ev.gauss.arrows) {
    if (ar.column == ev.col_ml || ar.column == ev.col_hm ||
        ar.column == ev.col_hl)
      continue;
    ClassifiedArrow c;
    c.id = ar.id;
    c.tail_arc = arc_of(arcs, 2 * ar.under_pos);
    c.head_arc = arc_of(arcs, 2 * ar.over_pos);
    if (c.tail_arc == c.head_arc) {
      const int s = arcs.start[c.tail_arc];
      c.tail_first =
          mod(2 * ar.under_pos - s, arcs.m) < mod(2 * ar.over_pos - s, arcs.m);
    }
    c.marking = ar.marking;
    c.writhe = ar.writhe;
    c.under_pos = ar.under_pos;
    c.over_pos = ar.over_pos;
    out.push_back(c);
  }
  return out;
}

int eval_gamma0(const std::vector<TripleEvent>& moves, int a, int b,
                bool plus_type) {
  int total = 0;
  for (const auto& mv : moves)
    if (mv.plus_type == plus_type && mv.a == a && mv.b == b) total += mv.sign;
  return total;
}

int eval_gamma0(const EventLog& log, int a, int b, bool plus_type,
                const Conventions& conv) {
  return eval_gamma0(classify_all(log, conv), a, b, plus_type);
}

namespace {

void check_thirds(int n, int d, Corner corner) {
  if (n % 3 != 0)
    throw std::invalid_argument(
        "configuration families need a strand count divisible by 3");
  if (d < 1) throw std::invalid_argument("Gauss degree must be positive");
  if (corner == Corner::high && d % 2 != 0)
    throw std::invalid_argument(
        "the high-corner family exists only for even Gauss degrees");
}

}  // namespace

std::vector<ConfigInstance> enumerate_configurations(const TripleEvent& mv,
                                                     int n, int d,
                                                     Corner corner,
                                                     const ThirdsOptions& opt) {
  check_thirds(n, d, corner);
  const int lm = n / 3;
  const int hm = 2 * n / 3;

  std::vector<ConfigInstance> out;
  if (!mv.plus_type || mv.marking_ml != hm || mv.marking_hm != hm) return out;

  // Arc before and after the corner, and which way the bunch reads.
  const int near_arc = corner == Corner::low ? 0 : 1;
  const int far_arc = corner == Corner::low ? 1 : 2;
  const bool starts_forward = corner == Corner::low ? opt.low_starts_forward
                                                    : opt.high_starts_forward;
  const int fm = corner == Corner::low || opt.high_forward_low_marking ? lm
                                                                       : hm;
  const ClassSpec fwd{near_arc, far_arc, fm};
  const ClassSpec bwd{far_arc, near_arc, lm + hm - fm};
  const int eps_bunch = corner == Corner::low ? 1 : opt.eps_high;
  const ClassSpec wander_ab{0, 1, lm};
  const ClassSpec wander_bc{1, 2, lm};

  const Arcs arcs = triangle_arcs(mv);
  const auto arrows = classify_arrows(mv);

  std::vector<Straddler> str;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
    const auto& a = arrows[i];
    const bool is_fwd = in_class(a, fwd);
    if (!is_fwd && !in_class(a, bwd)) continue;
    const int near_pos = is_fwd ? a.under_pos : a.over_pos;
    const int far_pos = is_fwd ? a.over_pos : a.under_pos;
    str.push_back({mod(2 * near_pos - arcs.start[near_arc], arcs.m),
                   mod(2 * far_pos - arcs.start[far_arc], arcs.m), is_fwd,
                   a.writhe, i});
  }
  std::sort(str.begin(), str.end(),
            [](const Straddler& x, const Straddler& y) {
              return x.near_key < y.near_key;
            });

  // Wandering-arrow candidates for odd degrees: the first class runs
  // between the same two arcs as the forward straddlers, the second has
  // only its tail on the far arc, so only that endpoint gets a key.
  struct Wander {
    int eps = 0;
    int writhe = 0;
    int near_key = 0;
    int far_key = 0;
    bool keyed_near = false;
    int index = 0;
  };
  std::vector<Wander> wander;
  if (d % 2 == 1)
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
      const auto& a = arrows[i];
      if (in_class(a, wander_ab)) {
        wander.push_back({opt.eps_wander_ab, a.writhe,
                          mod(2 * a.under_pos - arcs.start[0], arcs.m),
                          mod(2 * a.over_pos - arcs.start[1], arcs.m), true,
                          i});
      } else if (in_class(a, wander_bc)) {
        wander.push_back({opt.eps_wander_bc, a.writhe, 0,
                          mod(2 * a.under_pos - arcs.start[1], arcs.m),
                          false, i});
      }
    }

  // A configuration's bunch is an alternating sequence of straddlers,
  // parallel as chords: walking both arcs away from the triangle meets
  // the chosen arrows in the same order, with directions alternating
  // from the stated starting direction.
  const int bunch_size = d % 2 == 0 ? d : d - 1;
  std::vector<const Straddler*> chosen;
  auto wander_fits = [&](const Wander& w, int pos_rule) {
    if (pos_rule == 0 || chosen.empty()) return true;
    for (const Straddler* s : chosen) {
      const bool past = w.far_key > s->far_key &&
                        (!w.keyed_near || w.near_key > s->near_key);
      const bool ahead = w.far_key < s->far_key &&
                         (!w.keyed_near || w.near_key < s->near_key);
      if (pos_rule == 1 ? !past : !ahead) return false;
    }
    return true;
  };
  auto bunch_ids = [&] {
    std::vector<CrossingId> ids;
    ids.reserve(chosen.size() + 1);
    for (const Straddler* s : chosen) ids.push_back(arrows[s->index].id);
    return ids;
  };
  auto leaf = [&](int prod) {
    if (d % 2 == 0) {
      out.push_back({bunch_ids(), static_cast<long long>(eps_bunch) * prod});
      return;
    }
    for (const Wander& w : wander) {
      bool taken = false;
      for (const Straddler* s : chosen) taken = taken || s->index == w.index;
      if (taken) continue;
      if (!wander_fits(w, w.keyed_near ? opt.wander_pos_ab
                                       : opt.wander_pos_bc))
        continue;
      ConfigInstance inst{bunch_ids(),
                          static_cast<long long>(w.eps) * prod * w.writhe};
      inst.slots.push_back(arrows[w.index].id);
      out.push_back(std::move(inst));
    }
  };
  std::function<void(size_t, int, bool, int, int)> rec =
      [&](size_t from, int remaining, bool want_fwd, int last_far,
          int prod) {
        if (remaining == 0) {
          leaf(prod);
          return;
        }
        for (size_t k = from; k < str.size(); ++k) {
          if (str[k].fwd != want_fwd || str[k].far_key <= last_far)
            continue;
          chosen.push_back(&str[k]);
          rec(k + 1, remaining - 1, !want_fwd, str[k].far_key,
              prod * str[k].writhe);
          chosen.pop_back();
        }
      };
  rec(0, bunch_size, starts_forward, -1, 1);
  return out;
}

LaurentPoly eval_gamma_d(const std::vector<TripleEvent>& moves, int n, int d,
                         Corner corner, const ThirdsOptions& opt) {
  check_thirds(n, d, corner);
  LaurentPoly out;
  for (const auto& mv : moves) {
    long long e = 0;
    for (const auto& inst : enumerate_configurations(mv, n, d, corner, opt))
      e += inst.weight;
    out.add_term(e, mv.sign);
  }
  out.add_term(0, -out.coeff(0));
  return out;
}

LaurentPoly eval_gamma_d(const EventLog& log, int d, Corner corner,
                         const ThirdsOptions& opt, const Conventions& conv) {
  return eval_gamma_d(classify_all(log, conv), log.initial.word.n, d, corner,
                      opt);
}

Nm2Options::Nm2Options() {
  table = {
      {1, 0, 2, +1},
      {2, 1, 1, -1},
  };
}

std::vector<ConfigInstance> enumerate_nm2(const TripleEvent& mv, int n,
                                          const Nm2Options& opt) {
  if (n <= 3)
    throw std::invalid_argument("the (n-2,1) family needs more than 3 strands");
  std::vector<ConfigInstance> out;
  if (mv.plus_type || mv.a != n - 2 || mv.b != 1) return out;
  for (const auto& a : classify_arrows(mv))
    for (const auto& entry : opt.table) {
      if (a.tail_arc != entry.tail_arc || a.head_arc != entry.head_arc ||
          a.marking != resolve_marking(entry.marking_sym, n))
        continue;
      out.push_back({{a.id}, static_cast<long long>(entry.eps) * a.writhe});
    }
  return out;
}

LaurentPoly eval_gamma1_nm2(const std::vector<TripleEvent>& moves, int n,
                            const Nm2Options& opt) {
  if (n <= 3)
    throw std::invalid_argument("the (n-2,1) family needs more than 3 strands");
  LaurentPoly out;
  for (const auto& mv : moves) {
    long long e = 0;
    for (const auto& inst : enumerate_nm2(mv, n, opt)) e += inst.weight;
    out.add_term(e, mv.sign);
  }
  out.add_term(0, -out.coeff(0));
  return out;
}

LaurentPoly eval_gamma1_nm2(const EventLog& log, const Nm2Options& opt,
                            const Conventions& conv) {
  return eval_gamma1_nm2(classify_all(log, conv), log.initial.word.n, opt);
}

int w_a(const MarkedDiagram& d, int a) {
  const GaussDiagram g = gauss_diagram(d);
  int total = 0;
  for (const auto& ar : g.arrows)
    if (ar.marking == a) total += ar.writhe;
  return total;
}

int vanishing_bound(int c, int n) { return c + n * n - n - 2; }

FamilySelector parse_family(const std::string& text, int degree) {
  FamilySelector f;
  std::string s = text;
  auto fail = [&text](const std::string& why) -> void {
    throw std::invalid_argument("bad family '" + text + "': " + why);
  };

  const std::string mtag = ":mirror";
  if (s.size() > mtag.size() &&
      s.compare(s.size() - mtag.size(), mtag.size(), mtag) == 0) {
    f.mirror = true;
    s.erase(s.size() - mtag.size());
  }

  if (s.rfind("deg0:", 0) == 0) {
    if (f.mirror) fail("mirror applies only to configuration families");
    if (degree > 0) fail("deg0 families have no Gauss degree");
    const std::string body = s.substr(5);
    if (body.size() < 6 || body.front() != '(')
      fail("expected deg0:(a,b)+ or deg0:(a,b)-");
    const char typec = body.back();
    if (typec != '+' && typec != '-') fail("type must end in + or -");
    const size_t close = body.find(')');
    if (close == std::string::npos || close != body.size() - 2)
      fail("expected deg0:(a,b)+ or deg0:(a,b)-");
    const std::string inner = body.substr(1, close - 1);
    const size_t comma = inner.find(',');
    if (comma == std::string::npos) fail("expected two marking coordinates");
    f.kind = FamilySelector::Kind::deg0;
    f.a = parse_positive(inner.substr(0, comma), "marking");
    f.b = parse_positive(inner.substr(comma + 1), "marking");
    f.plus_type = typec == '+';
    return f;
  }

  if (s == "deg1-nm2") {
    if (degree >= 0 && degree != 1) fail("this family has Gauss degree 1");
    f.kind = FamilySelector::Kind::nm2;
    f.d = 1;
    return f;
  }

  int suffix_d = -1;
  std::string head = s;
  if (s.rfind("degd-l:", 0) == 0 || s.rfind("degd-h:", 0) == 0) {
    head = s.substr(0, 6);
    suffix_d = parse_positive(s.substr(7), "degree");
  }
  if (head == "degd-l" || head == "degd-h") {
    f.kind = FamilySelector::Kind::thirds;
    f.corner = head == "degd-l" ? Corner::low : Corner::high;
    if (suffix_d >= 0 && degree >= 0 && suffix_d != degree)
      fail("degree given twice with different values");
    f.d = suffix_d >= 0 ? suffix_d : degree;
    if (f.d < 1) fail("missing Gauss degree");
    return f;
  }

  fail("unknown family id");
  return f;  // unreachable
}

std::string family_to_string(const FamilySelector& f) {
  std::string s;
  switch (f.kind) {
    case FamilySelector::Kind::deg0:
      s = "deg0:(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")" +
          (f.plus_type ? "+" : "-");
      break;
    case FamilySelector::Kind::thirds:
      s = (f.corner == Corner::low ? "degd-l:" : "degd-h:") +
          std::to_string(f.d);
      break;
    case FamilySelector::Kind::nm2:
      s = "deg1-nm2";
      break;
  }
  if (f.mirror) s += ":mirror";
  return s;
}

void check_family(const FamilySelector& f, int n) {
  switch (f.kind) {
    case FamilySelector::Kind::deg0:
      if (f.a < 1 || f.a > n - 1 || f.b < 1 || f.b > n - 1)
        throw std::invalid_argument("marking coordinates must lie in 1..n-1");
      break;
    case FamilySelector::Kind::thirds:
      if (n % 3 != 0)
        throw std::invalid_argument(
            "configuration families need a strand count divisible by 3");
      if (f.d < 1)
        throw std::invalid_argument("Gauss degree must be positive");
      if (f.corner == Corner::high && f.d % 2 != 0)
        throw std::invalid_argument(
            "the high-corner family exists only for even Gauss degrees");
      break;
    case FamilySelector::Kind::nm2:
      if (n <= 3)
        throw std::invalid_argument(
            "the (n-2,1) family needs more than 3 strands");
      break;
  }
}

LaurentPoly eval_family(const EventLog& log, const FamilySelector& f,
                        const Conventions& conv) {
  check_family(f, log.initial.word.n);
  if (f.mirror) {
    FamilySelector base = f;
    base.mirror = false;
    return eval_family(mirror_log(log), base, conv);
  }
  switch (f.kind) {
    case FamilySelector::Kind::deg0:
      return LaurentPoly::monomial(eval_gamma0(log, f.a, f.b, f.plus_type,
                                               conv),
                                   0);
    case FamilySelector::Kind::thirds:
      return eval_gamma_d(log, f.d, f.corner, {}, conv);
    case FamilySelector::Kind::nm2:
      return eval_gamma1_nm2(log, {}, conv);
  }
  throw std::logic_error("unhandled family kind");
}

}  // namespace braidrot
