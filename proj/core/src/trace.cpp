#include "braidrot/trace.hpp"

#include "braidrot/gauss.hpp"
#include "braidrot/loop.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace braidrot {

namespace {

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("trace graph: " + what);
}

bool same_skeleton(const Event& x, const Event& y) {
  if (x.index() != y.index()) return false;
  if (const auto* a = std::get_if<R2Plus>(&x)) {
    const auto* b = std::get_if<R2Plus>(&y);
    return a->position == b->position && a->letters == b->letters;
  }
  if (const auto* a = std::get_if<R2Minus>(&x))
    return a->position == std::get_if<R2Minus>(&y)->position;
  if (const auto* a = std::get_if<R3>(&x)) {
    const auto* b = std::get_if<R3>(&y);
    return a->position == b->position && a->before == b->before &&
           a->after == b->after;
  }
  if (const auto* a = std::get_if<DistantExchange>(&x))
    return a->position == std::get_if<DistantExchange>(&y)->position;
  return std::get_if<CyclicShift>(&x)->k == std::get_if<CyclicShift>(&y)->k;
}

// A walk position on the resolved trace graph: sitting on an arc, moving
// toward its to end (dir +1) or its from end (dir -1).
struct WalkPos {
  int arc = -1;
  int dir = 1;
  bool operator==(const WalkPos&) const = default;
};

struct WalkCtx {
  const TraceGraph* g = nullptr;
  std::vector<int> life_idx;            // position of every arc in its lifetime
  std::map<CrossingId, int> start_pos;  // seam positions by crossing
  std::map<CrossingId, int> end_pos;
};

WalkCtx make_ctx(const TraceGraph& g) {
  WalkCtx c;
  c.g = &g;
  c.life_idx.assign(g.arcs.size(), -1);
  for (const auto& [id, arcs] : g.arcs_of)
    for (size_t k = 0; k < arcs.size(); ++k)
      c.life_idx[arcs[k]] = static_cast<int>(k);
  for (size_t p = 0; p < g.seam_start.size(); ++p)
    c.start_pos[g.seam_start[p]] = static_cast<int>(p);
  for (size_t p = 0; p < g.seam_end.size(); ++p)
    c.end_pos[g.seam_end[p]] = static_cast<int>(p);
  return c;
}

// Traverses the current arc, adding its windings, and moves onto the next
// arc of the resolution: strands keep going through triple points, U-turn
// onto the partner crossing at tangencies, and follow the positional
// identification across the closure seam. Returns the node passed through,
// or -1 when the step crossed the seam.
int step(const WalkCtx& c, WalkPos& p, long long& phi, long long& t) {
  const TraceGraph& g = *c.g;
  const TraceArc& a = g.arcs[p.arc];
  phi += p.dir * a.phi;
  const int node = p.dir > 0 ? a.to_node : a.from_node;
  if (node >= 0) {
    const TraceNode& nd = g.nodes[node];
    if (nd.kind == TraceNode::Kind::triple) {
      const auto& life = g.arcs_of.at(a.id);
      p.arc = life[c.life_idx[p.arc] + p.dir];
    } else if (nd.kind == TraceNode::Kind::death) {
      if (p.dir < 0) bug("walk entered a death node backwards");
      const CrossingId q = nd.ids[0] == a.id ? nd.ids[1] : nd.ids[0];
      p.arc = g.arcs_of.at(q).back();
      p.dir = -1;
    } else {
      if (p.dir > 0) bug("walk entered a birth node forwards");
      const CrossingId q = nd.ids[0] == a.id ? nd.ids[1] : nd.ids[0];
      p.arc = g.arcs_of.at(q).front();
      p.dir = 1;
    }
    return node;
  }
  if (p.dir > 0) {
    t += 1;
    p.arc = g.arcs_of.at(g.seam_start[c.end_pos.at(a.id)]).front();
  } else {
    t -= 1;
    p.arc = g.arcs_of.at(g.seam_end[c.start_pos.at(a.id)]).back();
  }
  return -1;
}

}  // namespace

int TraceGraph::triple_count() const {
  int k = 0;
  for (const auto& nd : nodes)
    if (nd.kind == TraceNode::Kind::triple) ++k;
  return k;
}

TraceGraph build_trace(const EventLog& log, const Conventions& conv) {
  TraceGraph g;
  g.n = log.initial.word.n;
  g.l = log.l;
  g.seam_start = log.initial.ids;

  if (log.l < 1) bug("log has l < 1");
  const size_t total = log.events.size();
  if (total % static_cast<size_t>(log.l) != 0)
    bug("event count is not a multiple of l");
  const size_t per_rot = total / static_cast<size_t>(log.l);
  g.events_per_rotation = static_cast<int>(per_rot);
  for (size_t e = 0; e + per_rot < total; ++e)
    if (!same_skeleton(log.events[e], log.events[e + per_rot]))
      bug("log is not rotation-periodic");

  struct OpenArc {
    int from_node = -1;
    int phi = 0;
  };
  std::map<CrossingId, OpenArc> open;

  auto note_markings = [&](const MarkedDiagram& d) {
    const GaussDiagram gd = gauss_diagram(d);
    for (const auto& ar : gd.arrows) {
      auto [it, fresh] = g.marking.emplace(ar.id, ar.marking);
      if (!fresh && it->second != ar.marking)
        bug("crossing changed its marking during its lifetime");
    }
  };

  auto close_arc = [&](CrossingId id, int to_node, int sticker) {
    auto it = open.find(id);
    if (it == open.end()) bug("closing a crossing that is not alive");
    g.arcs.push_back(
        {id, it->second.from_node, to_node, sticker, it->second.phi, -1});
    g.arcs_of[id].push_back(static_cast<int>(g.arcs.size()) - 1);
    open.erase(it);
  };

  MarkedDiagram cur = log.initial;
  MarkedDiagram seam1 = cur;
  note_markings(cur);
  for (CrossingId id : cur.ids) open[id] = OpenArc{-1, 0};

  for (size_t e = 0; e < total; ++e) {
    const Event& ev = log.events[e];
    if (const auto* r2p = std::get_if<R2Plus>(&ev)) {
      TraceNode nd;
      nd.kind = TraceNode::Kind::birth;
      nd.event_index = static_cast<int>(e);
      nd.ids = {r2p->new_ids.first, r2p->new_ids.second};
      g.nodes.push_back(nd);
      const int node = static_cast<int>(g.nodes.size()) - 1;
      apply_event(cur, ev);
      note_markings(cur);
      open[r2p->new_ids.first] = OpenArc{node, 0};
      open[r2p->new_ids.second] = OpenArc{node, 0};
    } else if (const auto* r2m = std::get_if<R2Minus>(&ev)) {
      TraceNode nd;
      nd.kind = TraceNode::Kind::death;
      nd.event_index = static_cast<int>(e);
      nd.ids = {r2m->dead_ids.first, r2m->dead_ids.second};
      g.nodes.push_back(nd);
      const int node = static_cast<int>(g.nodes.size()) - 1;
      close_arc(r2m->dead_ids.first, node,
                std::abs(cur.word.letters[r2m->position]));
      close_arc(r2m->dead_ids.second, node,
                std::abs(cur.word.letters[r2m->position + 1]));
      apply_event(cur, ev);
    } else if (const auto* r3 = std::get_if<R3>(&ev)) {
      const TripleEvent te = classify_triple(cur, *r3, static_cast<int>(e), conv);
      TraceNode nd;
      nd.kind = TraceNode::Kind::triple;
      nd.event_index = static_cast<int>(e);
      nd.ids = {r3->ids[0], r3->ids[1], r3->ids[2]};
      nd.plus_type = te.plus_type;
      nd.sign = te.sign;
      nd.a = te.a;
      nd.b = te.b;
      nd.slots = name_slots(te, conv);
      g.nodes.push_back(nd);
      const int node = static_cast<int>(g.nodes.size()) - 1;
      for (int j = 0; j < 3; ++j) {
        close_arc(r3->ids[j], node, std::abs(r3->before[j]));
        open[r3->ids[j]] = OpenArc{node, 0};
      }
      apply_event(cur, ev);
    } else if (const auto* cs = std::get_if<CyclicShift>(&ev)) {
      for (int p = 0; p < cs->k; ++p) open.at(cur.ids[p]).phi += 1;
      apply_event(cur, ev);
    } else {
      apply_event(cur, ev);
    }
    if (e + 1 == per_rot) seam1 = cur;
  }

  g.seam_end = cur.ids;
  for (size_t p = 0; p < cur.ids.size(); ++p)
    close_arc(cur.ids[p], -1, std::abs(cur.word.letters[p]));
  if (!open.empty()) bug("crossings alive past the end of the log");

  std::vector<int> in(g.nodes.size(), 0), out(g.nodes.size(), 0);
  for (const TraceArc& a : g.arcs) {
    if (a.to_node >= 0) ++in[a.to_node];
    if (a.from_node >= 0) ++out[a.from_node];
  }
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    const bool triple = g.nodes[v].kind == TraceNode::Kind::triple;
    const int want_in = triple ? 3 : g.nodes[v].kind == TraceNode::Kind::death ? 2 : 0;
    const int want_out = triple ? 3 : g.nodes[v].kind == TraceNode::Kind::birth ? 2 : 0;
    if (in[v] != want_in || out[v] != want_out)
      bug("node has the wrong number of incident arcs");
  }

  if (seam1.ids.size() != g.seam_start.size())
    bug("diagram changed length over one rotation");
  for (size_t p = 0; p < g.seam_start.size(); ++p)
    g.deck[g.seam_start[p]] = seam1.ids[p];
  for (size_t e = 0; e < total; ++e) {
    const auto* r2p = std::get_if<R2Plus>(&log.events[e]);
    if (r2p == nullptr) continue;
    const auto* next = std::get_if<R2Plus>(&log.events[(e + per_rot) % total]);
    if (next == nullptr) bug("log is not rotation-periodic");
    g.deck[r2p->new_ids.first] = next->new_ids.first;
    g.deck[r2p->new_ids.second] = next->new_ids.second;
  }
  for (const auto& [x, y] : g.deck)
    if (g.marking.at(x) != g.marking.at(y))
      bug("rotation shift does not preserve markings");

  return g;
}

std::vector<TraceCircle> trace_circles(TraceGraph& g) {
  std::vector<CrossingId> ids;
  ids.reserve(g.arcs_of.size());
  for (const auto& [id, arcs] : g.arcs_of) ids.push_back(id);
  std::map<CrossingId, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  std::vector<int> parent(ids.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](CrossingId a, CrossingId b) {
    parent[find(index.at(a))] = find(index.at(b));
  };

  for (const TraceNode& nd : g.nodes)
    if (nd.kind != TraceNode::Kind::triple) unite(nd.ids[0], nd.ids[1]);
  if (g.seam_start.size() != g.seam_end.size())
    bug("seam identification is not positional");
  for (size_t p = 0; p < g.seam_start.size(); ++p)
    unite(g.seam_start[p], g.seam_end[p]);

  // component representative: the smallest first arc of a member crossing
  std::map<int, int> comp_start;
  for (const CrossingId id : ids) {
    const int root = find(index.at(id));
    const int fa = g.arcs_of.at(id).front();
    auto it = comp_start.find(root);
    if (it == comp_start.end() || fa < it->second) comp_start[root] = fa;
  }

  struct Raw {
    int start_arc = 0;
    int marking = 0;
    std::pair<int, int> cls{0, 0};
    std::vector<int> members;
  };
  std::vector<Raw> raw;
  std::vector<int> order;
  for (const auto& [root, start] : comp_start) order.push_back(start);
  std::sort(order.begin(), order.end());

  const WalkCtx ctx = make_ctx(g);
  std::vector<char> visited(g.arcs.size(), 0);
  for (const int start : order) {
    Raw r;
    r.start_arc = start;
    const WalkPos p0{start, 1};
    WalkPos p = p0;
    long long phi = 0, t = 0;
    do {
      if (visited[p.arc]) bug("resolution is not two-regular");
      visited[p.arc] = 1;
      r.members.push_back(p.arc);
      step(ctx, p, phi, t);
    } while (!(p == p0));
    if (phi < 0 || (phi == 0 && t < 0)) {
      phi = -phi;
      t = -t;
    }
    r.cls = {static_cast<int>(phi), static_cast<int>(t)};
    r.marking = g.marking.at(g.arcs[start].id);
    for (const int arc : r.members)
      if (g.marking.at(g.arcs[arc].id) != r.marking)
        bug("marking is not constant along a circle");
    raw.push_back(std::move(r));
  }
  for (const char v : visited)
    if (!v) bug("an arc belongs to no circle");

  std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
    return std::tie(x.marking, x.cls, x.start_arc) <
           std::tie(y.marking, y.cls, y.start_arc);
  });

  std::vector<TraceCircle> circles;
  int ordinal = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && (raw[i].marking != raw[i - 1].marking || raw[i].cls != raw[i - 1].cls))
      ordinal = 0;
    TraceCircle c;
    c.marking = raw[i].marking;
    c.torus_class = raw[i].cls;
    c.members = std::move(raw[i].members);
    c.name = "(" + std::to_string(c.marking) + ",(" +
             std::to_string(c.torus_class.first) + "," +
             std::to_string(c.torus_class.second) + ")," +
             std::to_string(ordinal) + ")";
    for (const int arc : c.members) g.arcs[arc].circle = static_cast<int>(i);
    circles.push_back(std::move(c));
    ++ordinal;
  }
  return circles;
}

int circle_of(const TraceGraph& g, CrossingId id) {
  const int c = g.arcs[g.arcs_of.at(id).front()].circle;
  if (c < 0) bug("circles have not been computed");
  return c;
}

std::vector<int> crossing_monodromy(const BraidWord& w) {
  const EventLog log = generate_rot(w, 1);
  const MarkedDiagram fin = replay(log).back();
  std::vector<int> perm(log.initial.ids.size(), -1);
  std::vector<int> hit(fin.ids.size(), 0);
  for (size_t p = 0; p < log.initial.ids.size(); ++p) {
    const auto it =
        std::find(fin.ids.begin(), fin.ids.end(), log.initial.ids[p]);
    if (it == fin.ids.end()) continue;
    perm[p] = static_cast<int>(it - fin.ids.begin());
    if (++hit[perm[p]] > 1) bug("two crossings share a final position");
  }
  return perm;
}

std::vector<int> circle_monodromy(const TraceGraph& g,
                                  const std::vector<TraceCircle>& circles) {
  std::vector<int> perm(circles.size(), -1);
  for (size_t i = 0; i < circles.size(); ++i) {
    for (const int arc : circles[i].members) {
      const int j = circle_of(g, g.deck.at(g.arcs[arc].id));
      if (perm[i] == -1)
        perm[i] = j;
      else if (perm[i] != j)
        bug("rotation shift does not act on circles");
    }
  }
  std::vector<int> seen(circles.size(), 0);
  for (const int v : perm) {
    if (v < 0) bug("a circle has no image under the rotation shift");
    ++seen[v];
  }
  for (const int s : seen)
    if (s != 1) bug("rotation shift is not a circle permutation");
  return perm;
}

ESet detect_generalized_trihedrons(const TraceGraph& g) {
  const WalkCtx ctx = make_ctx(g);
  std::vector<int> triples;
  for (size_t v = 0; v < g.nodes.size(); ++v)
    if (g.nodes[v].kind == TraceNode::Kind::triple)
      triples.push_back(static_cast<int>(v));

  struct EdgeEnd {
    CrossingId at_v = -1;
    long long phi = 0;
    long long t = 0;
  };
  // follows one germ of u along the resolution until it first reaches u
  // (no edge) or v (a candidate edge with its winding)
  auto germ_walk = [&](int u, int v, WalkPos p) -> std::optional<EdgeEnd> {
    long long phi = 0, t = 0;
    for (size_t steps = 0; steps <= 2 * g.arcs.size() + 4; ++steps) {
      const CrossingId on = g.arcs[p.arc].id;
      const int node = step(ctx, p, phi, t);
      if (node >= 0 && g.nodes[node].kind == TraceNode::Kind::triple) {
        if (node == v) return EdgeEnd{on, phi, t};
        if (node == u) return std::nullopt;
      }
    }
    bug("edge walk did not terminate");
  };
  auto adjacent_arc = [&](int node, CrossingId id, int dir) {
    for (const int arc : g.arcs_of.at(id))
      if ((dir > 0 ? g.arcs[arc].from_node : g.arcs[arc].to_node) == node)
        return WalkPos{arc, dir};
    bug("strand does not pass through the node");
  };
  auto match = [&](int u, int v) {
    std::array<std::vector<EdgeEnd>, 3> cand;
    for (int s = 0; s < 3; ++s)
      for (const int dir : {1, -1})
        if (const auto e = germ_walk(u, v, adjacent_arc(u, g.nodes[u].ids[s], dir)))
          cand[s].push_back(*e);
    for (const EdgeEnd& e0 : cand[0])
      for (const EdgeEnd& e1 : cand[1])
        for (const EdgeEnd& e2 : cand[2]) {
          if (e0.at_v == e1.at_v || e0.at_v == e2.at_v || e1.at_v == e2.at_v)
            continue;
          if (e0.phi == e1.phi && e1.phi == e2.phi && e0.t == e1.t &&
              e1.t == e2.t)
            return true;
        }
    return false;
  };

  ESet result;
  std::map<int, bool> alive;
  for (const int v : triples) alive[v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const int u : triples) {
      if (!alive[u]) continue;
      for (const int v : triples) {
        if (v <= u || !alive[v] || g.nodes[v].sign == g.nodes[u].sign) continue;
        if (match(u, v)) {
          alive[u] = false;
          alive[v] = false;
          result.pairing.emplace_back(u, v);
          changed = true;
          break;
        }
      }
    }
  }
  for (const int v : triples)
    if (alive[v]) result.members.push_back(v);
  return result;
}

}  // namespace braidrot
