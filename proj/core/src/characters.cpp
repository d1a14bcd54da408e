#include "braidrot/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace braidrot {

namespace {

void drop_zeros(CharacterTable& t) {
  for (auto it = t.entries.begin(); it != t.entries.end();)
    it = it->second.is_zero() ? t.entries.erase(it) : std::next(it);
}

bool type_ok(int n, int a, int b, bool plus_type) {
  const int third = plus_type ? a + b - n : a + b;
  return a >= 1 && a <= n - 1 && b >= 1 && b <= n - 1 && third >= 1 &&
         third <= n - 1;
}

std::vector<int> node_key(const TraceGraph& g,
                          const std::vector<TraceCircle>& circles,
                          const TraceNode& nd) {
  std::vector<int> key{circle_of(g, nd.slots[0]), circle_of(g, nd.slots[1]),
                       circle_of(g, nd.slots[2])};
  for (const int c : key)
    if (c < 0 || c >= static_cast<int>(circles.size()))
      throw std::logic_error("characters: circle index out of range");
  return key;
}

std::string deg0_tag(int a, int b, bool plus_type) {
  FamilySelector f;
  f.kind = FamilySelector::Kind::deg0;
  f.a = a;
  f.b = b;
  f.plus_type = plus_type;
  return family_to_string(f);
}

}  // namespace

CharacterTable characters0(const TraceGraph& g,
                           const std::vector<TraceCircle>& circles, int a,
                           int b, bool plus_type) {
  CharacterTable t;
  t.tag = deg0_tag(a, b, plus_type);
  t.degree = 0;
  t.l = g.l;
  if (!type_ok(g.n, a, b, plus_type)) return t;
  for (const TraceNode& nd : g.nodes) {
    if (nd.kind != TraceNode::Kind::triple || nd.plus_type != plus_type ||
        nd.a != a || nd.b != b)
      continue;
    t.entries[node_key(g, circles, nd)].add_term(0, nd.sign);
  }
  drop_zeros(t);
  return t;
}

std::pair<CharacterTable, CharacterTable> pos_neg_characters(
    const TraceGraph& g, const ESet& e,
    const std::vector<TraceCircle>& circles, int a, int b, bool plus_type) {
  CharacterTable pos, neg;
  pos.tag = deg0_tag(a, b, plus_type) + ":pos";
  neg.tag = deg0_tag(a, b, plus_type) + ":neg";
  pos.l = neg.l = g.l;
  for (const int v : e.members) {
    const TraceNode& nd = g.nodes[v];
    if (nd.kind != TraceNode::Kind::triple || nd.plus_type != plus_type ||
        nd.a != a || nd.b != b)
      continue;
    CharacterTable& side = nd.sign > 0 ? pos : neg;
    side.entries[node_key(g, circles, nd)].add_term(0, 1);
  }
  return {pos, neg};
}

CharacterTable characters_d(const EventLog& log, const TraceGraph& g,
                            const std::vector<TraceCircle>& circles,
                            const FamilySelector& f, const Conventions& conv) {
  if (f.mirror)
    throw std::invalid_argument(
        "mirror families refine on the mirrored log, not directly");
  if (f.kind == FamilySelector::Kind::deg0)
    throw std::invalid_argument("degree-0 characters come from characters0");
  const int n = log.initial.word.n;
  check_family(f, n);
  const int d = f.kind == FamilySelector::Kind::nm2 ? 1 : f.d;
  if (d < 1) throw std::invalid_argument("the family needs a degree");

  CharacterTable t;
  t.tag = family_to_string(f);
  t.degree = d;
  t.l = g.l;

  for (const TripleEvent& mv : classify_all(log, conv)) {
    const auto insts = f.kind == FamilySelector::Kind::nm2
                           ? enumerate_nm2(mv, n)
                           : enumerate_configurations(mv, n, d, f.corner);
    if (insts.empty()) continue;
    const auto slots = name_slots(mv, conv);
    std::vector<int> base{circle_of(g, slots[0]), circle_of(g, slots[1]),
                          circle_of(g, slots[2])};
    std::map<std::vector<int>, long long> exponents;
    for (const ConfigInstance& inst : insts) {
      std::vector<int> key = base;
      key.reserve(3 + inst.slots.size());
      for (const CrossingId id : inst.slots)
        key.push_back(circle_of(g, id));
      exponents[std::move(key)] += inst.weight;
    }
    for (const auto& [key, e] : exponents) t.entries[key].add_term(e, mv.sign);
  }
  for (auto& [key, poly] : t.entries) poly.add_term(0, -poly.coeff(0));
  drop_zeros(t);
  for (const auto& [key, poly] : t.entries)
    for (const int c : key)
      if (c < 0 || c >= static_cast<int>(circles.size()))
        throw std::logic_error("characters: circle index out of range");
  return t;
}

bool compare_invariants(const std::vector<CharacterTable>& a,
                        const std::vector<TraceCircle>& circles_a,
                        const std::vector<CharacterTable>& b,
                        const std::vector<TraceCircle>& circles_b) {
  if (a.size() != b.size() || circles_a.size() != circles_b.size())
    return false;
  std::map<std::string, const CharacterTable*> by_tag;
  for (const auto& t : b)
    if (!by_tag.emplace(t.tag, &t).second)
      throw std::invalid_argument("duplicate character table tag");
  std::vector<std::pair<const CharacterTable*, const CharacterTable*>> pairs;
  for (const auto& t : a) {
    const auto it = by_tag.find(t.tag);
    if (it == by_tag.end() || t.degree != it->second->degree ||
        t.l != it->second->l)
      return false;
    pairs.emplace_back(&t, it->second);
  }

  // circles may only map within their (marking, torus class) group
  using GroupKey = std::pair<int, std::pair<int, int>>;
  std::map<GroupKey, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (size_t i = 0; i < circles_a.size(); ++i)
    groups[{circles_a[i].marking, circles_a[i].torus_class}].first.push_back(
        static_cast<int>(i));
  for (size_t i = 0; i < circles_b.size(); ++i)
    groups[{circles_b[i].marking, circles_b[i].torus_class}].second.push_back(
        static_cast<int>(i));
  std::vector<std::pair<std::vector<int>, std::vector<int>>> gs;
  for (const auto& [key, g] : groups) {
    if (g.first.size() != g.second.size()) return false;
    gs.push_back(g);
  }

  std::vector<int> sigma(circles_a.size(), -1);
  std::vector<char> adone(circles_a.size(), 0), bdone(circles_b.size(), 0);

  // checks every entry whose circles are all assigned so far, both ways
  auto consistent = [&]() {
    for (const auto& [ta, tb] : pairs) {
      int mapped = 0;
      for (const auto& [key, val] : ta->entries) {
        bool all = true;
        for (const int c : key) all = all && adone[c];
        if (!all) continue;
        std::vector<int> nk;
        nk.reserve(key.size());
        for (const int c : key) nk.push_back(sigma[c]);
        const auto it = tb->entries.find(nk);
        if (it == tb->entries.end() || !(it->second == val)) return false;
        ++mapped;
      }
      int covered = 0;
      for (const auto& [key, val] : tb->entries) {
        bool all = true;
        for (const int c : key) all = all && bdone[c];
        if (all) ++covered;
      }
      if (mapped != covered) return false;
    }
    return true;
  };

  std::function<bool(size_t)> rec = [&](size_t gi) -> bool {
    if (gi == gs.size()) return true;
    const auto& [xs, ys] = gs[gi];
    std::vector<int> perm = ys;
    std::sort(perm.begin(), perm.end());
    do {
      for (size_t k = 0; k < xs.size(); ++k) {
        sigma[xs[k]] = perm[k];
        adone[xs[k]] = 1;
        bdone[perm[k]] = 1;
      }
      if (consistent() && rec(gi + 1)) return true;
      for (size_t k = 0; k < xs.size(); ++k) {
        sigma[xs[k]] = -1;
        adone[xs[k]] = 0;
        bdone[perm[k]] = 0;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return rec(0);
}

}  // namespace braidrot
