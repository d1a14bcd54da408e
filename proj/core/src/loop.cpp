#include "braidrot/loop.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidrot {
namespace {

int delta_len(int m) { return m * (m - 1) / 2; }

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("rotation engine: " + what);
}

bool distant(int a, int b) {
  return std::abs(std::abs(a) - std::abs(b)) >= 2;
}

// ---- word-level plan for carrying sigma_1 through the half-twist ----
//
// The recursive pass below reduces every letter to the lowest generator,
// whose route through the half-twist interleaves with the sub-twist words.
// That route is planned once per (strand count, sign) on a plain letter
// vector: a chain of braid-relation windows (one per level, m-2 in total)
// glued together with commuting exchanges. Positions are relative to the
// letter being carried.

struct Mv {
  bool triple;  // false: exchange at pos/pos+1; true: relation at pos..pos+2
  int pos;
};

std::vector<int> projection(const std::vector<int>& w, int a) {
  std::vector<int> out;
  for (int x : w)
    if (std::abs(x) == a || std::abs(x) == a + 1) out.push_back(x);
  return out;
}

// Words are reachable from each other by exchanges alone iff every pair of
// non-commuting letter classes appears in the same relative order.
bool exchange_equivalent(const std::vector<int>& u, const std::vector<int>& v,
                         int m) {
  if (u.size() != v.size()) return false;
  for (int a = 1; a < m; ++a)
    if (projection(u, a) != projection(v, a)) return false;
  return true;
}

void plan_sort_to(std::vector<int>& w, const std::vector<int>& target,
                  std::vector<Mv>& plan) {
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (w[t] == target[t]) continue;
    std::size_t s = t + 1;
    while (s < w.size() && std::abs(w[s]) != std::abs(target[t])) ++s;
    if (s == w.size() || w[s] != target[t]) bug("glue: words not reorderable");
    for (std::size_t p = s; p > t; --p) {
      if (!distant(w[p], w[p - 1])) bug("glue: blocked exchange");
      std::swap(w[p], w[p - 1]);
      plan.push_back({false, static_cast<int>(p - 1)});
    }
  }
}

void word_r3(std::vector<int>& w, int pos) {
  auto res = r3_rewrite(w[pos], w[pos + 1], w[pos + 2]);
  w[pos] = res[0];
  w[pos + 1] = res[1];
  w[pos + 2] = res[2];
}

// Step k of the cascade works the window (s*k, k+1, k) at position 2k-1.
// Its third letter is the k-th generator of the inner half-twist block; it
// starts at m+k-1 and commutes left past the m-k-2 higher generators in
// between. One step reproduces the same layout one generator up, so the
// chain runs k = 1 .. m-2 and whatever letters remain afterwards reorder to
// the target by exchanges alone.
const std::vector<Mv>& cascade_plan(int m, int s) {
  thread_local std::map<std::pair<int, int>, std::vector<Mv>> cache;
  auto key = std::make_pair(m, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<int> w;
  const auto delta = delta_word(m).letters;
  if (s > 0) {
    w.push_back(1);
    w.insert(w.end(), delta.begin(), delta.end());
  } else {
    // state right after the low crossing was cancelled and recreated
    w.push_back(1);
    w.push_back(-1);
    for (int g = 2; g < m; ++g) w.push_back(g);
    const auto sub = delta_word(m - 1).letters;
    w.insert(w.end(), sub.begin(), sub.end());
  }
  std::vector<int> target = delta;
  target.push_back(s * (m - 1));

  std::vector<Mv> plan;
  for (int k = 1; k <= m - 2; ++k) {
    for (int t = 0; t <= m - k - 3; ++t) {
      const int p = m + k - 2 - t;
      if (!distant(w[p], w[p + 1])) bug("cascade: blocked exchange");
      std::swap(w[p], w[p + 1]);
      plan.push_back({false, p});
    }
    const int p = 2 * k - 1;
    if (w[p] != s * k || w[p + 1] != k + 1 || w[p + 2] != k)
      bug("cascade: window letters out of place");
    plan.push_back({true, p});
    word_r3(w, p);
  }
  if (!exchange_equivalent(w, target, m)) bug("cascade: glue not reachable");
  plan_sort_to(w, target, plan);
  return cache.emplace(key, std::move(plan)).first->second;
}

// ---- event emission ----

struct Builder {
  MarkedDiagram& d;
  std::vector<Event>& events;
  CrossingId& next_id;

  void emit(Event e) {
    apply_event(d, e);
    events.push_back(std::move(e));
  }
  std::pair<CrossingId, CrossingId> fresh_pair() {
    CrossingId a = next_id++;
    CrossingId b = next_id++;
    return {a, b};
  }
  R3 make_r3(int p) {
    std::array<int, 3> before{d.word.letters[p], d.word.letters[p + 1],
                              d.word.letters[p + 2]};
    return R3{p,
              {d.ids[p], d.ids[p + 1], d.ids[p + 2]},
              before,
              r3_rewrite(before[0], before[1], before[2])};
  }
};

void run_plan(Builder& b, int base, const std::vector<Mv>& plan) {
  for (const Mv& mv : plan) {
    if (mv.triple)
      b.emit(b.make_r3(base + mv.pos));
    else
      b.emit(DistantExchange{base + mv.pos});
  }
}

// Carries the letter s*sigma_i at q-1 through delta_word(m) at [q, q+N_m).
// Levels above 2 peel one row per recursion step; the lowest generator runs
// the planned cascade. A negative letter is cancelled against the matching
// half-twist crossing and recreated, which is where its id changes.
void pass_impl(Builder& b, int q, int i, int m, int s) {
  if (m == 2) {
    if (s < 0) {
      b.emit(R2Minus{q - 1, {b.d.ids[q - 1], b.d.ids[q]}});
      b.emit(R2Plus{q - 1, b.fresh_pair(), {1, -1}});
    }
    return;
  }
  if (i == 1) {
    if (s < 0) {
      b.emit(R2Minus{q - 1, {b.d.ids[q - 1], b.d.ids[q]}});
      b.emit(R2Plus{q - 1, b.fresh_pair(), {1, -1}});
    }
    run_plan(b, q - 1, cascade_plan(m, s));
    return;
  }
  for (int t = 0; t < i - 2; ++t) b.emit(DistantExchange{q - 1 + t});
  b.emit(b.make_r3(q + i - 3));
  for (int t = 0; t < m - i - 1; ++t) b.emit(DistantExchange{q + i - 1 + t});
  pass_impl(b, q + m - 1, i - 1, m - 1, s);
}

}  // namespace

namespace detail {

void pass_through_delta(MarkedDiagram& d, std::vector<Event>& out,
                        CrossingId& next_id, int q) {
  const int n = d.word.n;
  const int N = delta_len(n);
  if (q < 1 || q + N > d.length())
    throw std::invalid_argument("pass_through_delta: position out of range");
  const auto delta = delta_word(n).letters;
  for (int j = 0; j < N; ++j)
    if (d.word.letters[q + j] != delta[j])
      bug("pass expects the half-twist word after the carried letter");
  const int letter = d.word.letters[q - 1];
  const int i = std::abs(letter);
  const int s = letter > 0 ? 1 : -1;
  if (i == 0 || i >= n) bug("carried letter out of range");

  Builder b{d, out, next_id};
  pass_impl(b, q, i, n, s);

  for (int j = 0; j < N; ++j)
    if (d.word.letters[q - 1 + j] != delta[j])
      bug("half-twist word not restored after the pass");
  if (d.word.letters[q - 1 + N] != s * (n - i))
    bug("carried letter did not come out flipped");
}

}  // namespace detail

EventLog generate_rot(const BraidWord& gamma, int l) {
  if (l < 1) throw std::invalid_argument("generate_rot: l must be >= 1");
  if (!is_knot(gamma))
    throw std::invalid_argument("generate_rot: closure is not a knot");

  const int n = gamma.n;
  const int N = delta_len(n);
  const int c = gamma.length();

  EventLog log;
  log.l = l;
  log.initial.word = gamma;
  log.initial.ids.resize(c);
  std::iota(log.initial.ids.begin(), log.initial.ids.end(), CrossingId{0});

  MarkedDiagram d = log.initial;
  CrossingId next_id = c;
  Builder b{d, log.events, next_id};
  const auto delta = delta_word(n).letters;

  for (int half = 0; half < 2 * l; ++half) {
    const std::vector<int> at_start = d.word.letters;
    for (int j = 0; j < N; ++j)
      b.emit(R2Plus{j, b.fresh_pair(), {delta[j], -delta[j]}});
    b.emit(CyclicShift{N});
    for (int p = 1; p <= c; ++p)
      detail::pass_through_delta(d, log.events, next_id, N + c - p + 1);
    for (int t = 0; t < N; ++t) {
      const int pos = N - 1 - t;
      b.emit(R2Minus{pos, {d.ids[pos], d.ids[pos + 1]}});
    }
    if (d.word.letters != flip(BraidWord{n, at_start}).letters)
      bug("half rotation did not flip the braid");
  }
  if (d.word.letters != gamma.letters) bug("rotation did not close up");
  return log;
}

}  // namespace braidrot
