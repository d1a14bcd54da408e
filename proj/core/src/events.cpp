#include "braidrot/events.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace braidrot {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("event replay: " + what);
}

void check_range(const MarkedDiagram& d, int position, int span,
                 const char* kind) {
  if (position < 0 || position + span > d.length()) {
    std::ostringstream os;
    os << kind << " at position " << position << " does not fit a word of "
       << d.length() << " letters";
    fail(os.str());
  }
}

void apply_r2plus(MarkedDiagram& d, const R2Plus& e) {
  if (e.position < 0 || e.position > d.length())
    fail("R2Plus position out of range");
  if (e.letters.first != -e.letters.second || e.letters.first == 0)
    fail("R2Plus letters are not an inverse pair");
  int g = std::abs(e.letters.first);
  if (g >= d.word.n) fail("R2Plus letter index exceeds strand count");
  auto wit = d.word.letters.begin() + e.position;
  d.word.letters.insert(wit, {e.letters.first, e.letters.second});
  auto iit = d.ids.begin() + e.position;
  d.ids.insert(iit, {e.new_ids.first, e.new_ids.second});
}

void apply_r2minus(MarkedDiagram& d, const R2Minus& e) {
  check_range(d, e.position, 2, "R2Minus");
  int a = d.word.letters[e.position];
  int b = d.word.letters[e.position + 1];
  if (a != -b) fail("R2Minus letters are not a cancelling pair");
  if (d.ids[e.position] != e.dead_ids.first ||
      d.ids[e.position + 1] != e.dead_ids.second)
    fail("R2Minus ids do not match the diagram");
  d.word.letters.erase(d.word.letters.begin() + e.position,
                       d.word.letters.begin() + e.position + 2);
  d.ids.erase(d.ids.begin() + e.position, d.ids.begin() + e.position + 2);
}

void apply_r3(MarkedDiagram& d, const R3& e) {
  check_range(d, e.position, 3, "R3");
  for (int t = 0; t < 3; ++t) {
    if (d.word.letters[e.position + t] != e.before[t])
      fail("R3 before-letters do not match the diagram");
    if (d.ids[e.position + t] != e.ids[t])
      fail("R3 ids do not match the diagram");
  }
  if (!r3_applicable(e.before[0], e.before[1], e.before[2]))
    fail("R3 letters do not admit a braid relation");
  auto expect = r3_rewrite(e.before[0], e.before[1], e.before[2]);
  if (expect != e.after) fail("R3 after-letters are not the braid rewrite");
  for (int t = 0; t < 3; ++t) d.word.letters[e.position + t] = e.after[t];
  // Ids follow their strand pairs: the outer two change places.
  std::swap(d.ids[e.position], d.ids[e.position + 2]);
}

void apply_exchange(MarkedDiagram& d, const DistantExchange& e) {
  check_range(d, e.position, 2, "DistantExchange");
  int a = std::abs(d.word.letters[e.position]);
  int b = std::abs(d.word.letters[e.position + 1]);
  if (std::abs(a - b) < 2) fail("DistantExchange letters do not commute");
  std::swap(d.word.letters[e.position], d.word.letters[e.position + 1]);
  std::swap(d.ids[e.position], d.ids[e.position + 1]);
}

void apply_shift(MarkedDiagram& d, const CyclicShift& e) {
  int len = d.length();
  if (len == 0) fail("CyclicShift on an empty word");
  int k = e.k % len;
  if (k < 0) k += len;
  std::rotate(d.word.letters.begin(), d.word.letters.begin() + k,
              d.word.letters.end());
  std::rotate(d.ids.begin(), d.ids.begin() + k, d.ids.end());
  d.phase += e.k;
}

}  // namespace

bool r3_applicable(int a, int b, int c) {
  int i = std::abs(a), j = std::abs(b), k = std::abs(c);
  if (i == 0 || j == 0) return false;
  if (i != k || std::abs(i - j) != 1) return false;
  bool sa = a > 0, sb = b > 0, sc = c > 0;
  if (sa == sc && sa != sb) return false;  // no strand height order fits
  return true;
}

std::array<int, 3> r3_rewrite(int a, int b, int c) {
  auto sign = [](int x) { return x > 0 ? 1 : -1; };
  int i = std::abs(a), j = std::abs(b);
  // Indices exchange between the two generators; each sign stays with the
  // strand pair it crosses, so the sign pattern reverses.
  return {sign(c) * j, sign(b) * i, sign(a) * j};
}

void apply_event(MarkedDiagram& d, const Event& e) {
  std::visit(
      [&d](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, R2Plus>) apply_r2plus(d, ev);
        else if constexpr (std::is_same_v<T, R2Minus>) apply_r2minus(d, ev);
        else if constexpr (std::is_same_v<T, R3>) apply_r3(d, ev);
        else if constexpr (std::is_same_v<T, DistantExchange>)
          apply_exchange(d, ev);
        else apply_shift(d, ev);
      },
      e);
}

int EventLog::r3_count() const {
  int count = 0;
  for (const auto& e : events)
    if (std::holds_alternative<R3>(e)) ++count;
  return count;
}

std::vector<MarkedDiagram> replay(const EventLog& log) {
  std::vector<MarkedDiagram> states;
  states.reserve(log.events.size() + 1);
  MarkedDiagram d = log.initial;
  if (log.events.empty()) {
    states.push_back(d);
    return states;
  }
  for (std::size_t idx = 0; idx < log.events.size(); ++idx) {
    try {
      apply_event(d, log.events[idx]);
    } catch (const std::runtime_error& err) {
      std::ostringstream os;
      os << "event " << idx << " failed: " << err.what();
      throw std::runtime_error(os.str());
    }
    states.push_back(d);
  }
  return states;
}

EventLog mirror_log(const EventLog& log) {
  EventLog out = log;
  for (int& g : out.initial.word.letters) g = -g;
  for (Event& e : out.events) {
    if (auto* p = std::get_if<R2Plus>(&e)) {
      p->letters.first = -p->letters.first;
      p->letters.second = -p->letters.second;
    } else if (auto* r = std::get_if<R3>(&e)) {
      for (int t = 0; t < 3; ++t) {
        r->before[t] = -r->before[t];
        r->after[t] = -r->after[t];
      }
    }
  }
  return out;
}

MarkedDiagram snapshot_at(const EventLog& log, int event_index) {
  if (event_index < 0 ||
      static_cast<std::size_t>(event_index) >= log.events.size())
    throw std::invalid_argument("snapshot_at: event index out of range");
  if (!std::holds_alternative<R3>(log.events[event_index]))
    throw std::invalid_argument("snapshot_at: event is not a triple move");
  MarkedDiagram d = log.initial;
  for (int idx = 0; idx < event_index; ++idx)
    apply_event(d, log.events[idx]);
  return d;
}

}  // namespace braidrot
