#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braidrot/characters.hpp"
#include "braidrot/io.hpp"
#include "braidrot/loop.hpp"

using namespace braidrot;
using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 ok, 2 braid parse, 3 non-knot, 4 invalid family,
// 5 internal replay inconsistency
struct CliError {
  int code;
  std::string msg;
};

struct RunSpec {
  std::string braid;
  int n = 0;
  int l = 1;
  std::vector<std::string> family;
  int degree = -1;
  std::string against = "reverse";
  std::string format = "text";
  std::string dot;
  int cables = 2;
  bool twist = true;
};

BraidWord read_braid(const std::string& text, int n) {
  BraidWord w;
  try {
    w = parse_braid(text, n);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("braid parse error: ") + e.what()};
  }
  if (!is_knot(w))
    throw CliError{3, "the closure of '" + text + "' is not a knot"};
  return w;
}

FamilySelector read_family(const std::string& text, int degree, int n) {
  try {
    FamilySelector f = parse_family(text, degree);
    check_family(f, n);
    return f;
  } catch (const std::invalid_argument& e) {
    throw CliError{4, std::string("invalid family: ") + e.what()};
  }
}

EventLog make_log(const BraidWord& w, int l) {
  const EventLog log = generate_rot(w, l);
  if (log.events.size() > 200000)
    std::cerr << "log generated: " << log.events.size() << " events\n";
  return log;
}

json poly_json(const LaurentPoly& p) {
  json m = json::object();
  for (const auto& [e, c] : poly_map(p)) m[e] = c;
  return m;
}

json braid_json(const BraidWord& w) {
  return {{"word", braid_to_string(w)}, {"n", w.n}};
}

json circles_json(const std::vector<TraceCircle>& circles) {
  json a = json::array();
  for (const auto& c : circles)
    a.push_back({{"name", c.name},
                 {"marking", c.marking},
                 {"torus_class", {c.torus_class.first, c.torus_class.second}},
                 {"arcs", c.members.size()}});
  return a;
}

json table_json(const CharacterTable& t,
                const std::vector<TraceCircle>& circles) {
  json entries = json::array();
  for (const auto& [key, value] : t.entries) {
    json names = json::array();
    for (const int k : key) names.push_back(circles[k].name);
    entries.push_back(
        {{"type", t.tag}, {"names", names}, {"value", poly_json(value)}});
  }
  return {{"tag", t.tag},
          {"degree", t.degree},
          {"l", t.l},
          {"entries", entries}};
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_table_text(const CharacterTable& t,
                      const std::vector<TraceCircle>& circles) {
  std::cout << "# " << t.tag << " degree=" << t.degree << " l=" << t.l
            << "\n";
  for (const auto& [key, value] : t.entries) {
    for (size_t i = 0; i < key.size(); ++i)
      std::cout << (i ? " " : "") << circles[key[i]].name;
    std::cout << " -> " << value.to_string() << "\n";
  }
}

// the families a distinguish run compares when none are named explicitly:
// every valid degree-0 type, plus the degree-d families when requested
std::vector<FamilySelector> default_families(int n, int degree) {
  std::vector<FamilySelector> out;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (const bool plus : {false, true}) {
        const int third = plus ? a + b - n : a + b;
        if (third < 1 || third >= n) continue;
        FamilySelector f;
        f.kind = FamilySelector::Kind::deg0;
        f.a = a;
        f.b = b;
        f.plus_type = plus;
        out.push_back(f);
      }
  if (degree > 0) {
    if (n % 3 == 0) {
      FamilySelector f;
      f.kind = FamilySelector::Kind::thirds;
      f.d = degree;
      f.corner = Corner::low;
      out.push_back(f);
      if (degree % 2 == 0) {
        f.corner = Corner::high;
        out.push_back(f);
      }
    }
    if (degree == 1 && n > 3) {
      FamilySelector f;
      f.kind = FamilySelector::Kind::nm2;
      out.push_back(f);
    }
  }
  return out;
}

CharacterTable table_for(const EventLog& log, const TraceGraph& g,
                         const std::vector<TraceCircle>& circles,
                         const FamilySelector& f) {
  if (f.kind == FamilySelector::Kind::deg0)
    return characters0(g, circles, f.a, f.b, f.plus_type);
  return characters_d(log, g, circles, f);
}

int run_invariant(const RunSpec& s) {
  const BraidWord w = read_braid(s.braid, s.n);
  if (s.family.empty()) throw CliError{4, "invariant needs --family"};
  const FamilySelector f = read_family(s.family.front(), s.degree, s.n);
  const LaurentPoly value = eval_family(make_log(w, s.l), f);
  if (s.format == "json")
    print_json({{"schema", 1},
                {"command", "invariant"},
                {"braid", braid_json(w)},
                {"l", s.l},
                {"family", family_to_string(f)},
                {"value", poly_json(value)}});
  else
    std::cout << value.to_string() << "\n";
  return 0;
}

int run_characters(const RunSpec& s) {
  const BraidWord w = read_braid(s.braid, s.n);
  if (s.family.empty()) throw CliError{4, "characters needs --family"};
  const FamilySelector f = read_family(s.family.front(), s.degree, s.n);

  // mirror families are evaluated as the base family on the mirrored log
  EventLog log = make_log(w, s.l);
  FamilySelector base = f;
  if (f.mirror) {
    log = mirror_log(log);
    base.mirror = false;
  }
  TraceGraph g = build_trace(log);
  const auto circles = trace_circles(g);
  CharacterTable t = table_for(log, g, circles, base);
  t.tag = family_to_string(f);

  if (s.format == "json")
    print_json({{"schema", 1},
                {"command", "characters"},
                {"braid", braid_json(w)},
                {"l", s.l},
                {"metadata", {{"winding", "l-fold cover"}}},
                {"circles", circles_json(circles)},
                {"table", table_json(t, circles)}});
  else
    print_table_text(t, circles);
  return 0;
}

int run_trace(const RunSpec& s) {
  const BraidWord w = read_braid(s.braid, s.n);
  const EventLog log = make_log(w, s.l);
  TraceGraph g = build_trace(log);
  const auto circles = trace_circles(g);
  const auto circle_perm = circle_monodromy(g, circles);
  const auto surviving = crossing_monodromy(w);

  std::map<std::string, int> census;
  for (const auto& nd : g.nodes) {
    if (nd.kind != TraceNode::Kind::triple) continue;
    std::ostringstream key;
    key << (nd.sign > 0 ? "+" : "-") << "(" << nd.a << "," << nd.b << ")"
        << (nd.plus_type ? "+" : "-");
    ++census[key.str()];
  }

  if (!s.dot.empty()) {
    std::ofstream out(s.dot);
    if (!out) throw CliError{1, "cannot open dot file '" + s.dot + "'"};
    out << trace_dot(g, circles);
    if (!out.flush()) throw CliError{1, "cannot write dot file '" + s.dot + "'"};
  }

  if (s.format == "json") {
    json cj = json::object();
    for (const auto& [k, v] : census) cj[k] = v;
    print_json({{"schema", 1},
                {"command", "trace"},
                {"braid", braid_json(w)},
                {"l", s.l},
                {"metadata", {{"winding", "l-fold cover"}}},
                {"events", log.events.size()},
                {"triple_nodes", g.triple_count()},
                {"triple_census", cj},
                {"circles", circles_json(circles)},
                {"circle_monodromy", circle_perm},
                {"surviving_crossings", surviving}});
  } else {
    std::cout << "braid: " << braid_to_string(w) << " (n=" << w.n
              << ", l=" << s.l << ")\n"
              << "events: " << log.events.size()
              << "  triple nodes: " << g.triple_count() << "\n";
    for (const auto& [k, v] : census)
      std::cout << "  " << k << ": " << v << "\n";
    std::cout << "circles: " << circles.size() << "\n";
    for (const auto& c : circles)
      std::cout << "  " << c.name << " marking=" << c.marking << " arcs=("
                << c.members.size() << ")\n";
    std::cout << "circle monodromy:";
    for (const int v : circle_perm) std::cout << " " << v;
    std::cout << "\nsurviving crossings:";
    for (const int v : surviving) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

int run_distinguish(const RunSpec& s) {
  const BraidWord a = read_braid(s.braid, s.n);
  const BraidWord b =
      s.against == "reverse" ? reverse(a) : read_braid(s.against, s.n);

  std::vector<FamilySelector> fams;
  if (!s.family.empty()) {
    for (const auto& text : s.family) {
      const FamilySelector f = read_family(text, s.degree, s.n);
      if (f.mirror)
        throw CliError{4,
                       "mirror families do not enter a distinguish run; "
                       "compare the mirrored words directly"};
      fams.push_back(f);
    }
  } else {
    fams = default_families(s.n, s.degree);
  }

  const EventLog la = make_log(a, s.l);
  const EventLog lb = make_log(b, s.l);
  TraceGraph ga = build_trace(la);
  TraceGraph gb = build_trace(lb);
  const auto ca = trace_circles(ga);
  const auto cb = trace_circles(gb);
  std::vector<CharacterTable> ta, tb;
  for (const auto& f : fams) {
    ta.push_back(table_for(la, ga, ca, f));
    tb.push_back(table_for(lb, gb, cb, f));
  }
  const bool same = compare_invariants(ta, ca, tb, cb);

  // witness: the first family whose table pair already differs on its own;
  // the verdict may also come from the joint comparison alone
  int witness = -1;
  if (!same) {
    for (size_t i = 0; i < fams.size(); ++i) {
      const std::vector<CharacterTable> wa{ta[i]}, wb{tb[i]};
      if (!compare_invariants(wa, ca, wb, cb)) {
        witness = static_cast<int>(i);
        break;
      }
    }
  }

  if (s.format == "json") {
    json fj = json::array();
    for (const auto& f : fams) fj.push_back(family_to_string(f));
    json doc{{"schema", 1},
             {"command", "distinguish"},
             {"braid", braid_json(a)},
             {"against", braid_json(b)},
             {"l", s.l},
             {"families", fj},
             {"verdict", same ? "CONJUGACY-COMPATIBLE" : "DISTINGUISHED"}};
    if (witness >= 0)
      doc["witness"] = {{"family", family_to_string(fams[witness])},
                        {"left", table_json(ta[witness], ca)},
                        {"right", table_json(tb[witness], cb)}};
    else if (!same)
      doc["witness"] = {{"joint", true}};
    doc["circles"] = {{"left", circles_json(ca)}, {"right", circles_json(cb)}};
    print_json(doc);
  } else {
    std::cout << (same ? "CONJUGACY-COMPATIBLE" : "DISTINGUISHED") << "\n";
    if (!same) {
      if (witness >= 0) {
        std::cout << "witness: " << family_to_string(fams[witness]) << "\n"
                  << "left:\n";
        print_table_text(ta[witness], ca);
        std::cout << "right:\n";
        print_table_text(tb[witness], cb);
      } else {
        std::cout << "witness: no single family differs; the full table "
                     "sets admit no common circle matching\n";
      }
    }
  }
  return 0;
}

int run_cable(const RunSpec& s) {
  const BraidWord w = read_braid(s.braid, s.n);
  const BraidWord c = cable(w, s.cables, s.twist);
  if (s.format == "json")
    print_json({{"schema", 1},
                {"command", "cable"},
                {"input", braid_json(w)},
                {"cables", s.cables},
                {"half_twist", s.twist},
                {"output", braid_json(c)}});
  else
    std::cout << braid_to_string(c) << "\n";
  return 0;
}

void common_flags(CLI::App* cmd, RunSpec& s, bool with_family) {
  cmd->add_option("--braid", s.braid, "braid word, e.g. \"1 -2 -3\"")
      ->required();
  cmd->add_option("--n", s.n, "strand count")->required();
  cmd->add_option("--l", s.l, "rotation multiplicity")
      ->check(CLI::PositiveNumber);
  if (with_family) {
    cmd->add_option("--family", s.family,
                    "family selector, e.g. \"deg0:(1,2)-\" or \"degd-l:2\"");
    cmd->add_option("--degree", s.degree, "Gauss degree for degd selectors");
  }
  cmd->add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-cocycle invariants of closed braids on the rotation loop"};
  app.require_subcommand(1);
  RunSpec s;

  CLI::App* inv = app.add_subcommand(
      "invariant", "evaluate a one-cocycle polynomial on the rotation loop");
  common_flags(inv, s, true);

  CLI::App* chars = app.add_subcommand(
      "characters", "evaluate the character table refining a family");
  common_flags(chars, s, true);

  CLI::App* trace = app.add_subcommand(
      "trace", "build the trace graph: circles, monodromy, census");
  common_flags(trace, s, false);
  trace->add_option("--dot", s.dot, "write a GraphViz rendering here");

  CLI::App* dist = app.add_subcommand(
      "distinguish", "compare character tables against another braid");
  common_flags(dist, s, true);
  dist->add_option("--against", s.against,
                   "second braid word, or \"reverse\" for the reversed word");

  CLI::App* cab = app.add_subcommand(
      "cable", "print the cabled word whose closure stays a knot");
  common_flags(cab, s, false);
  cab->add_option("--cables", s.cables, "number of parallel copies")
      ->check(CLI::PositiveNumber);
  cab->add_flag("!--no-twist", s.twist,
                "omit the positive half twist of the cable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return run_invariant(s);
    if (chars->parsed()) return run_characters(s);
    if (trace->parsed()) return run_trace(s);
    if (dist->parsed()) return run_distinguish(s);
    if (cab->parsed()) return run_cable(s);
    return 2;
  } catch (const CliError& e) {
    std::cerr << e.msg << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid family: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "replay inconsistency: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
