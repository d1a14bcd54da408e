#include "braidrot/io.hpp"

#include <sstream>
#include <stdexcept>

namespace braidrot {

std::vector<std::pair<std::string, std::string>> poly_map(
    const LaurentPoly& p) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) out.emplace_back(e.str(), c.str());
  return out;
}

namespace {

std::string node_label(const TraceNode& nd) {
  std::ostringstream s;
  switch (nd.kind) {
    case TraceNode::Kind::triple:
      s << (nd.sign > 0 ? "+" : "-") << "(" << nd.a << "," << nd.b << ")"
        << (nd.plus_type ? "+" : "-") << " #" << nd.event_index;
      break;
    case TraceNode::Kind::birth:
      s << "R2+ #" << nd.event_index;
      break;
    case TraceNode::Kind::death:
      s << "R2- #" << nd.event_index;
      break;
  }
  return s.str();
}

}  // namespace

std::string trace_dot(const TraceGraph& g,
                      const std::vector<TraceCircle>& circles) {
  std::ostringstream out;
  out << "digraph trace {\n  rankdir=LR;\n"
      << "  seam [shape=doublecircle, label=\"seam\"];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const TraceNode& nd = g.nodes[i];
    const char* shape =
        nd.kind == TraceNode::Kind::triple ? "triangle" : "circle";
    out << "  n" << i << " [shape=" << shape << ", label=\"" << node_label(nd)
        << "\"];\n";
  }
  for (const TraceArc& a : g.arcs) {
    if (a.circle < 0 || a.circle >= static_cast<int>(circles.size()))
      throw std::invalid_argument("trace_dot needs computed circles");
    out << "  ";
    if (a.from_node < 0)
      out << "seam";
    else
      out << "n" << a.from_node;
    out << " -> ";
    if (a.to_node < 0)
      out << "seam";
    else
      out << "n" << a.to_node;
    out << " [label=\"" << a.sticker << " " << circles[a.circle].name
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace braidrot
