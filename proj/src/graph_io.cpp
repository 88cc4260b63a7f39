#include "superext/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace superext {

namespace {

std::string coords_text(const GraphVertex& v) {
  std::string s;
  if (v.sign != 0) s = v.sign > 0 ? "+ " : "- ";
  for (std::size_t i = 0; i < v.twice.size(); ++i) {
    if (i) s += ',';
    s += format_half(v.twice[i]);
  }
  if (v.copy >= 0) s += " [" + std::to_string(v.copy) + "]";
  return s;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_json(const ExtGraph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["algebra"] = g.algebra;
  j["block"] = g.block;
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices) {
    ordered_json o;
    o["id"] = v.id;
    ordered_json coords = ordered_json::array();
    for (int t : v.twice) coords.push_back(format_half(t));
    o["coords"] = coords;
    if (v.sign != 0) o["sign"] = v.sign > 0 ? "+" : "-";
    if (v.copy >= 0) o["copy"] = v.copy;
    o["diagram"] = v.diagram;
    o["pari"] = v.pari;
    o["tail"] = v.tail;
    j["vertices"].push_back(o);
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json o;
    o["src"] = e.src;
    o["dst"] = e.dst;
    o["kind"] = to_string(e.kind);
    o["multiplicity"] = e.multiplicity;
    o["kpoly"] = e.kpoly;
    o["exact"] = e.exact;
    if (e.parity_offset) o["parity_offset"] = *e.parity_offset;
    j["edges"].push_back(o);
  }
  if (!g.cycle_parities.empty()) j["cycle_parities"] = g.cycle_parities;
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const ExtGraph& g) {
  std::ostringstream out;
  const bool directed = g.edges.empty() || g.edges.front().kind != EdgeKind::EXT;
  out << (directed ? "digraph" : "graph") << " \"" << dot_escape(g.algebra + " " + g.block) << "\" {\n";
  for (const auto& v : g.vertices)
    out << "  v" << v.id << " [label=\"" << dot_escape(v.diagram) << "\\n" << dot_escape(coords_text(v))
        << "\"];\n";
  const char* arrow = directed ? " -> " : " -- ";
  for (const auto& e : g.edges) {
    for (int k = 0; k < std::max(1, e.multiplicity); ++k) {
      out << "  v" << e.src << arrow << "v" << e.dst;
      std::string attrs;
      if (!e.exact) attrs += "style=dashed";
      if (!e.kpoly.empty() && e.kpoly != "1" && e.kind == EdgeKind::K0)
        attrs += std::string(attrs.empty() ? "" : ",") + "label=\"" + dot_escape(e.kpoly) + "\"";
      if (!attrs.empty()) out << " [" << attrs << "]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_ascii(const ExtGraph& g) {
  std::ostringstream out;
  out << g.algebra << " " << g.block << ": " << g.vertices.size() << " vertices, " << g.edges.size()
      << " edges\n";
  for (const auto& v : g.vertices)
    out << "  v" << v.id << "  " << coords_text(v) << "  [" << v.diagram << "]  pari=" << v.pari
        << " tail=" << v.tail << "\n";
  for (const auto& e : g.edges) {
    out << "  v" << e.src << (e.kind == EdgeKind::EXT ? " -- " : " -> ") << "v" << e.dst << "  "
        << to_string(e.kind) << " x" << e.multiplicity;
    if (!e.kpoly.empty()) out << "  K=" << e.kpoly;
    if (!e.exact) out << "  (bound)";
    if (e.parity_offset) out << "  offset=" << *e.parity_offset;
    out << "\n";
  }
  return out.str();
}

}  // namespace superext
