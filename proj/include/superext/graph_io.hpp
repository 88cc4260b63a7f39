#pragma once

#include <string>

#include "superext/extgraph.hpp"

namespace superext {

/// Stable JSON: {algebra, block, vertices:[...], edges:[...]}.
std::string graph_to_json(const ExtGraph& g);
/// Graphviz; double edges are drawn twice, inexact edges dashed.
std::string graph_to_dot(const ExtGraph& g);
/// One line per vertex and per edge.
std::string graph_to_ascii(const ExtGraph& g);

}  // namespace superext
