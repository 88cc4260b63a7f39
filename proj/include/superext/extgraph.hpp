#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superext/weights.hpp"

namespace superext {

/// ext(lambda;nu): either pinned down, or only bracketed.
struct ExtValue {
  bool exact = true;
  int lo = 0;
  int hi = 0;

  static ExtValue Exact(int v) { return {true, v, v}; }
  static ExtValue Bounded(int lo, int hi) { return {false, lo, hi}; }

  std::string to_string() const;
  friend bool operator==(const ExtValue&, const ExtValue&) = default;
};

struct Neighbour {
  BlockWeight weight;
  std::int64_t multiplicity = 0;
};

/// All lambda with k_zero(lambda, nu) != 0, built from single and double
/// moves of nu and filtered by k_zero.  Sorted by weight_less.
std::vector<Neighbour> successors(const BlockWeight& nu);
/// All nu != lambda with k_zero(lambda, nu) != 0.
std::vector<Neighbour> predecessors(const BlockWeight& lambda);

ExtValue ext_block(const BlockWeight& lambda, const BlockWeight& nu);
ExtValue ext_general_q(const GeneralQWeight& eta, const GeneralQWeight& zeta);

enum class EdgeKind { K0, EXT, EXT1 };
const char* to_string(EdgeKind k);

struct GraphVertex {
  int id = 0;
  std::vector<int> twice;  // coordinates, numerators over 2
  int sign = 0;
  std::string diagram;
  int pari = 0;
  int tail = 0;
  int copy = -1;  // 0/1 for doubled Ext^1 vertices
};

struct GraphEdge {
  int src = 0;
  int dst = 0;
  EdgeKind kind = EdgeKind::K0;
  int multiplicity = 0;
  std::string kpoly;
  bool exact = true;
  std::optional<int> parity_offset;
};

struct ExtGraph {
  std::string algebra;
  std::string block;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  /// For doubled Ext^1 graphs: parity sum around each non-tree cycle.
  std::vector<int> cycle_parities;
};

/// K0 edges nu -> lambda with multiplicity k_zero(lambda, nu).
ExtGraph k0_graph(const std::vector<BlockWeight>& vertices);
/// Undirected ext edges, src the lower weight.
ExtGraph ext_graph(const std::vector<BlockWeight>& vertices);
ExtGraph ext1_graph_q(const std::vector<GeneralQWeight>& vertices);

struct BipartiteReport {
  std::vector<std::pair<int, int>> violations;  // vertex ids
  bool ok() const { return violations.empty(); }
};

/// coloring is indexed by vertex position.
BipartiteReport check_bipartite(const ExtGraph& g, const std::vector<int>& coloring);
/// relabel[i] is the position in g2 of vertex i of g1.
bool window_isomorphic(const ExtGraph& g1, const ExtGraph& g2, const std::vector<int>& relabel);

}  // namespace superext
