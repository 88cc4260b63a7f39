#include "superext/extgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "superext/diagrams.hpp"
#include "superext/error.hpp"
#include "superext/kpoly.hpp"

namespace superext {

std::string ExtValue::to_string() const {
  if (exact) return "Exact(" + std::to_string(lo) + ")";
  return "Bounded(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
}

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::K0: return "K0";
    case EdgeKind::EXT: return "EXT";
    case EdgeKind::EXT1: return "EXT1";
  }
  return "?";
}

namespace {

struct WeightLess {
  bool operator()(const BlockWeight& a, const BlockWeight& b) const { return weight_less(a, b); }
};
using WeightSet = std::set<BlockWeight, WeightLess>;

void add_signed_variants(const AlgebraContext& ctx, std::vector<int> slots, WeightSet& out) {
  std::sort(slots.begin(), slots.end(), std::greater<>());
  for (int s : {0, 1, -1}) {
    try {
      out.insert(weight_from_slots(ctx, slots, s));
    } catch (const Error&) {
    }
  }
}

std::vector<int> replace_one(std::vector<int> v, int from, int to) {
  *std::find(v.begin(), v.end(), from) = to;
  return v;
}

std::set<int> distinct(const std::vector<int>& v) { return {v.begin(), v.end()}; }

bool is_t1(const BlockWeight& w) { return w.ctx.family == Family::OSP && w.ctx.t == 1; }

std::vector<Neighbour> via_tau(std::vector<Neighbour> ks) {
  for (auto& k : ks) k.weight = tau_weight(k.weight);
  std::sort(ks.begin(), ks.end(), [](const Neighbour& a, const Neighbour& b) { return weight_less(a.weight, b.weight); });
  return ks;
}

}  // namespace

std::vector<Neighbour> successors(const BlockWeight& nu) {
  if (is_t1(nu)) return via_tau(successors(tau_inv_weight(nu)));
  const AlgebraContext& ctx = nu.ctx;
  const auto& c = nu.coords;
  const bool stacked = ctx.has_zero_stack();
  const int top = (c.empty() ? 0 : *std::max_element(c.begin(), c.end())) + 2 * ctx.n + 3;
  const std::set<int> occ = distinct(c);

  WeightSet cand;
  for (int a : occ) {
    for (int q = a + 1; q <= top; ++q) {
      if (occ.count(q) || (stacked && q == 0)) continue;
      add_signed_variants(ctx, replace_one(c, a, q), cand);
    }
  }
  if (stacked && std::count(c.begin(), c.end(), 0) >= 2) {
    for (int p = 1; p <= top; ++p) {
      if (occ.count(p)) continue;
      for (int q = p + 1; q <= top; ++q) {
        if (occ.count(q)) continue;
        add_signed_variants(ctx, replace_one(replace_one(c, 0, p), 0, q), cand);
      }
    }
  }
  std::vector<Neighbour> out;
  for (const auto& l : cand) {
    if (l == nu) continue;
    const auto k = k_zero(l, nu);
    if (k > 0) out.push_back({l, k});
  }
  return out;
}

std::vector<Neighbour> predecessors(const BlockWeight& lambda) {
  if (is_t1(lambda)) return via_tau(predecessors(tau_inv_weight(lambda)));
  const AlgebraContext& ctx = lambda.ctx;
  const auto& c = lambda.coords;
  const bool stacked = ctx.has_zero_stack();
  const std::set<int> occ = distinct(c);

  WeightSet cand;
  for (int q : occ) {
    if (stacked && q == 0) continue;
    const int lo = ctx.family == Family::GL ? q - 2 * ctx.n - 3 : 0;
    for (int a = lo; a < q; ++a) {
      if (occ.count(a) && !(stacked && a == 0)) continue;
      add_signed_variants(ctx, replace_one(c, q, a), cand);
    }
  }
  if (stacked) {
    for (int p : occ) {
      if (p == 0) continue;
      for (int q : occ) {
        if (q <= p) continue;
        add_signed_variants(ctx, replace_one(replace_one(c, p, 0), q, 0), cand);
      }
    }
  }
  std::vector<Neighbour> out;
  for (const auto& v : cand) {
    if (v == lambda) continue;
    const auto k = k_zero(lambda, v);
    if (k > 0) out.push_back({v, k});
  }
  return out;
}

ExtValue ext_block(const BlockWeight& lambda, const BlockWeight& nu) {
  if (!(lambda.ctx == nu.ctx)) throw Error(ErrorCode::ContextMismatch, "weights from different blocks");
  const AlgebraContext& ctx = lambda.ctx;
  const bool q_b0 = ctx.family == Family::Q && !ctx.half();
  if (lambda == nu) {
    // Self-extensions in the integral q block are left open by the theory.
    if (q_b0 && tail(lambda) > 0) return ExtValue::Bounded(0, 1);
    return ExtValue::Exact(0);
  }
  const auto k1 = k_zero(lambda, nu);
  const auto k2 = k_zero(nu, lambda);
  if (k1 == 0 && k2 == 0) return ExtValue::Exact(0);
  const BlockWeight& hi = k1 > 0 ? lambda : nu;
  const BlockWeight& lo = k1 > 0 ? nu : lambda;
  const int k = static_cast<int>(k1 > 0 ? k1 : k2);
  if (!q_b0) return ExtValue::Exact(k);

  const int n = ctx.n;
  if (n == 1) {
    // Rank one chains: q_2 is 0 - th - 2th - ..., q_3 is th - 0 - 2th - 3th - ...
    const int a = hi.coords[0], b = lo.coords[0];
    bool edge;
    if (ctx.ell == 0) {
      edge = a == b + 1;
    } else {
      edge = (b == 0 && (a == 1 || a == 2)) || (b >= 2 && a == b + 1);
    }
    return ExtValue::Exact(edge ? 1 : 0);
  }
  if (hi.coords[n - 1] > 1 + ctx.ell) return ExtValue::Exact(k);
  if (ctx.ell == 1 && hi.coords[n - 1] == 1 && hi.coords[n - 2] > 4) return ExtValue::Exact(k);
  return ExtValue::Bounded(0, k);
}

ExtValue ext_general_q(const GeneralQWeight& eta, const GeneralQWeight& zeta) {
  if (eta.m() != zeta.m()) throw Error(ErrorCode::SizeMismatch, "weights of different q_m");
  if (!(core_of(eta) == core_of(zeta))) return ExtValue::Exact(0);
  if (atypicality(eta) == 0) {
    if (!(eta == zeta)) return ExtValue::Exact(0);
    return has_zero_coordinate(eta) ? ExtValue::Bounded(0, 1) : ExtValue::Exact(0);
  }
  const auto a = reduce(eta).second;
  const auto b = reduce(zeta).second;
  const ExtValue v = ext_block(a, b);
  if (v.hi > 2) throw std::logic_error("ext exceeds 2 for a q weight pair");
  return v;
}

// ---------------------------------------------------------------------------
// Graphs

namespace {

GraphVertex vertex_of(const BlockWeight& w, int id) {
  GraphVertex v;
  v.id = id;
  v.twice = w.twice();
  v.sign = w.sign;
  v.diagram = render_ascii(diagram_of(w));
  v.pari = pari_abs(w);
  v.tail = tail(w);
  return v;
}

std::vector<BlockWeight> canonical(std::vector<BlockWeight> v) {
  std::sort(v.begin(), v.end(), weight_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (const auto& w : v)
    if (!(w.ctx == v.front().ctx)) throw Error(ErrorCode::ContextMismatch, "vertices from different blocks");
  return v;
}

std::string k0_label(const BlockWeight& lambda, const BlockWeight& nu) {
  const auto k = k_restricted(lambda, nu, s_zero(lambda, nu));
  return k ? k->to_string() : "?";
}

ExtGraph header(const std::vector<BlockWeight>& ws) {
  ExtGraph g;
  if (!ws.empty()) {
    g.algebra = ws.front().ctx.name();
    g.block = ws.front().ctx.block_name();
  }
  for (std::size_t i = 0; i < ws.size(); ++i) g.vertices.push_back(vertex_of(ws[i], static_cast<int>(i)));
  return g;
}

void sort_edges(ExtGraph& g) {
  std::stable_sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
}

}  // namespace

ExtGraph k0_graph(const std::vector<BlockWeight>& vertices) {
  const auto ws = canonical(vertices);
  ExtGraph g = header(ws);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (i == j) continue;
      const auto k = k_zero(ws[j], ws[i]);
      if (k == 0) continue;
      g.edges.push_back(GraphEdge{static_cast<int>(i), static_cast<int>(j), EdgeKind::K0,
                                  static_cast<int>(k), k0_label(ws[j], ws[i]), true, std::nullopt});
    }
  }
  sort_edges(g);
  return g;
}

ExtGraph ext_graph(const std::vector<BlockWeight>& vertices) {
  const auto ws = canonical(vertices);
  ExtGraph g = header(ws);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const ExtValue v = ext_block(ws[i], ws[j]);
      if (v.hi == 0) continue;
      const bool up = k_zero(ws[j], ws[i]) > 0;  // ws[i] -> ws[j] in the K0 graph
      const std::size_t lo = up ? i : j, hi = up ? j : i;
      g.edges.push_back(GraphEdge{static_cast<int>(lo), static_cast<int>(hi), EdgeKind::EXT, v.hi,
                                  k0_label(ws[hi], ws[lo]), v.exact, std::nullopt});
    }
  }
  sort_edges(g);
  return g;
}

ExtGraph ext1_graph_q(const std::vector<GeneralQWeight>& input) {
  std::vector<GeneralQWeight> ws = input;
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  ExtGraph g;
  if (ws.empty()) return g;
  const CentralCharacter ch = core_of(ws.front());
  for (const auto& w : ws) {
    if (w.m() != ws.front().m()) throw Error(ErrorCode::SizeMismatch, "weights of different q_m");
    if (!(core_of(w) == ch)) throw Error(ErrorCode::MixedCharacters, "vertices have different cores");
  }
  g.algebra = "q(" + std::to_string(ws.front().m()) + ")";
  g.block = "core=" + ch.to_string();

  const int V = static_cast<int>(ws.size());
  const bool typical = atypicality(ws.front()) == 0;
  std::vector<int> red_tail(V, 0), red_pari(V, 0);
  if (!typical) {
    for (int i = 0; i < V; ++i) {
      const auto r = reduce(ws[i]).second;
      red_tail[i] = tail(r);
      red_pari[i] = pari_abs(r);
    }
  }

  struct Pair {
    int lo, hi;
    ExtValue v;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < V; ++i) {
    for (int j = i + 1; j < V; ++j) {
      const ExtValue v = ext_general_q(ws[i], ws[j]);
      if (v.hi == 0) continue;
      const auto a = reduce(ws[i]).second, b = reduce(ws[j]).second;
      const bool up = k_zero(b, a) > 0;
      pairs.push_back({up ? i : j, up ? j : i, v});
    }
  }

  auto make_vertex = [&](int i, int id, int copy) {
    GraphVertex v;
    v.id = id;
    v.twice = ws[i].twice;
    v.diagram = render_ascii(qdiagram_of(ws[i]));
    v.pari = red_pari[i];
    v.tail = red_tail[i];
    v.copy = copy;
    return v;
  };

  if (ch.pi_invariant()) {
    for (int i = 0; i < V; ++i) g.vertices.push_back(make_vertex(i, i, -1));
    for (const auto& p : pairs) {
      g.edges.push_back(GraphEdge{p.lo, p.hi, EdgeKind::EXT1, p.v.hi, "", p.v.exact, std::nullopt});
      g.edges.push_back(GraphEdge{p.hi, p.lo, EdgeKind::EXT1, p.v.hi, "", p.v.exact, std::nullopt});
    }
    for (int i = 0; i < V; ++i)
      if (has_zero_coordinate(ws[i]))
        g.edges.push_back(GraphEdge{i, i, EdgeKind::EXT1, 1, "", true, std::nullopt});
    sort_edges(g);
    return g;
  }

  // Doubled vertices (nu, c) with id 2*index + c.
  for (int i = 0; i < V; ++i)
    for (int c = 0; c < 2; ++c) g.vertices.push_back(make_vertex(i, 2 * i + c, c));
  for (int i = 0; i < V; ++i) {
    if (!has_zero_coordinate(ws[i])) continue;
    g.edges.push_back(GraphEdge{2 * i, 2 * i + 1, EdgeKind::EXT1, 1, "", true, 1});
    g.edges.push_back(GraphEdge{2 * i + 1, 2 * i, EdgeKind::EXT1, 1, "", true, 1});
  }

  // Gauge: breadth-first spanning forest from the least vertex of each component.
  std::vector<std::vector<int>> adj(V);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    adj[pairs[e].lo].push_back(static_cast<int>(e));
    adj[pairs[e].hi].push_back(static_cast<int>(e));
  }
  std::vector<bool> tree(pairs.size(), false), seen(V, false);
  std::vector<int> pot(V, 0);
  auto offset = [&](const Pair& p) { return ((red_tail[p.hi] - red_tail[p.lo]) % 2 + 2) % 2; };
  for (int root = 0; root < V; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : adj[u]) {
        const Pair& p = pairs[e];
        const int w = p.lo == u ? p.hi : p.lo;
        if (seen[w]) continue;
        seen[w] = true;
        tree[e] = true;
        pot[w] = (pot[u] + offset(p)) % 2;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const Pair& p = pairs[e];
    const int i = offset(p);
    const bool exact = p.v.exact && tree[e];
    for (int c = 0; c < 2; ++c) {
      g.edges.push_back(GraphEdge{2 * p.lo + c, 2 * p.hi + c, EdgeKind::EXT1, p.v.hi, "", exact, 0});
      g.edges.push_back(GraphEdge{2 * p.hi + c, 2 * p.lo + (c + i) % 2, EdgeKind::EXT1, p.v.hi, "", exact, i});
    }
    if (!tree[e]) g.cycle_parities.push_back((pot[p.lo] + pot[p.hi] + i) % 2);
  }
  sort_edges(g);
  return g;
}

BipartiteReport check_bipartite(const ExtGraph& g, const std::vector<int>& coloring) {
  BipartiteReport r;
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) pos[g.vertices[i].id] = i;
  for (const auto& e : g.edges) {
    if (e.src == e.dst) continue;
    if (coloring.at(pos.at(e.src)) == coloring.at(pos.at(e.dst))) r.violations.emplace_back(e.src, e.dst);
  }
  return r;
}

bool window_isomorphic(const ExtGraph& g1, const ExtGraph& g2, const std::vector<int>& relabel) {
  if (g1.vertices.size() != g2.vertices.size() || relabel.size() != g1.vertices.size()) return false;
  std::vector<int> hit(g2.vertices.size(), 0);
  for (int r : relabel) {
    if (r < 0 || r >= static_cast<int>(hit.size()) || hit[r]++) return false;
  }
  std::map<int, int> pos1, pos2;
  for (std::size_t i = 0; i < g1.vertices.size(); ++i) pos1[g1.vertices[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < g2.vertices.size(); ++i) pos2[g2.vertices[i].id] = static_cast<int>(i);
  using E = std::tuple<int, int, int, int>;
  std::multiset<E> a, b;
  for (const auto& e : g1.edges)
    a.insert({relabel[pos1.at(e.src)], relabel[pos1.at(e.dst)], static_cast<int>(e.kind), e.multiplicity});
  for (const auto& e : g2.edges)
    b.insert({pos2.at(e.src), pos2.at(e.dst), static_cast<int>(e.kind), e.multiplicity});
  return a == b;
}

}  // namespace superext
