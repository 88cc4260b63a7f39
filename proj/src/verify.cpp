#include "superext/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "superext/diagrams.hpp"
#include "superext/error.hpp"
#include "superext/extgraph.hpp"
#include "superext/kpoly.hpp"

namespace superext {

void CheckResult::fail(const std::string& why) {
  ++checked;
  ++failed;
  if (failures.size() < 12) failures.push_back(why);
}

void CheckResult::merge(const CheckResult& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& f : other.failures)
    if (failures.size() < 12) failures.push_back(other.name + ": " + f);
}

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

BlockWeight make(const AlgebraContext& c, std::vector<int> values, std::optional<int> sign = std::nullopt) {
  for (int& v : values) v *= 2;
  return validate_weight(c, values, sign);
}

KPoly z(int k, std::int64_t c = 1) { return KPoly::monomial(k, c); }

std::string show(const BlockWeight& w) { return "(" + format_weight(w) + ")"; }

std::string pair_text(const BlockWeight& lambda, const BlockWeight& nu) {
  return show(lambda) + " over " + show(nu);
}

std::vector<BlockWeight> window_weights(const Window& w, std::size_t cap = kDefaultEnumerationCap) {
  return enumerate_block(w.ctx, w.max_twice, w.min_twice, cap);
}

/// kpoly, or nullopt where the closed forms do not apply (OSP at lambda = 0).
std::optional<KPoly> try_kpoly(const BlockWeight& lambda, const BlockWeight& nu) {
  try {
    return kpoly(lambda, nu);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OspLambdaZero) return std::nullopt;
    throw;
  }
}

using Key = std::pair<std::vector<int>, int>;
Key key_of(const BlockWeight& w) { return {w.coords, w.sign}; }

std::string vertex_label(const GraphVertex& v) {
  std::string s = v.sign > 0 ? "+" : v.sign < 0 ? "-" : "";
  for (std::size_t i = 0; i < v.twice.size(); ++i) {
    if (i) s += ',';
    s += format_half(v.twice[i]);
  }
  return s;
}

using EdgeSet = std::set<std::tuple<std::string, std::string, int>>;

EdgeSet edge_set(const ExtGraph& g) {
  std::map<int, std::string> label;
  for (const auto& v : g.vertices) label[v.id] = vertex_label(v);
  EdgeSet out;
  for (const auto& e : g.edges) out.insert({label.at(e.src), label.at(e.dst), e.multiplicity});
  return out;
}

std::string edges_text(const EdgeSet& s) {
  std::string out;
  for (const auto& [a, b, m] : s) out += a + "->" + b + (m == 1 ? "" : "x" + std::to_string(m)) + " ";
  return out;
}

void expect_edges(CheckResult& r, const std::string& what, const EdgeSet& got, const EdgeSet& want) {
  if (got == want)
    r.pass();
  else
    r.fail(what + ": got {" + edges_text(got) + "} want {" + edges_text(want) + "}");
}

void expect_poly(CheckResult& r, const std::string& what, const KPoly& got, const KPoly& want) {
  if (got == want)
    r.pass();
  else
    r.fail(what + ": got " + got.to_string() + ", want " + want.to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// Window properties

CheckResult check_oracle(const Window& w) {
  CheckResult r{"oracle"};
  if (w.ctx.family != Family::Q) return r;
  const auto ws = window_weights(w);
  for (const auto& lambda : ws) {
    for (const auto& nu : ws) {
      const KPoly a = kpoly(lambda, nu);
      const KPoly b = kpoly_q_recursive(lambda, nu);
      if (a == b)
        r.pass();
      else
        r.fail(w.ctx.name() + " " + pair_text(lambda, nu) + ": closed " + a.to_string() + ", recursion " +
               b.to_string());
    }
  }
  return r;
}

CheckResult check_parity_shape(const Window& w) {
  CheckResult r{"parity"};
  const auto ws = window_weights(w);
  const AlgebraContext& c = w.ctx;
  for (const auto& lambda : ws) {
    for (const auto& nu : ws) {
      if (lambda == nu) continue;
      const auto k = try_kpoly(lambda, nu);
      if (!k || k->is_zero()) continue;
      const int d = tail(nu) - tail(lambda);
      const int pr = pari_rel(lambda, nu);
      const int top = k->degree();
      std::int64_t sum = 0, maxc = 0;
      for (auto x : k->coeffs()) {
        sum += x;
        maxc = std::max(maxc, x);
      }
      bool good;
      if (c.family == Family::GL || c.half()) {
        good = k->terms() == 1 && maxc == 1 && mod2(top) == mod2(pr + 1);
      } else if (c.family == Family::OSP) {
        good = d >= 0 && d <= 2 && maxc == 1 && k->terms() <= 2 && mod2(top) == mod2(pr + 1);
        if (k->terms() == 2) good = good && d == 1 && mod2(top - k->low_degree()) == 0;
      } else if (d == 1) {
        good = sum == 2 && mod2(top) == mod2(pr + 1 + c.ell);
      } else {
        good = d == 0 && k->terms() == 1 && maxc == 1 && mod2(top) == mod2(pr + 1);
      }
      if (good)
        r.pass();
      else
        r.fail(c.name() + " " + pair_text(lambda, nu) + ": K=" + k->to_string() + " tail diff " +
               std::to_string(d) + " pari " + std::to_string(pr));
    }
  }
  return r;
}

CheckResult check_w_support(const Window& w) {
  CheckResult r{"w-support"};
  const auto ws = window_weights(w);
  for (const auto& lambda : ws) {
    for (const auto& nu : ws) {
      if (lambda == nu) continue;
      const KPoly2 kh = k_hat(lambda, nu);
      const int s0 = s_zero(lambda, nu);
      const auto sup = kh.w_support();
      if (sup.empty() || (sup.size() == 1 && *sup.begin() == s0))
        r.pass();
      else
        r.fail(w.ctx.name() + " " + pair_text(lambda, nu) + ": " + kh.to_string() + ", s_zero " +
               std::to_string(s0));
    }
  }
  return r;
}

CheckResult check_out_degree(const Window& w) {
  CheckResult r{"out-degree"};
  const AlgebraContext& c = w.ctx;
  const bool qb0 = c.family == Family::Q && !c.half();
  for (const auto& nu : window_weights(w)) {
    const auto succ = successors(nu);
    std::set<std::vector<int>> distinct;
    std::int64_t maxm = 0;
    int doubles = 0;
    for (const auto& s : succ) {
      distinct.insert(s.weight.coords);
      maxm = std::max(maxm, s.multiplicity);
      if (s.multiplicity == 2) ++doubles;
    }
    bool good;
    if (!qb0) {
      good = maxm <= 1;
      const bool counted = c.family != Family::OSP || c.t != 0 || tail(nu) == 0;
      if (counted) good = good && static_cast<int>(distinct.size()) == c.n;
    } else if (tail(nu) == 0) {
      good = static_cast<int>(succ.size()) == c.n && maxm <= 1;
    } else {
      good = maxm <= 2 && doubles <= 1;
    }
    if (good)
      r.pass();
    else
      r.fail(c.name() + " " + show(nu) + ": " + std::to_string(succ.size()) + " successors, " +
             std::to_string(distinct.size()) + " distinct, max multiplicity " + std::to_string(maxm));
  }
  return r;
}

CheckResult check_bipartite_window(const Window& w) {
  CheckResult r{"bipartite"};
  const AlgebraContext& c = w.ctx;
  std::vector<BlockWeight> ws;
  for (const auto& x : window_weights(w)) {
    if (c.family == Family::Q && !c.half() && (c.n == 0 || x.coords.back() <= 1 + c.ell)) continue;
    ws.push_back(x);
  }
  if (ws.empty()) return r;
  const ExtGraph g = k0_graph(ws);
  std::map<std::pair<std::vector<int>, int>, int> colour;
  for (const auto& x : ws) colour[{x.twice(), x.sign}] = pari_abs(x);
  std::vector<int> col;
  for (const auto& v : g.vertices) col.push_back(colour.at({v.twice, v.sign}));
  const auto rep = check_bipartite(g, col);
  r.checked = g.edges.size();
  r.failed = rep.violations.size();
  for (const auto& [a, b] : rep.violations)
    if (r.failures.size() < 12)
      r.failures.push_back(c.name() + " edge " + vertex_label(g.vertices[a]) + " -> " + vertex_label(g.vertices[b]));
  if (r.checked == 0) r.pass();
  return r;
}

CheckResult check_brute_force(const Window& w) {
  CheckResult r{"brute-force"};
  const AlgebraContext& c = w.ctx;
  const auto ws = window_weights(w);
  const int margin = 2 * (2 * c.n + 4);
  std::optional<int> lo = w.min_twice;
  if (c.family == Family::GL) lo = (w.min_twice ? *w.min_twice : -w.max_twice) - margin;
  const auto big = enumerate_block(c, w.max_twice + margin, lo, 2000000);

  for (const auto& nu : ws) {
    std::map<Key, std::int64_t> want, got;
    for (const auto& lambda : big) {
      if (lambda == nu) continue;
      if (const auto k = k_zero(lambda, nu)) want[key_of(lambda)] = k;
    }
    for (const auto& s : successors(nu)) got[key_of(s.weight)] = s.multiplicity;
    if (got == want)
      r.pass();
    else
      r.fail(c.name() + " successors of " + show(nu) + ": " + std::to_string(got.size()) + " vs scan " +
             std::to_string(want.size()));
  }
  for (const auto& lambda : ws) {
    std::map<Key, std::int64_t> want, got;
    for (const auto& nu : big) {
      if (lambda == nu) continue;
      if (const auto k = k_zero(lambda, nu)) want[key_of(nu)] = k;
    }
    for (const auto& s : predecessors(lambda)) got[key_of(s.weight)] = s.multiplicity;
    if (got == want)
      r.pass();
    else
      r.fail(c.name() + " predecessors of " + show(lambda) + ": " + std::to_string(got.size()) + " vs scan " +
             std::to_string(want.size()));
  }
  for (const auto& lambda : ws) {
    for (const auto& nu : ws) {
      if (lambda == nu) continue;
      const ExtValue e = ext_block(lambda, nu);
      const std::int64_t k = std::max(k_zero(lambda, nu), k_zero(nu, lambda));
      const bool good = e.exact ? e.lo <= k : (e.lo == 0 && e.hi == k);
      if (good)
        r.pass();
      else
        r.fail(c.name() + " ext " + pair_text(lambda, nu) + " = " + e.to_string() + ", k0 " + std::to_string(k));
    }
  }
  return r;
}

CheckResult check_round_trips(const Window& w) {
  CheckResult r{"round-trip"};
  const AlgebraContext& c = w.ctx;
  const int reach = 2 * c.n + 4;
  for (const auto& x : window_weights(w)) {
    const std::string who = c.name() + " " + show(x);
    const WeightDiagram d = diagram_of(x);
    const std::optional<int> sg = x.sign ? std::optional<int>(x.sign) : std::nullopt;
    auto expect = [&](bool ok, const std::string& what) {
      if (ok)
        r.pass();
      else
        r.fail(who + ": " + what);
    };
    expect(weight_of(d) == x, "weight_of(diagram_of)");
    const auto tw = x.twice();
    expect(validate_weight(c, tw, sg) == x, "validate(coords)");
    const std::string text = render_ascii(d);
    expect(parse_ascii(text, c) == d, "parse(render) for '" + text + "'");
    if (c.family == Family::OSP && c.t == 2) {
      expect(tau_inv(tau(d)) == d, "tau_inv(tau)");
      expect(tau_inv_weight(tau_weight(x)) == x, "tau_inv_weight(tau_weight)");
      expect(tau_arches(arcs(d).arches) == arcs(tau(d)).arches, "tau on arches");
    }
    if (c.family == Family::OSP && c.t == 1) {
      expect(tau(tau_inv(d)) == d, "tau(tau_inv)");
      expect(tau_weight(tau_inv_weight(x)) == x, "tau_weight(tau_inv_weight)");
    }
    // Moves and their inverses.
    std::vector<int> crosses;
    for (const auto& [p, cell] : d.cells)
      if (cell.times > 0) crosses.push_back(p);
    const int right = d.cells.empty() ? 0 : d.cells.rbegin()->first;
    for (int a : crosses) {
      for (int q = a + 1; q <= right + reach; ++q) {
        for (int s : {0, 1, -1}) {
          WeightDiagram moved;
          try {
            moved = move_one(d, a, q, s ? std::optional<int>(s) : std::nullopt);
          } catch (const Error&) {
            continue;
          }
          WeightDiagram back;
          try {
            back = unmove_one(moved, q, a, sg);
          } catch (const Error& e) {
            r.fail(who + ": unmove_one after move " + std::to_string(a) + "->" + std::to_string(q) + " threw " +
                   e.what());
            continue;
          }
          expect(back == d, "unmove_one(move_one) at " + std::to_string(a) + "->" + std::to_string(q));
        }
      }
    }
    if (d.stacked() && d.times_at(0) >= 2) {
      for (int p = 1; p <= right + reach; ++p) {
        for (int q = p + 1; q <= right + reach; ++q) {
          WeightDiagram moved;
          try {
            moved = move_two(d, p, q);
          } catch (const Error&) {
            continue;
          }
          WeightDiagram back;
          try {
            back = unmove_two(moved, p, q, sg);
          } catch (const Error& e) {
            r.fail(who + ": unmove_two threw " + e.what());
            continue;
          }
          expect(back == d, "unmove_two(move_two) at " + std::to_string(p) + "," + std::to_string(q));
        }
      }
    }
  }
  return r;
}

CheckResult check_window_isomorphism(int n, int p) {
  CheckResult r{"window-iso"};
  const int width = 2 * n + 3;
  const AlgebraContext target_ctx = AlgebraContext::q(2 * n, Block::BHalf);
  const auto target = enumerate_block(target_ctx, 2 * (width - 1) + 1);
  const ExtGraph g2 = k0_graph(target);
  std::map<std::vector<int>, int> pos2;
  for (std::size_t i = 0; i < g2.vertices.size(); ++i) pos2[g2.vertices[i].twice] = static_cast<int>(i);

  const std::vector<AlgebraContext> sources = {
      AlgebraContext::gl(n),     AlgebraContext::osp(n, 0), AlgebraContext::osp(n, 1),
      AlgebraContext::osp(n, 2), AlgebraContext::q(2 * n),  AlgebraContext::q(2 * n + 1)};
  for (const auto& c : sources) {
    std::vector<BlockWeight> ws;
    for (const auto& x : enumerate_block(c, 2 * (p + width), 2 * (p + 1)))
      if (x.sign >= 0) ws.push_back(x);
    const ExtGraph g1 = k0_graph(ws);
    std::vector<int> relabel;
    bool mapped = true;
    for (const auto& v : g1.vertices) {
      std::vector<int> t;
      for (int x : v.twice) t.push_back(x - 2 * p - 1);
      const auto it = pos2.find(t);
      if (it == pos2.end()) {
        mapped = false;
        break;
      }
      relabel.push_back(it->second);
    }
    if (mapped && window_isomorphic(g1, g2, relabel))
      r.pass();
    else
      r.fail(c.name() + " B_{>" + std::to_string(p) + "}: " + std::to_string(g1.edges.size()) + " edges vs " +
             std::to_string(g2.edges.size()) + (mapped ? "" : " (vertex sets differ)"));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reference data

namespace {

struct GoldenRow {
  std::vector<int> lambda;
  std::optional<int> sign;
  KPoly value;
};

struct GoldenTable {
  std::string label;
  AlgebraContext ctx;
  std::vector<int> nu;
  std::vector<GoldenRow> rows;
  int complete_up_to;  // every other lambda with coordinates up to this gives 0
};

void run_table(CheckResult& r, const GoldenTable& t) {
  const BlockWeight nu = make(t.ctx, t.nu);
  std::set<Key> listed;
  for (const auto& row : t.rows) {
    const BlockWeight lambda = make(t.ctx, row.lambda, row.sign);
    listed.insert(key_of(lambda));
    expect_poly(r, t.label + " " + pair_text(lambda, nu), kpoly(lambda, nu), row.value);
  }
  std::size_t stray = 0;
  std::string first;
  for (const auto& lambda : enumerate_block(t.ctx, 2 * t.complete_up_to)) {
    if (listed.count(key_of(lambda))) continue;
    const auto k = try_kpoly(lambda, nu);
    if (k && !k->is_zero()) {
      if (!stray++) first = show(lambda) + " gives " + k->to_string();
    }
  }
  if (stray == 0)
    r.pass();
  else
    r.fail(t.label + ": " + std::to_string(stray) + " unlisted nonzero values, first " + first);
}

}  // namespace

CheckResult check_golden_tables() {
  CheckResult r{"goldens"};
  const auto osp44 = AlgebraContext::osp(2, 0), osp64 = AlgebraContext::osp(2, 2), osp66 = AlgebraContext::osp(3, 0),
             osp1010 = AlgebraContext::osp(5, 0), q4 = AlgebraContext::q(4), q8 = AlgebraContext::q(8);
  std::vector<GoldenTable> tables = {
      {"osp(4|4)", osp44, {1, 0}, {{{2, 0}, {}, z(0)}, {{2, 1}, 1, z(1)}, {{2, 1}, -1, z(1)}, {{3, 1}, 1, z(0)}, {{3, 1}, -1, z(0)}}, 8},
      {"osp(6|4)", osp64, {1, 0}, {{{2, 0}, {}, z(0)}, {{2, 1}, {}, z(2)}, {{3, 1}, {}, z(1)}, {{4, 1}, {}, z(0)}}, 8},
      {"osp(6|6)",
       osp66,
       {1, 0, 0},
       {{{2, 0, 0}, {}, z(0)},
        {{2, 1, 0}, {}, z(1) + z(3)},
        {{3, 1, 0}, {}, z(0) + z(2)},
        {{4, 1, 0}, {}, z(1)},
        {{5, 1, 0}, {}, z(0)}},
       8},
      {"q_4", q4, {1, 0}, {{{2, 0}, {}, z(0)}, {{3, 1}, {}, z(0, 2)}, {{2, 1}, {}, z(1, 2)}}, 9},
      {"q_8 first", q8, {4, 1, 0, 0},
       {{{5, 4, 1, 0}, {}, z(1) + z(2)}, {{6, 4, 1, 0}, {}, z(0) + z(1)}, {{7, 4, 1, 0}, {}, z(0, 2)}, {{5, 1, 0, 0}, {}, z(0)}},
       10},
      {"q_8 second", q8, {5, 1, 0, 0},
       {{{6, 5, 1, 0}, {}, z(1, 2)}, {{7, 5, 1, 0}, {}, z(0, 2)}, {{6, 1, 0, 0}, {}, z(0)}},
       10},
  };
  // osp(10|10): the arch from the stack bottom ends at 9.
  GoldenTable big{"osp(10|10)",
                  osp1010,
                  {4, 3, 0, 0, 0},
                  {{{5, 3, 0, 0, 0}, {}, z(0)},
                   {{6, 4, 0, 0, 0}, {}, z(0)},
                   {{5, 4, 3, 2, 0}, {}, z(2)},
                   {{6, 4, 3, 2, 0}, {}, z(1)},
                   {{7, 4, 3, 2, 0}, {}, z(0)},
                   {{5, 4, 0, 0, 0}, {}, z(1)}},
                  11};
  for (int i = 5; i <= 9; ++i) big.rows.push_back({{i, 4, 3, 0, 0}, {}, z(9 - i)});
  tables.push_back(big);
  for (const auto& t : tables) run_table(r, t);

  const auto ad = arcs(diagram_of(make(osp1010, {4, 3, 0, 0, 0})));
  const Arch want{Arch::Kind::Three, 0, 8, 9};
  if (std::find(ad.arches.begin(), ad.arches.end(), want) != ad.arches.end())
    r.pass();
  else
    r.fail("osp(10|10) arches " + render_arches(ad) + " lack arc(0;8,9)");
  return r;
}

CheckResult check_closed_formulas() {
  CheckResult r{"closed-forms"};
  for (int m = 2; m <= 8; ++m) {
    const auto c = AlgebraContext::q(m);
    std::vector<int> theta(c.n, 0);
    theta[0] = 1;
    const BlockWeight th = make(c, theta), zero = base_weight(c);
    const KPoly want = z(0) + z(m - 2);
    expect_poly(r, "q_" + std::to_string(m) + " K(theta,0)", kpoly(th, zero), want);
    expect_poly(r, "q_" + std::to_string(m) + " K(theta,0) recursion", kpoly_q_recursive(th, zero), want);
  }
  for (int m = 2; m <= 6; ++m) {
    const auto c = AlgebraContext::q(m);
    const BlockWeight zero = base_weight(c);
    KPoly want;
    for (int i = 1; i < m; ++i) want += z(i);
    expect_poly(r, "q_" + std::to_string(m) + " K(0,0)", kpoly(zero, zero), want);
    expect_poly(r, "q_" + std::to_string(m) + " K(0,0) recursion", kpoly_q_recursive(zero, zero), want);
  }
  {
    const auto c = AlgebraContext::osp(1, 0);
    expect_poly(r, "osp(2|2) K(e1+d1,0)", kpoly(make(c, {1}, 1), base_weight(c)), z(0));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto c = AlgebraContext::osp(n, 0);
    std::vector<int> v(n, 0);
    v[0] = 1;
    expect_poly(r, c.name() + " K(e1+d1,0)", kpoly(make(c, v), base_weight(c)), z(0) + z(2 * n - 2));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto c = AlgebraContext::osp(n, 2);
    std::vector<int> v(n, 0);
    v[0] = 1;
    expect_poly(r, c.name() + " K(e1+d1,0)", kpoly(make(c, v), base_weight(c)), z(2 * n - 1));
  }
  return r;
}

CheckResult check_graph_figures() {
  CheckResult r{"figures"};
  using E = EdgeSet;
  {
    const auto c = AlgebraContext::gl(1);
    const auto ws = enumerate_block(c, 6, -4);
    E want;
    for (int i = -2; i < 3; ++i) want.insert({std::to_string(i), std::to_string(i + 1), 1});
    expect_edges(r, "gl(1|1) K0", edge_set(k0_graph(ws)), want);
    expect_edges(r, "gl(1|1) ext", edge_set(ext_graph(ws)), want);
  }
  {
    const auto c = AlgebraContext::osp(1, 0);
    const auto ws = enumerate_block(c, 6);
    E want = {{"0", "+1", 1}, {"0", "-1", 1}};
    for (int i = 1; i < 3; ++i)
      for (const char* s : {"+", "-"}) want.insert({s + std::to_string(i), s + std::to_string(i + 1), 1});
    const auto g = k0_graph(ws);
    expect_edges(r, "osp(2|2) K0", edge_set(g), want);
    expect_edges(r, "osp(2|2) ext", edge_set(ext_graph(ws)), want);
    std::set<std::pair<std::string, std::string>> proj, want_proj;
    auto strip = [](std::string s) { return (!s.empty() && (s[0] == '+' || s[0] == '-')) ? s.substr(1) : s; };
    for (const auto& [a, b, m] : edge_set(g)) proj.insert({strip(a), strip(b)});
    for (int i = 0; i < 3; ++i) want_proj.insert({std::to_string(i), std::to_string(i + 1)});
    if (proj == want_proj)
      r.pass();
    else
      r.fail("OSP(2|2) projection differs");
  }
  {
    const auto c = AlgebraContext::osp(1, 2);
    const auto ws = enumerate_block(c, 8);
    const E want = {{"0", "2", 1}, {"1", "2", 1}, {"2", "3", 1}, {"3", "4", 1}};
    expect_edges(r, "osp(4|2) K0", edge_set(k0_graph(ws)), want);
    expect_edges(r, "osp(4|2) ext", edge_set(ext_graph(ws)), want);
    expect_poly(r, "osp(4|2) K(beta,0)", kpoly(make(c, {1}), base_weight(c)), z(1));
  }
  {
    const auto c = AlgebraContext::q(2, Block::BHalf);
    const auto ws = enumerate_block(c, 7);
    const E want = {{"1/2", "3/2", 1}, {"3/2", "5/2", 1}, {"5/2", "7/2", 1}};
    expect_edges(r, "q_2 half K0", edge_set(k0_graph(ws)), want);
  }
  {
    const auto c = AlgebraContext::q(2);
    const auto ws = enumerate_block(c, 6);
    expect_edges(r, "q_2 K0", edge_set(k0_graph(ws)), {{"0", "1", 2}, {"1", "2", 1}, {"2", "3", 1}});
    expect_edges(r, "q_2 ext", edge_set(ext_graph(ws)), {{"0", "1", 1}, {"1", "2", 1}, {"2", "3", 1}});
  }
  {
    const auto c = AlgebraContext::q(3);
    const auto ws = enumerate_block(c, 6);
    expect_edges(r, "q_3 K0", edge_set(k0_graph(ws)), {{"0", "1", 1}, {"0", "2", 2}, {"1", "2", 1}, {"2", "3", 1}});
    expect_edges(r, "q_3 ext", edge_set(ext_graph(ws)), {{"0", "1", 1}, {"0", "2", 1}, {"2", "3", 1}});
    expect_poly(r, "q_3 K(theta,0)", kpoly(make(c, {1}), base_weight(c)), z(0) + z(1));
  }
  return r;
}

CheckResult check_general_q_examples() {
  CheckResult r{"general-q"};
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> lifts = {
      {{14, 4, 0, -4, -18}, {14, 2, 0, -2, -18}},
      {{6, 4, 0, -4, -10}, {6, 2, 0, -2, -10}},
  };
  for (const auto& [a, b] : lifts) {
    const auto eta = make_general_q(a), zeta = make_general_q(b);
    const ExtValue v = ext_general_q(eta, zeta);
    if (v == ExtValue::Exact(0))
      r.pass();
    else
      r.fail("ext(" + format_general(eta) + "; " + format_general(zeta) + ") = " + v.to_string());
    const auto [ctx, w] = reduce(eta);
    if (ctx == AlgebraContext::q(3) && w.coords == std::vector<int>{2})
      r.pass();
    else
      r.fail("reduce(" + format_general(eta) + ") = " + ctx.name() + " " + show(w));
  }
  return r;
}

std::vector<CheckResult> verify_block(const Window& w) {
  std::vector<CheckResult> out;
  if (w.ctx.family == Family::Q) out.push_back(check_oracle(w));
  out.push_back(check_parity_shape(w));
  out.push_back(check_w_support(w));
  out.push_back(check_out_degree(w));
  out.push_back(check_bipartite_window(w));
  out.push_back(check_brute_force(w));
  out.push_back(check_round_trips(w));
  return out;
}

}  // namespace superext
