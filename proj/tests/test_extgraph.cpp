#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/error.hpp"
#include "superext/extgraph.hpp"
#include "superext/kpoly.hpp"

using namespace superext;

namespace {

BlockWeight W(const AlgebraContext& c, std::vector<int> v, std::optional<int> sign = std::nullopt) {
  for (int& x : v) x *= 2;
  return validate_weight(c, v, sign);
}

std::string list(const std::vector<Neighbour>& ns) {
  std::string s;
  for (const auto& n : ns) s += "(" + format_weight(n.weight) + ")x" + std::to_string(n.multiplicity) + " ";
  return s;
}

}  // namespace

TEST_CASE("successors") {
  CHECK(list(successors(base_weight(AlgebraContext::q(3)))) == "(1)x1 (2)x2 ");
  CHECK(list(successors(base_weight(AlgebraContext::osp(1, 0)))) == "(+ 1)x1 (- 1)x1 ");
}

TEST_CASE("gl(3|3) zero has one successor per cross") {
  const auto c = AlgebraContext::gl(3);
  const auto s = successors(W(c, {2, 1, 0}));
  REQUIRE(s.size() == 3);
  for (const auto& n : s) CHECK(n.multiplicity == 1);
}

TEST_CASE("predecessors") {
  for (const auto& c : {AlgebraContext::q(4), AlgebraContext::osp(2, 0), AlgebraContext::osp(2, 2)})
    CHECK(predecessors(base_weight(c)).empty());
  CHECK(list(predecessors(W(AlgebraContext::q(2), {1}))) == "(0)x2 ");
  CHECK(list(predecessors(W(AlgebraContext::gl(1), {4}))) == "(3)x1 ");
}

TEST_CASE("ext values") {
  const auto q3 = AlgebraContext::q(3);
  CHECK(ext_block(W(q3, {2}), W(q3, {1})) == ExtValue::Exact(0));
  CHECK(ext_block(W(q3, {2}), base_weight(q3)) == ExtValue::Exact(1));
  CHECK(ext_block(base_weight(q3), W(q3, {2})) == ExtValue::Exact(1));
  CHECK(ext_block(W(AlgebraContext::q(2), {1}), base_weight(AlgebraContext::q(2))) == ExtValue::Exact(1));
  CHECK(ext_block(base_weight(q3), base_weight(q3)) == ExtValue::Bounded(0, 1));
  CHECK(ext_block(W(q3, {1}), W(q3, {1})) == ExtValue::Exact(0));
  CHECK(ExtValue::Bounded(0, 2).to_string() == "Bounded(0,2)");
}

TEST_CASE("general ext") {
  const auto a = make_general_q({2, 0, -2, -6}), b = make_general_q({6, 0, 0, -2});
  CHECK(ext_general_q(a, b) == ExtValue::Exact(0));
  CHECK(ext_general_q(make_general_q({14, 4, 0, -4, -18}), make_general_q({14, 2, 0, -2, -18})) ==
        ExtValue::Exact(0));
  CHECK(ext_general_q(make_general_q({14, 4, 0, -4, -18}), make_general_q({14, 0, 0, 0, -18})) ==
        ExtValue::Exact(1));
  CHECK_THROWS_AS(ext_general_q(a, make_general_q({2, 0, -2})), Error);
}

TEST_CASE("graphs") {
  const auto q3 = AlgebraContext::q(3);
  const auto ws = enumerate_block(q3, 6);
  const auto g = ext_graph(ws);
  CHECK(g.edges.size() == 3);
  for (const auto& e : g.edges) CHECK_FALSE((e.src == 1 && e.dst == 2));
  const auto k = k0_graph(ws);
  CHECK(k.edges.size() == 4);
  std::vector<int> col;
  for (const auto& w : enumerate_block(AlgebraContext::gl(2), 8)) col.push_back(pari_abs(w));
  CHECK(check_bipartite(k0_graph(enumerate_block(AlgebraContext::gl(2), 8)), col).ok());
}

TEST_CASE("ext1 graphs") {
  // Half-integral principal character: two copies of a chain, no offsets.
  std::vector<GeneralQWeight> half;
  for (const auto& w : enumerate_block(AlgebraContext::q(2, Block::BHalf), 7)) half.push_back(lift_block_weight(w));
  const auto h = ext1_graph_q(half);
  CHECK(h.vertices.size() == 8);
  CHECK(h.edges.size() == 12);
  for (const auto& e : h.edges) CHECK(e.parity_offset.value_or(0) == 0);

  std::vector<GeneralQWeight> integral;
  for (const auto& w : enumerate_block(AlgebraContext::q(2), 4)) integral.push_back(lift_block_weight(w));
  const auto g = ext1_graph_q(integral);
  CHECK(g.vertices.size() == 6);
  int zero_links = 0;
  for (const auto& e : g.edges)
    if (e.src / 2 == e.dst / 2) ++zero_links;
  CHECK(zero_links == 2);  // (0,0)->(0,1) and back

  // Pi-invariant core {3}: a loop exactly at the vertex with zero coordinates.
  const std::vector<GeneralQWeight> inv = {make_general_q({6, 0, 0}), make_general_q({6, 2, -2}),
                                           make_general_q({6, 4, -4}), make_general_q({8, 6, -8})};
  CHECK(core_of(inv[0]).pi_invariant());
  const auto p = ext1_graph_q(inv);
  CHECK(p.vertices.size() == 4);
  int loops = 0;
  for (const auto& e : p.edges)
    if (e.src == e.dst) {
      ++loops;
      CHECK(e.src == 0);
    }
  CHECK(loops == 1);
}
