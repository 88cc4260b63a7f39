#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/diagrams.hpp"
#include "superext/error.hpp"

using namespace superext;

namespace {

BlockWeight W(const AlgebraContext& c, std::vector<int> v, std::optional<int> sign = std::nullopt) {
  for (int& x : v) x *= 2;
  return validate_weight(c, v, sign);
}

std::string arches_of(const AlgebraContext& c, std::vector<int> v) { return render_arches(arcs(diagram_of(W(c, v)))); }

}  // namespace

TEST_CASE("diagrams of zero") {
  CHECK(render_ascii(diagram_of(W(AlgebraContext::gl(3), {2, 1, 0}))) == "offset=0; x x x");
  CHECK(render_ascii(diagram_of(W(AlgebraContext::osp(3, 0), {0, 0, 0}))) == "x^3");
  CHECK(render_ascii(diagram_of(W(AlgebraContext::q(5), {0, 0}))) == "x^2>");
  CHECK(render_ascii(diagram_of(W(AlgebraContext::osp(1, 2), {0}))) == "x^1>");
  CHECK(render_ascii(diagram_of(W(AlgebraContext::gl(3), {3, 1, 0}))) == "offset=0; x x o x");
}

TEST_CASE("general q diagrams") {
  CHECK(render_ascii(qdiagram_of(make_general_q({2, 0, -2, -6}))) == "> x o <");
  CHECK(render_ascii(qdiagram_of(make_general_q({6, 0, 0, -2}))) == "x^1 < o >");
  CHECK(render_ascii(qdiagram_of(make_general_q({8, 4, -2, -4}))) == "o < x o >");
}

TEST_CASE("arches") {
  CHECK(arches_of(AlgebraContext::q(4), {1, 0}) == "arc(1;2) arc(0;3,4)");
  CHECK(arches_of(AlgebraContext::osp(3, 0), {1, 0, 0}) == "arc(1;2) arc(0;3) arc(0;4,5)");
  CHECK(arches_of(AlgebraContext::osp(3, 0), {0, 0, 0}) == "arc(0;1) arc(0;2,3) arc(0;4,5)");
  const auto f = diagram_of(W(AlgebraContext::q(8), {4, 1, 0, 0}));
  CHECK(arc_ends(f, 0) == std::set<int>{3, 6, 7, 8});
  CHECK_THROWS_AS(arc_ends(f, 2), Error);
  // The stack bottom of osp(10|10) at 4,3,0,0,0 ends at 9.
  CHECK(arc_ends(diagram_of(W(AlgebraContext::osp(5, 0), {4, 3, 0, 0, 0})), 0) == std::set<int>{1, 2, 7, 8, 9});
}

TEST_CASE("arch order") {
  using K = Arch::Kind;
  CHECK(arch_compare({K::Three, 0, 3, 4}, {K::Two, 1, 2}) == ArchOrder::Greater);
  CHECK(arch_compare({K::Two, 1, 2}, {K::Three, 0, 3, 4}) == ArchOrder::Less);
  CHECK(arch_compare({K::Two, 4, 5}, {K::Two, 3, 6}) == ArchOrder::Less);
  CHECK(arch_compare({K::Two, 1, 2}, {K::Two, 4, 5}) == ArchOrder::Incomparable);
  CHECK(arch_compare({K::Wobbly, 0, 4}, {K::Two, 1, 2}) == ArchOrder::Incomparable);
}

TEST_CASE("moves") {
  const auto c = AlgebraContext::osp(3, 0);
  const auto g = diagram_of(W(c, {2, 0, 0}));  // x^2 o x
  CHECK(render_ascii(move_one(g, 0, 3)) == "x^1 o x x");
  CHECK_THROWS_AS(move_one(g, 0, 2), Error);
  const auto q8 = diagram_of(W(AlgebraContext::q(8), {4, 1, 0, 0}));
  CHECK(render_ascii(move_one(q8, 0, 7)) == "x^1 x o o x o o x");
  const auto ten = diagram_of(W(AlgebraContext::osp(5, 0), {4, 3, 0, 0, 0}));
  CHECK(weight_of(move_two(ten, 2, 5)).coords == std::vector<int>{5, 4, 3, 2, 0});
  CHECK(unmove_two(move_two(ten, 2, 5), 2, 5) == ten);
}

TEST_CASE("tau") {
  const auto t2 = AlgebraContext::osp(3, 2);
  const auto d = diagram_of(W(t2, {1, 0, 0}));
  const auto t = tau(d);
  CHECK(t.ctx == AlgebraContext::osp(3, 1));
  CHECK(tau_inv(t) == d);
  const auto e1 = W(AlgebraContext::osp(3, 1), {0, 0, 0}, 1);
  CHECK(render_ascii(diagram_of(e1)) == "+ x^3");
  CHECK(to_epsilon_delta(e1) == "ε1");
}

TEST_CASE("ascii parsing") {
  const auto c = AlgebraContext::osp(2, 0);
  CHECK(parse_ascii("+ o x x", c) == diagram_of(W(c, {2, 1}, 1)));
  CHECK(parse_ascii("+o x x", c) == diagram_of(W(c, {2, 1}, 1)));
  CHECK(parse_ascii("x>", AlgebraContext::osp(1, 2)) == diagram_of(W(AlgebraContext::osp(1, 2), {0})));
  CHECK_THROWS_AS(parse_ascii("x x x", AlgebraContext::q(4)), Error);
  CHECK_THROWS_AS(parse_ascii("o q x", c), Error);
  CHECK_THROWS_AS(parse_ascii("o x x", c), Error);  // sign missing
}
