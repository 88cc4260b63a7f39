#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/error.hpp"
#include "superext/kpoly.hpp"

using namespace superext;

namespace {

BlockWeight W(const AlgebraContext& c, std::vector<int> v, std::optional<int> sign = std::nullopt) {
  for (int& x : v) x *= 2;
  return validate_weight(c, v, sign);
}

KPoly z(int k, std::int64_t c = 1) { return KPoly::monomial(k, c); }

}  // namespace

TEST_CASE("closed forms") {
  const auto q4 = AlgebraContext::q(4);
  CHECK(kpoly(W(q4, {1, 0}), base_weight(q4)) == z(0) + z(2));
  CHECK(kpoly(W(q4, {2, 1}), W(q4, {1, 0})) == z(1, 2));
  const auto o6 = AlgebraContext::osp(3, 0);
  CHECK(kpoly(W(o6, {2, 1, 0}), W(o6, {1, 0, 0})) == z(1) + z(3));
  for (int n = 1; n <= 4; ++n) {
    const auto c = AlgebraContext::osp(n, 2);
    std::vector<int> e(n, 0);
    e[0] = 1;
    CHECK(kpoly(W(c, e), base_weight(c)) == z(2 * n - 1));
  }
  const auto g1 = AlgebraContext::gl(1);
  for (int i = -3; i < 4; ++i) CHECK(kpoly(W(g1, {i + 1}), W(g1, {i})) == z(0));
  CHECK_THROWS_AS(kpoly(base_weight(o6), W(o6, {1, 0, 0})), Error);
}

TEST_CASE("t=1 goes through tau") {
  const auto t1 = AlgebraContext::osp(2, 1), t2 = AlgebraContext::osp(2, 2);
  for (const auto& l : enumerate_block(t1, 8))
    for (const auto& n : enumerate_block(t1, 8)) {
      if (l == n || is_zero_weight(l)) continue;
      CHECK(kpoly(l, n) == kpoly(tau_inv_weight(l), tau_inv_weight(n)));
    }
  CHECK(kernel_weight(base_weight(t1)) == base_weight(t2));
}

TEST_CASE("recursion") {
  CHECK(kpoly_q_recursive(W(AlgebraContext::q(2), {1}), base_weight(AlgebraContext::q(2))) == z(0, 2));
  CHECK(kpoly_q_recursive(W(AlgebraContext::q(3), {2}), base_weight(AlgebraContext::q(3))) == z(0, 2));
  const auto q8 = AlgebraContext::q(8);
  CHECK(kpoly_q_recursive(W(q8, {6, 4, 1, 0}), W(q8, {4, 1, 0, 0})) == z(0) + z(1));
  CHECK(kpoly_q_recursive(W(q8, {5, 4, 1, 0}), W(q8, {4, 1, 0, 0})) == z(1) + z(2));
}

TEST_CASE("restriction") {
  const auto g2 = AlgebraContext::gl(2);
  CHECK(s_zero(W(g2, {3, 1}), W(g2, {3, 0})) == 1);
  CHECK(k_hat(W(g2, {3, 1}), W(g2, {3, 0})).to_string() == "w");
  const auto q4 = AlgebraContext::q(4);
  CHECK(s_zero(W(q4, {1, 0}), base_weight(q4)) == 2);
  CHECK(k_hat(W(q4, {1, 0}), base_weight(q4)).to_string() == "(1+z^2)w^2");
  CHECK_THROWS_AS(s_zero(base_weight(q4), base_weight(q4)), Error);
  const auto o2 = AlgebraContext::osp(2, 0);
  CHECK(s_zero(W(o2, {2, 1}, 1), W(o2, {2, 1}, -1)) == 1);
  CHECK(k_restricted(W(o2, {2, 1}, 1), W(o2, {2, 0}), 2).has_value());
}

TEST_CASE("k zero") {
  const auto q3 = AlgebraContext::q(3);
  CHECK(k_zero(W(q3, {2}), base_weight(q3)) == 2);
  CHECK(k_zero(W(q3, {1}), base_weight(q3)) == 1);
  const auto o42 = AlgebraContext::osp(1, 2);
  CHECK(k_zero(W(o42, {2}), base_weight(o42)) == 1);
  CHECK(k_zero(W(o42, {1}), base_weight(o42)) == 0);
  // Leading agreement drops to a smaller algebra.
  const auto q6 = AlgebraContext::q(6);
  CHECK(k_zero(W(q6, {5, 1, 0}), W(q6, {5, 0, 0})) == k_zero(W(AlgebraContext::q(4), {1, 0}), base_weight(AlgebraContext::q(4))));
}
