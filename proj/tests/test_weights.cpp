#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/error.hpp"
#include "superext/weights.hpp"

using namespace superext;

namespace {

BlockWeight W(const AlgebraContext& c, std::vector<int> v, std::optional<int> sign = std::nullopt) {
  for (int& x : v) x *= 2;
  return validate_weight(c, v, sign);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("validation") {
  const auto w = W(AlgebraContext::osp(2, 0), {2, 1}, 1);
  CHECK(w.sign == 1);
  CHECK(W(AlgebraContext::gl(3), {2, 1, 0}).coords == std::vector<int>{2, 1, 0});
  const auto half = AlgebraContext::q(4, Block::BHalf);
  CHECK(code_of([&] { validate_weight(half, std::vector<int>{3, 3}); }) == ErrorCode::NotInBlock);
  CHECK(code_of([&] { W(AlgebraContext::osp(2, 0), {2, 1}); }) == ErrorCode::SignRequired);
  CHECK(code_of([&] { W(AlgebraContext::osp(2, 0), {2, 0}, 1); }) == ErrorCode::SignIllegal);
  CHECK(code_of([&] { W(AlgebraContext::q(4), {1, 1}); }) == ErrorCode::NotInBlock);
  CHECK(code_of([] { AlgebraContext::q(3, Block::BHalf); }) == ErrorCode::UsageError);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_block(AlgebraContext::q(2), 4).size() == 3);
  const auto h = enumerate_block(AlgebraContext::q(2, Block::BHalf), 5);
  REQUIRE(h.size() == 3);
  CHECK(format_weight(h[0]) == "1/2");
  CHECK(format_weight(h[2]) == "5/2");
  const auto o = enumerate_block(AlgebraContext::osp(1, 0), 2);
  REQUIRE(o.size() == 3);
  CHECK(format_weight(o[0]) == "0");
  CHECK(format_weight(o[1]) == "+ 1");
  CHECK(format_weight(o[2]) == "- 1");
  CHECK(code_of([] { enumerate_block(AlgebraContext::gl(3), 200, std::nullopt, 100); }) ==
        ErrorCode::WindowTooLarge);
  // Strictly sorted, no duplicates.
  const auto g = enumerate_block(AlgebraContext::gl(2), 6);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(weight_less(g[i - 1], g[i]));
}

TEST_CASE("tail and parity") {
  CHECK(tail(W(AlgebraContext::osp(3, 0), {0, 0, 0})) == 3);
  CHECK(tail(W(AlgebraContext::q(5), {4, 0})) == 1);
  CHECK(tail(W(AlgebraContext::gl(3), {2, 1, 0})) == 0);
  const auto q4 = AlgebraContext::q(4);
  CHECK(pari_rel(W(q4, {2, 1}), W(q4, {1, 0})) == 0);
  CHECK(pari_rel(W(q4, {3, 1}), W(q4, {1, 0})) == 1);
  CHECK(pari_abs(base_weight(AlgebraContext::q(4, Block::BHalf))) == 0);
  CHECK_THROWS_AS(pari_rel(W(q4, {1, 0}), W(AlgebraContext::q(5), {1, 0})), Error);
}

TEST_CASE("epsilon delta form") {
  CHECK(to_epsilon_delta(W(AlgebraContext::gl(3), {2, 1, 0})) == "0");
  CHECK(to_epsilon_delta(W(AlgebraContext::q(4), {1, 0})) == "ε1-ε4");
}

TEST_CASE("tau on weights") {
  const auto t2 = AlgebraContext::osp(3, 2);
  for (const auto& w : enumerate_block(t2, 8)) CHECK(tau_inv_weight(tau_weight(w)) == w);
  CHECK(is_zero_weight(tau_weight(base_weight(t2))));
}

TEST_CASE("general q weights") {
  const auto mu = make_general_q({2, 0, -2, -6});  // e1 - e3 - 3e4
  CHECK(atypicality(mu) == 1);
  CHECK(is_stable(mu));
  CHECK(core_of(mu).to_string() == "{-3,0}");
  const auto [c, red] = reduce(mu);
  CHECK(c == AlgebraContext::q(3));
  CHECK(red.coords == std::vector<int>{1});

  const auto nu = make_general_q({6, 0, 0, -2});  // 3e1 - e4
  const auto [c2, red2] = reduce(nu);
  CHECK(c2 == AlgebraContext::q(2));
  CHECK(is_zero_weight(red2));

  CHECK_FALSE(is_stable(make_general_q({8, 4, -2, -4})));  // 4e1+2e2-e3-2e4

  const auto eta = make_general_q({3, -1, -3});  // (3/2)e1 - (1/2)e2 - (3/2)e3
  const auto [c3, red3] = reduce(eta);
  CHECK(c3 == AlgebraContext::q(2, Block::BHalf));
  CHECK(format_weight(red3) == "1/2");

  CHECK(core_of(make_general_q({4, 2, 0, 0, 0, 0, 0, -2})).core_twice == std::vector<int>{0, 4});
  CHECK_THROWS_AS(make_general_q({0, 2}), Error);
  CHECK_THROWS_AS(make_general_q({1, 0}), Error);
  const auto typical = make_general_q({6, 2});
  CHECK(atypicality(typical) == 0);
  CHECK_THROWS_AS(reduce(typical), Error);
}
