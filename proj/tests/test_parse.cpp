#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/error.hpp"
#include "superext/parse.hpp"

using namespace superext;

TEST_CASE("algebras") {
  CHECK(parse_algebra("gl(3|3)") == AlgebraContext::gl(3));
  CHECK(parse_algebra("osp(6|4)") == AlgebraContext::osp(2, 2));
  CHECK(parse_algebra("osp(7|6)") == AlgebraContext::osp(3, 1));
  CHECK(parse_algebra("q(4)", "B1/2") == AlgebraContext::q(4, Block::BHalf));
  CHECK(parse_algebra("q_5") == AlgebraContext::q(5));
  CHECK_THROWS_AS(parse_algebra("gl(3|2)"), Error);
  CHECK_THROWS_AS(parse_algebra("osp(9|4)"), Error);
  CHECK_THROWS_AS(parse_algebra("sl(2)"), Error);
  CHECK_THROWS_AS(parse_algebra("q(3)", "B1/2"), Error);
}

TEST_CASE("numbers and weights") {
  CHECK(parse_half("3/2") == 3);
  CHECK(parse_half("-1") == -2);
  CHECK_THROWS_AS(parse_half("4/2"), Error);
  CHECK_THROWS_AS(parse_half("x"), Error);
  const auto s = parse_weight_spec("+ 2,1");
  CHECK(s.sign == 1);
  CHECK(s.twice == std::vector<int>{4, 2});
  CHECK(parse_weight_spec("-,0,0").sign == -1);
  CHECK(parse_weight_spec("-1,-2").twice == std::vector<int>{-2, -4});
  CHECK_FALSE(parse_weight_spec("+2").sign.has_value());
  CHECK(parse_weight_spec("").twice.empty());
  CHECK(parse_block_weight(AlgebraContext::osp(2, 0), "+ 2,1").sign == 1);
  CHECK_THROWS_AS(parse_general_q("+ 1,0"), Error);
}
