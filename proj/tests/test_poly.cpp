#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superext/poly.hpp"

using namespace superext;

TEST_CASE("printing") {
  CHECK(KPoly().to_string() == "0");
  CHECK(KPoly::constant(1).to_string() == "1");
  CHECK((KPoly::constant(1) + KPoly::monomial(2)).to_string() == "1+z^2");
  CHECK(KPoly::monomial(1, 2).to_string() == "2z");
  CHECK((KPoly::monomial(1) + KPoly::monomial(3)).to_string() == "z+z^3");
}

TEST_CASE("arithmetic") {
  const KPoly p = KPoly::monomial(1) + KPoly::monomial(3);
  CHECK(p.terms() == 2);
  CHECK(p.degree() == 3);
  CHECK(p.low_degree() == 1);
  CHECK(p.eval(2) == 10);
  CHECK(p.shifted(2) == KPoly::monomial(3) + KPoly::monomial(5));
  CHECK(KPoly(std::vector<std::int64_t>{0, 0}).is_zero());
}

TEST_CASE("laurent helpers") {
  Laurent l = {{-1, 3}, {0, 2}, {2, 1}};
  CHECK(truncate_plus(l) == KPoly::constant(2) + KPoly::monomial(2));
  CHECK(parity_bar(KPoly::constant(3)) == 1);
  CHECK(parity_bar(KPoly::monomial(1)) == 0);
  CHECK(to_laurent(KPoly::monomial(2, 5)) == Laurent{{2, 5}});
}

TEST_CASE("two variables") {
  KPoly2 k;
  CHECK(k.is_zero());
  k.add_w(2, KPoly::constant(1) + KPoly::monomial(2));
  CHECK(k.to_string() == "(1+z^2)w^2");
  CHECK(k.w_support() == std::set<int>{2});
  KPoly2 u;
  u.add(1, 1, 2);
  CHECK(u.to_string() == "2zw");
  u.mark_unknown(3);
  CHECK(u.unknown() == std::set<int>{3});
}
