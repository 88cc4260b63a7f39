#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "superext/graph_io.hpp"

using namespace superext;

TEST_CASE("json schema") {
  const auto g = k0_graph(enumerate_block(AlgebraContext::q(3), 6));
  const auto j = nlohmann::json::parse(graph_to_json(g));
  CHECK(j["algebra"] == "q(3)");
  CHECK(j["block"] == "B0");
  REQUIRE(j["vertices"].size() == 4);
  CHECK(j["vertices"][0]["diagram"] == "x^1>");
  CHECK(j["vertices"][0]["tail"] == 1);
  REQUIRE(j["edges"].size() == 4);
  for (const auto& e : j["edges"]) {
    CHECK(e["kind"] == "K0");
    CHECK(e.contains("kpoly"));
    CHECK(e["exact"] == true);
  }
  CHECK(graph_to_json(g) == graph_to_json(k0_graph(enumerate_block(AlgebraContext::q(3), 6))));
}

TEST_CASE("dot output") {
  const auto g = k0_graph(enumerate_block(AlgebraContext::q(2), 4));
  const std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t pos = 0, twice = 0;
  while ((pos = dot.find("v0 -> v1", pos)) != std::string::npos) ++twice, ++pos;
  CHECK(twice == 2);
  const std::string ext = graph_to_dot(ext_graph(enumerate_block(AlgebraContext::q(3), 6)));
  CHECK(ext.rfind("graph", 0) == 0);
  CHECK(ext.find("--") != std::string::npos);
}

TEST_CASE("ascii output") {
  const auto text = graph_to_ascii(k0_graph(enumerate_block(AlgebraContext::gl(1), 4, -2)));
  CHECK(text.find("gl(1|1) B0: 4 vertices, 3 edges") == 0);
}
