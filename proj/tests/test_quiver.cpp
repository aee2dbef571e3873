#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhh/quiver.hpp"

using namespace qhh;

namespace {

Quiver ejemplo() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("alpha", "1", "2");
  q.add_arrow("beta", "1", "2");
  q.add_arrow("gamma", "2", "3");
  return q;
}

Quiver loop() {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("x", "v", "v");
  return q;
}

}  // namespace

TEST_CASE("path enumeration") {
  auto q = ejemplo();
  auto ps = enumerate_paths(q, 2, "1", "3");
  REQUIRE(ps.size() == 2);
  CHECK(path_str(q, ps[0]) == "alpha.gamma");
  CHECK(path_str(q, ps[1]) == "beta.gamma");

  auto trivials = enumerate_paths(q, 0);
  REQUIRE(trivials.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(path_str(q, trivials[v]) == "e_" + q.vertex_name(v));

  auto lp = enumerate_paths(loop(), 3);
  REQUIRE(lp.size() == 4);
  CHECK(path_str(loop(), lp[3]) == "x.x.x");

  CHECK_THROWS_AS(enumerate_paths(q, 2, "nope", "3"), ParseError);
}

TEST_CASE("loop quiver has max_len+1 paths") {
  auto q = loop();
  for (int L = 0; L <= 6; ++L) CHECK(enumerate_paths(q, L).size() == static_cast<std::size_t>(L + 1));
}

TEST_CASE("enumeration is strictly ordered and duplicate free") {
  auto q = ejemplo();
  auto ps = enumerate_paths(q, 2);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(compare_paths(q, ps[i - 1], ps[i]) < 0);
}

TEST_CASE("composition") {
  auto q = ejemplo();
  Path e1{0, {}};
  Path alpha{0, {0}};
  Path beta{0, {1}};
  Path gamma{1, {2}};
  CHECK(compose(q, e1, alpha) == alpha);
  CHECK(path_str(q, compose(q, alpha, gamma)) == "alpha.gamma");
  CHECK_THROWS_AS(compose(q, alpha, beta), ModelError);
  CHECK_FALSE(try_compose(q, alpha, beta).has_value());

  // associativity wherever defined
  auto ab = compose(q, compose(q, e1, alpha), gamma);
  auto ab2 = compose(q, e1, compose(q, alpha, gamma));
  CHECK(ab == ab2);
  // trivial paths are two-sided identities
  Path e3{2, {}};
  CHECK(compose(q, compose(q, alpha, gamma), e3) == compose(q, alpha, gamma));
}

TEST_CASE("path table coordinates") {
  auto q = ejemplo();
  PathTable t(q, 2);
  CHECK(t.size() == 8);  // 3 trivial + 3 arrows + 2 composites
  const auto& c13 = t.coords(0, 2);
  REQUIRE(c13.size() == 2);
  CHECK(path_str(q, t.path(c13[0])) == "alpha.gamma");
  CHECK(path_str(q, t.path(c13[1])) == "beta.gamma");
  CHECK(t.id_of(Path{0, {0}}) == t.find(Path{0, {0}}).value());
}

TEST_CASE("connectivity flag") {
  Quiver q;
  q.add_vertex("a");
  q.add_vertex("b");
  CHECK_FALSE(q.connected());
  q.add_arrow("f", "a", "b");
  CHECK(q.connected());
  CHECK_THROWS_AS(q.add_vertex("a"), ParseError);
  CHECK_THROWS_AS(q.add_arrow("f", "a", "b"), ParseError);
  CHECK_THROWS_AS(q.add_arrow("g", "a", "zz"), ParseError);
}
