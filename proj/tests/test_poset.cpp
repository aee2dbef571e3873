#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "qhh/field.hpp"
#include "qhh/poset.hpp"

using namespace qhh;

namespace {
const Rationals Q;

Poset poset_from(const std::string& name) { return parse_poset_file(data_file(name)); }
}  // namespace

TEST_CASE("chain enumeration") {
  auto two = poset_from("chain2.poset");
  CHECK(chains(two, 0).size() == 2);
  REQUIRE(chains(two, 1).size() == 1);
  CHECK(chains(two, 1)[0] == std::vector<int>{0, 1});
  CHECK(chains(two, 2).empty());

  auto sigma1 = poset_from("sigma1.poset");
  CHECK(chains(sigma1, 0).size() == 7);

  auto crown = poset_from("crown.poset");
  CHECK(chains(crown, 1).size() == 4);
}

TEST_CASE("boundary matrices") {
  auto two = poset_from("chain2.poset");
  auto d1 = simplicial_boundary(Q, two, 0);
  REQUIRE(d1.rows() == 2);
  REQUIRE(d1.cols() == 1);
  CHECK(d1.at(0, 0) == -1);  // delta(a>b) = (b) - (a)
  CHECK(d1.at(1, 0) == 1);

  auto three = poset_from("chain3.poset");
  auto d2 = simplicial_boundary(Q, three, 1);
  // delta(a>b>c) = (b>c) - (a>c) + (a>b); degree-1 chains in lex order:
  // (a>b), (a>c), (b>c)
  REQUIRE(d2.cols() == 1);
  CHECK(d2.at(0, 0) == 1);
  CHECK(d2.at(1, 0) == -1);
  CHECK(d2.at(2, 0) == 1);

  auto crown = poset_from("crown.poset");
  CHECK(rank(Q, simplicial_boundary(Q, crown, 0)) == 3);  // 4-cycle incidence matrix
}

TEST_CASE("boundary of boundary vanishes") {
  for (const char* name : {"sigma1.poset", "sigma2.poset", "diamond.poset", "an3.poset"}) {
    auto p = poset_from(name);
    for (int n = 0; n + 1 <= 3; ++n) {
      auto outer = simplicial_boundary(Q, p, n);
      auto inner = simplicial_boundary(Q, p, n + 1);
      CHECK(is_zero_matrix(Q, matmul(Q, outer, inner)));
    }
  }
}

TEST_CASE("simplicial cohomology dimensions") {
  CHECK(simplicial_cohomology_dims(Q, poset_from("crown.poset"), 2) ==
        std::vector<std::size_t>{1, 1, 0});
  // a poset with a maximum element is a cone and must compute contractible
  CHECK(simplicial_cohomology_dims(Q, poset_from("diamond.poset"), 3) ==
        std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(simplicial_cohomology_dims(Q, poset_from("sigma1.poset"), 2) ==
        std::vector<std::size_t>{1, 1, 0});
  CHECK(simplicial_cohomology_dims(Q, poset_from("sigma2.poset"), 2) ==
        std::vector<std::size_t>{1, 0, 0});
  // disconnected comparability graph: SH^0 counts components
  std::istringstream in("element a\nelement b\n");
  CHECK(simplicial_cohomology_dims(Q, parse_poset(in), 1) == std::vector<std::size_t>{2, 0});
}

TEST_CASE("iz reduction of the bundled posets") {
  auto r1 = iz_reduce(poset_from("sigma1.poset"));
  CHECK(r1.names() == std::vector<std::string>{"e1", "e2", "e3", "al", "bg"});
  std::vector<std::pair<int, int>> covers1{{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}};
  CHECK(r1.covers() == covers1);

  auto r2 = iz_reduce(poset_from("sigma2.poset"));
  CHECK(r2.names() == std::vector<std::string>{"e1", "e2", "e3", "bg"});
  std::vector<std::pair<int, int>> covers2{{0, 3}, {1, 3}, {2, 3}};
  CHECK(r2.covers() == covers2);

  auto rc = iz_reduce(poset_from("chain3.poset"));
  CHECK(rc.names() == std::vector<std::string>{"a", "c"});
  CHECK(rc.covers() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(simplicial_cohomology_dims(Q, poset_from("chain3.poset"), 2) ==
        simplicial_cohomology_dims(Q, rc, 2));

  // crowns are already reduced
  CHECK(iz_reduce(poset_from("crown.poset")).size() == 4);
}

TEST_CASE("iz reduction preserves cohomology on the bundled corpus") {
  for (const char* name : {"chain2.poset", "chain3.poset", "diamond.poset", "crown.poset",
                           "sigma1.poset", "sigma2.poset", "an2.poset", "an3.poset",
                           "an4.poset"}) {
    CAPTURE(name);
    auto p = poset_from(name);
    CHECK(simplicial_cohomology_dims(Q, p, 4) == simplicial_cohomology_dims(Q, iz_reduce(p), 4));
  }
}

TEST_CASE("incidence presentations") {
  auto s2 = incidence_presentation(poset_from("sigma2.poset"));
  CHECK(s2.quiver.vertex_count() == 7);
  // the three parallel Hasse 2-paths from e2 to bg give three pairwise differences
  int e2_bg = 0;
  for (const auto& r : s2.relations)
    if (s2.quiver.vertex_name(r.src) == "e2" && s2.quiver.vertex_name(r.tgt) == "bg") ++e2_bg;
  CHECK(e2_bg == 3);

  auto two = incidence_presentation(poset_from("chain2.poset"));
  CHECK(two.relations.empty());
  CHECK(two.bound == 2);

  auto dia = incidence_presentation(poset_from("diamond.poset"));
  CHECK(dia.relations.size() == 1);
  CHECK(dia.bound == 3);
}

TEST_CASE("poset file handling") {
  std::istringstream cyc("element a\nelement b\ncover a b\ncover b a\n");
  CHECK_THROWS_AS(parse_poset(cyc), ModelError);
  std::istringstream dup("element a\nelement a\n");
  CHECK_THROWS_AS(parse_poset(dup), ParseError);
  std::istringstream unk("element a\ncover a b\n");
  CHECK_THROWS_AS(parse_poset(unk), ParseError);

  // redundant cover lines collapse to the true Hasse diagram
  std::istringstream red("element a\nelement b\nelement c\ncover a b\ncover b c\ncover a c\n");
  auto p = parse_poset(red);
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  auto round = parse_poset_file(data_file("sigma1.poset"));
  std::istringstream again(serialize_poset(round));
  CHECK(serialize_poset(parse_poset(again)) == serialize_poset(round));
}
