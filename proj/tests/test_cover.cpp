#include <doctest.h>

#include <set>

#include "fgd/cover.hpp"
#include "test_support.hpp"

using namespace fgd;
namespace tg = fgd::testing;

TEST_CASE("transversal fibers") {
  SUBCASE("rose: fiber over the vertex at radius 2 has 5 arrows") {
    const MultiGraph g = tg::rose1();
    const Transversal t(g, 0);
    CHECK(t.fiber(0, 2).size() == 5);
  }
  SUBCASE("doubled edge at radius 1") {
    const MultiGraph g = tg::doubled_edge();
    const Transversal t(g, 0);
    const auto over_q = t.fiber(1, 1);
    REQUIRE(over_q.size() == 2);
    for (const Arrow& y : over_q) {
      CHECK(y.source() == 1);
      CHECK(y.range() == 0);
      CHECK(y.length() == 1);
    }
    const auto over_p = t.fiber(0, 1);
    REQUIRE(over_p.size() == 1);
    CHECK(over_p[0] == Arrow::unit(0));
  }
  SUBCASE("tree: every fiber is a single geodesic") {
    const MultiGraph g = tg::path4();
    const Transversal t(g, 0);
    for (VertexId u = 0; u < 4; ++u) CHECK(t.fiber(u, 5).size() == 1);
  }
  SUBCASE("every ball arrow ends at the base") {
    const MultiGraph g = tg::rose2();
    const Transversal t(g, 0);
    for (const Arrow& y : t.ball(3)) CHECK(t.covering_map(y) == y.source());
  }
  SUBCASE("bad base point") {
    const MultiGraph g = tg::rose1();
    CHECK_THROWS_WITH_AS(Transversal(g, 3), doctest::Contains("BadBasePoint"), DomainError);
  }
}

TEST_CASE("section arrows are tree geodesics") {
  SUBCASE("triangle based at 0") {
    const MultiGraph g = tg::triangle();
    const Transversal t(g, 0);
    const Section sec = section(t, spanning_tree(g, 0));
    CHECK(sec.at(0) == Arrow::unit(0));
    // c_2 travels e1 backward then e0 backward
    CHECK(sec.at(2).word() == std::vector<OrientedEdge>{{0, false}, {1, false}});
    CHECK(sec.at(2).source() == 2);
    CHECK(sec.at(2).range() == 0);
  }
  SUBCASE("doubled edge: c_q uses the tree copy backward") {
    const MultiGraph g = tg::doubled_edge();
    const Section sec = section(Transversal(g, 0), spanning_tree(g, 0));
    CHECK(sec.at(1).word() == std::vector<OrientedEdge>{{0, false}});
  }
  SUBCASE("section words use tree edges only") {
    Sampler rng(23);
    for (int i = 0; i < 10; ++i) {
      MultiGraph g = tg::random_connected_graph(rng);
      validate_graph(g);
      const SpanningTree tree = spanning_tree(g, 0);
      const Section sec = section(Transversal(g, 0), tree);
      for (const Arrow& c : sec.to_base)
        for (const OrientedEdge& oe : c.word()) CHECK(tree.contains(oe.edge));
    }
  }
}

TEST_CASE("fundamental group generators") {
  SUBCASE("rose: the loop itself") {
    const MultiGraph g = tg::rose1();
    const auto gens = pi1_generators(Transversal(g, 0), spanning_tree(g, 0));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].word() == std::vector<OrientedEdge>{{0, true}});
  }
  SUBCASE("doubled edge: through e1 and back through e0") {
    const MultiGraph g = tg::doubled_edge();
    const auto gens = pi1_generators(Transversal(g, 0), spanning_tree(g, 0));
    REQUIRE(gens.size() == 1);
    CHECK(to_string(gens[0]) == "0<-0: e0~.e1");
  }
  SUBCASE("triangle: one loop through all three edges") {
    const MultiGraph g = tg::triangle();
    const auto gens = pi1_generators(Transversal(g, 0), spanning_tree(g, 0));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].length() == 3);
    CHECK(gens[0].is_loop());
    CHECK(gens[0].range() == 0);
  }
  SUBCASE("count equals the rank; all are loops at the base") {
    Sampler rng(29);
    for (int i = 0; i < 10; ++i) {
      MultiGraph g = tg::random_connected_graph(rng);
      validate_graph(g);
      const auto gens = pi1_generators(Transversal(g, 0), spanning_tree(g, 0));
      CHECK(static_cast<int>(gens.size()) == pi1_rank(g));
      for (const Arrow& rho : gens) {
        CHECK(rho.is_loop());
        CHECK(rho.range() == 0);
        CHECK(!rho.is_unit());
      }
    }
  }
}

TEST_CASE("deck action") {
  const MultiGraph g = tg::rose1();
  const Transversal t(g, 0);
  const std::vector<OrientedEdge> seg{{0, true}};
  const Arrow a = reduce(g, seg, 0);

  SUBCASE("unit acts trivially, a . a = a^2") {
    CHECK(deck_act(Arrow::unit(0), a) == a);
    CHECK(deck_act(a, a) == compose(a, a));
  }
  SUBCASE("the covering map is preserved") {
    const MultiGraph d2 = tg::doubled_edge();
    const Transversal td(d2, 0);
    const auto gens = pi1_generators(td, spanning_tree(d2, 0));
    for (const Arrow& rho : gens)
      for (const Arrow& y : td.ball(3)) CHECK(deck_act(rho, y).source() == y.source());
  }
  SUBCASE("non-loops are rejected as deck translations") {
    const MultiGraph d2 = tg::doubled_edge();
    const std::vector<OrientedEdge> seg2{{0, true}};
    const Arrow e1 = reduce(d2, seg2, 0);
    CHECK_THROWS_AS(deck_act(e1, Arrow::unit(1)), DomainError);
  }
}

TEST_CASE("orbit-fiber correspondence") {
  // Two cover elements lie in one deck orbit iff they sit over the same
  // vertex, and the unique translator is y z^-1.
  for (const MultiGraph& g : {tg::rose2(), tg::doubled_edge(), tg::triangle()}) {
    const Transversal t(g, 0);
    const std::vector<Arrow> ball = t.ball(3);
    for (const Arrow& y : ball)
      for (const Arrow& z : ball) {
        if (y.source() != z.source()) continue;
        const Arrow rho = compose(y, inverse(z));
        CHECK(rho.is_loop());
        CHECK(rho.range() == 0);
        CHECK(deck_act(rho, z) == y);
      }
  }
}

TEST_CASE("section is a fundamental domain for tree-supported words") {
  const MultiGraph g = tg::triangle();
  const SpanningTree tree = spanning_tree(g, 0);
  const Transversal t(g, 0);
  const Section sec = section(t, tree);
  for (VertexId u = 0; u < g.vertex_count; ++u) {
    int tree_supported = 0;
    for (const Arrow& y : t.fiber(u, 4)) {
      bool on_tree = true;
      for (const OrientedEdge& oe : y.word()) on_tree = on_tree && tree.contains(oe.edge);
      if (on_tree) {
        ++tree_supported;
        CHECK(y == sec.at(u));
      }
    }
    CHECK(tree_supported == 1);
  }
}

TEST_CASE("transitivity: some ball arrow joins every vertex pair") {
  Sampler rng(31);
  for (int i = 0; i < 8; ++i) {
    MultiGraph g = tg::random_connected_graph(rng);
    validate_graph(g);
    const std::vector<Arrow> ball = enumerate_ball(g, g.vertex_count);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Arrow& a : ball) seen.insert({a.source(), a.range()});
    CHECK(static_cast<int>(seen.size()) == g.vertex_count * g.vertex_count);
  }
}
