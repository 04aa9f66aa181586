#include <doctest.h>

#include <algorithm>
#include <set>

#include "fgd/arrow.hpp"
#include "fgd/sampler.hpp"
#include "test_support.hpp"

using namespace fgd;
namespace tg = fgd::testing;

namespace {

// Raw words are written right-to-left (the composition order); a travel
// order walk becomes a raw word by reversing it.
std::vector<OrientedEdge> as_raw(std::vector<OrientedEdge> travel) {
  std::reverse(travel.begin(), travel.end());
  return travel;
}

// Independent reduction oracle: cancel one adjacent inverse pair at the
// given position, recursively exploring every cancellation order.
void all_reductions(const std::vector<OrientedEdge>& word,
                    std::set<std::vector<OrientedEdge>>* out) {
  bool cancellable = false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (!word[i].cancels(word[i + 1])) continue;
    cancellable = true;
    std::vector<OrientedEdge> next;
    next.insert(next.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
    all_reductions(next, out);
  }
  if (!cancellable) out->insert(word);
}

// Single-direction oracles: cancel the leftmost / rightmost pair first.
std::vector<OrientedEdge> reduce_directional(std::vector<OrientedEdge> word, bool leftmost) {
  for (;;) {
    bool changed = false;
    if (leftmost) {
      for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i].cancels(word[i + 1])) {
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                     word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
    } else {
      for (std::size_t i = word.size(); i-- >= 2;)
        if (word[i - 1].cancels(word[i])) {
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i) - 1,
                     word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          changed = true;
          break;
        }
    }
    if (!changed) return word;
  }
}

// Random walk of the given length starting anywhere, in travel order; may
// backtrack freely.
std::vector<OrientedEdge> random_walk(const MultiGraph& g, VertexId start, int len,
                                      Sampler& rng) {
  std::vector<std::vector<OrientedEdge>> out(g.vertex_count);
  for (const Edge& e : g.edges) {
    out[e.src].push_back({e.id, true});
    out[e.dst].push_back({e.id, false});
  }
  std::vector<OrientedEdge> walk;
  VertexId at = start;
  for (int i = 0; i < len; ++i) {
    if (out[at].empty()) break;
    const OrientedEdge oe = rng.pick(out[at]);
    walk.push_back(oe);
    at = head(g, oe);
  }
  return walk;
}

}  // namespace

TEST_CASE("reduce cancels inverse pairs") {
  const MultiGraph r1 = tg::rose1();
  SUBCASE("a a^-1 collapses to the unit") {
    const std::vector<OrientedEdge> raw{{0, true}, {0, false}};
    CHECK(reduce(r1, raw, 0) == Arrow::unit(0));
  }
  SUBCASE("e0^-1 e0 collapses to the unit at the source side") {
    const MultiGraph d2 = tg::doubled_edge();
    const std::vector<OrientedEdge> raw{{0, false}, {0, true}};  // rightmost travels first
    CHECK(reduce(d2, raw, 0) == Arrow::unit(0));
    CHECK_THROWS_AS(reduce(d2, raw, 1), DomainError);
  }
  SUBCASE("a b b^-1 leaves a on the rose with two loops") {
    const MultiGraph r2 = tg::rose2();
    const std::vector<OrientedEdge> raw{{0, true}, {1, true}, {1, false}};
    const Arrow got = reduce(r2, raw, 0);
    CHECK(got.word() == std::vector<OrientedEdge>{{0, true}});
    // brute-force: every cancellation order gives the same word
    std::set<std::vector<OrientedEdge>> normal_forms;
    all_reductions(raw, &normal_forms);
    REQUIRE(normal_forms.size() == 1);
    CHECK(*normal_forms.begin() == got.word());
  }
  SUBCASE("mismatched endpoints throw NonConcatenable") {
    const MultiGraph d2 = tg::doubled_edge();
    const std::vector<OrientedEdge> raw{{0, true}, {1, true}};
    CHECK_THROWS_WITH_AS(reduce(d2, raw, 0), doctest::Contains("NonConcatenable"), DomainError);
  }
}

TEST_CASE("normal form confluence on random walks") {
  Sampler rng(3);
  const MultiGraph graphs[] = {tg::rose1(), tg::rose2(), tg::doubled_edge(), tg::triangle()};
  for (int i = 0; i < 200; ++i) {
    const MultiGraph& g = graphs[i % 4];
    const VertexId start = rng.below(g.vertex_count);
    const std::vector<OrientedEdge> raw = as_raw(random_walk(g, start, rng.below(13), rng));
    const Arrow reduced = reduce(g, raw, start);
    CHECK(reduced.word() == reduce_directional(raw, true));
    CHECK(reduced.word() == reduce_directional(raw, false));
    if (raw.size() <= 8) {
      std::set<std::vector<OrientedEdge>> normal_forms;
      all_reductions(raw, &normal_forms);
      REQUIRE(normal_forms.size() == 1);
      CHECK(*normal_forms.begin() == reduced.word());
    }
  }
}

TEST_CASE("compose and inverse") {
  const MultiGraph r1 = tg::rose1();
  const std::vector<OrientedEdge> raw{{0, true}};
  const Arrow a = reduce(r1, raw, 0);
  SUBCASE("a * a = a^2") {
    const Arrow a2 = compose(a, a);
    CHECK(a2.length() == 2);
    CHECK(a2.word() == std::vector<OrientedEdge>{{0, true}, {0, true}});
  }
  SUBCASE("unit laws") {
    CHECK(compose(a, Arrow::unit(0)) == a);
    CHECK(compose(Arrow::unit(0), a) == a);
  }
  SUBCASE("inverse flips and reverses") {
    const Arrow a2 = compose(a, a);
    const Arrow back = inverse(a2);
    CHECK(back.word() == std::vector<OrientedEdge>{{0, false}, {0, false}});
    CHECK(inverse(Arrow::unit(0)) == Arrow::unit(0));
  }
  SUBCASE("doubled edge: inverse against itself cancels") {
    const MultiGraph d2 = tg::doubled_edge();
    const std::vector<OrientedEdge> seg{{0, true}};
    const Arrow e1 = reduce(d2, seg, 0);   // 0 -> 1
    const Arrow e1inv = inverse(e1);       // 1 -> 0
    CHECK(compose(e1inv, e1) == Arrow::unit(0));
    CHECK(compose(e1, e1inv) == Arrow::unit(1));
    CHECK_THROWS_WITH_AS(compose(e1, e1), doctest::Contains("NotComposable"), DomainError);
  }
  SUBCASE("doubled edge via the second copy swaps endpoints") {
    const MultiGraph d2 = tg::doubled_edge();
    const std::vector<OrientedEdge> seg{{1, true}};
    const Arrow e2 = reduce(d2, seg, 0);
    const Arrow rev = inverse(e2);
    CHECK(rev.source() == 1);
    CHECK(rev.range() == 0);
    CHECK(rev.word() == std::vector<OrientedEdge>{{1, false}});
  }
}

TEST_CASE("enumerate_ball sizes and order") {
  SUBCASE("rose radius 2: unit, a, a~, a.a, a~.a~") {
    const std::vector<Arrow> ball = enumerate_ball(tg::rose1(), 2);
    REQUIRE(ball.size() == 5);
    CHECK(ball[0] == Arrow::unit(0));
    CHECK(ball[1].word() == std::vector<OrientedEdge>{{0, true}});
    CHECK(ball[2].word() == std::vector<OrientedEdge>{{0, false}});
    CHECK(ball[3].word() == std::vector<OrientedEdge>{{0, true}, {0, true}});
    CHECK(ball[4].word() == std::vector<OrientedEdge>{{0, false}, {0, false}});
  }
  SUBCASE("radius 0 gives exactly the units") {
    for (const MultiGraph& g : {tg::rose2(), tg::triangle(), tg::path4()}) {
      const std::vector<Arrow> ball = enumerate_ball(g, 0);
      CHECK(static_cast<int>(ball.size()) == g.vertex_count);
      for (const Arrow& a : ball) CHECK(a.is_unit());
    }
  }
  SUBCASE("rose with two loops, radius 1: five arrows") {
    CHECK(enumerate_ball(tg::rose2(), 1).size() == 5);
  }
  SUBCASE("free group growth on the rose with two loops") {
    // 1 + 4 + 12 + 36 reduced words
    CHECK(enumerate_ball(tg::rose2(), 3).size() == 53);
  }
  SUBCASE("every ball arrow is reduced and correctly glued") {
    Sampler rng(5);
    for (int i = 0; i < 10; ++i) {
      MultiGraph g = tg::random_connected_graph(rng);
      validate_graph(g);
      for (const Arrow& a : enumerate_ball(g, 3)) {
        CHECK(reduce(g, a.word(), a.source()) == a);
      }
    }
  }
}

TEST_CASE("associativity and inverse laws on ball arrows") {
  for (const MultiGraph& g : {tg::rose2(), tg::doubled_edge(), tg::triangle()}) {
    const std::vector<Arrow> ball = enumerate_ball(g, 2);
    for (const Arrow& a : ball) {
      CHECK(compose(a, inverse(a)) == Arrow::unit(a.range()));
      CHECK(compose(inverse(a), a) == Arrow::unit(a.source()));
      for (const Arrow& b : ball) {
        if (a.source() != b.range()) continue;
        for (const Arrow& c : ball) {
          if (b.source() != c.range()) continue;
          CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
      }
    }
  }
}

TEST_CASE("arrow text form") {
  const MultiGraph d2 = tg::doubled_edge();
  const std::vector<OrientedEdge> raw{{0, false}, {1, true}};  // travel e1 (0->1), then e0 back
  const Arrow loop = reduce(d2, raw, 0);
  CHECK(to_string(loop) == "0<-0: e0~.e1");
  CHECK(to_string(Arrow::unit(1)) == "1<-1: 1");
}
