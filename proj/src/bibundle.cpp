#include "fgd/bibundle.hpp"

#include <algorithm>
#include <map>

namespace fgd {

EquivalenceBibundle make_bibundle(const MultiGraph& g, VertexId base) {
  EquivalenceBibundle b;
  b.graph = &g;
  b.base = base;
  Transversal t(g, base);
  SpanningTree tree = spanning_tree(g, base);
  b.sec = section(t, tree);
  b.deck = deck_action(t, tree);
  return b;
}

void validate_bibundle(const EquivalenceBibundle& b, int radius) {
  const std::vector<Arrow> cover = b.transversal().ball(radius);
  const std::vector<Arrow> isotropy = isotropy_ball(*b.graph, b.base, radius);
  for (const Arrow& rho : isotropy) {
    for (const Arrow& y : cover) {
      if (deck_act(rho, y) == y && !rho.is_unit())
        throw DomainError(Errc::bibundle_invalid,
                          "deck action not free: " + to_string(rho) + " fixes " + to_string(y));
    }
  }
  // Actions commute: (rho . y) . gamma == rho . (y . gamma).
  const std::vector<Arrow> right = enumerate_ball(*b.graph, std::min(radius, 2));
  for (const Arrow& rho : isotropy)
    for (const Arrow& y : cover)
      for (const Arrow& gamma : right) {
        if (y.source() != gamma.range()) continue;
        if (compose(deck_act(rho, y), gamma) != deck_act(rho, compose(y, gamma)))
          throw DomainError(Errc::bibundle_invalid, "deck and right actions do not commute");
      }
}

std::pair<Arrow, Arrow> kinetics(const Arrow& y, const Arrow& gamma) {
  return {y, compose(y, gamma)};
}

std::pair<Arrow, Arrow> kinetics_inverse(const Arrow& y, const Arrow& z) {
  if (y.range() != z.range())
    throw DomainError(Errc::not_composable, "pair is not in the fiber product over the range");
  return {y, compose(inverse(y), z)};
}

Arrow quotient_map(const Arrow& y, const Arrow& z) {
  if (y.range() != z.range())
    throw DomainError(Errc::not_composable, "pair is not in the fiber product over the range");
  return compose(inverse(y), z);
}

CheckResult verify_figure1(const EquivalenceBibundle& b, int radius) {
  CheckResult r;
  r.name = "figure1_commutes";
  const std::vector<Arrow> cover = b.transversal().ball(radius);
  const std::vector<Arrow> all = enumerate_ball(*b.graph, radius);

  for (const Arrow& y : cover) {
    for (const Arrow& gamma : all) {
      if (y.source() != gamma.range()) continue;
      const auto [y1, z] = kinetics(y, gamma);
      r.count(y1 == y && quotient_map(y1, z) == gamma,
              "q(k(y, gamma)) != gamma at y=" + to_string(y) + ", gamma=" + to_string(gamma));
      const auto [y2, gamma2] = kinetics_inverse(y1, z);
      r.count(y2 == y && gamma2 == gamma,
              "k^-1(k(y, gamma)) != (y, gamma) at y=" + to_string(y));
    }
  }
  for (const Arrow& y : cover) {
    for (const Arrow& z : cover) {
      const auto [y3, gamma3] = kinetics_inverse(y, z);
      r.count(kinetics(y3, gamma3).second == z,
              "k(k^-1(y, z)) != (y, z) at y=" + to_string(y) + ", z=" + to_string(z));
    }
  }
  return r;
}

CheckResult verify_quotient_bijection(const EquivalenceBibundle& b, int radius) {
  CheckResult r;
  r.name = "quotient_bijection";
  const QuotientGroupoid q(b);
  const MultiGraph& g = *b.graph;
  const std::vector<Arrow> ball = enumerate_ball(g, radius);

  std::map<QuotArrow, Arrow> image;
  for (const Arrow& gamma : ball) {
    const QuotArrow qa = q.from_pi1(gamma);
    r.count(q.to_pi1(qa) == gamma, "q(lift(gamma)) != gamma at " + to_string(gamma));
    r.count(q.range_of(qa) == gamma.range() && q.source_of(qa) == gamma.source(),
            "lift changes endpoints at " + to_string(gamma));
    auto [it, fresh] = image.emplace(qa, gamma);
    r.count(fresh, "lift is not injective at " + to_string(gamma));
  }
  for (const Arrow& a : ball)
    for (const Arrow& c : ball) {
      if (a.source() != c.range()) continue;
      r.count(q.compose(q.from_pi1(a), q.from_pi1(c)) == q.from_pi1(compose(a, c)),
              "lift does not respect composition at " + to_string(a) + " , " + to_string(c));
    }

  // Orbit equality: classes agree exactly on deck-translated pairs.
  const int small = std::min(radius, 2);
  const std::vector<Arrow> cover = b.transversal().ball(small);
  for (const Arrow& rho : b.deck.generators)
    for (const Arrow& y : cover)
      for (const Arrow& z : cover) {
        r.count(q.orbit_class(y, z) == q.orbit_class(deck_act(rho, y), deck_act(rho, z)),
                "orbit class moved by a deck translate at " + to_string(y));
        r.count(quotient_map(y, z) == quotient_map(deck_act(rho, y), deck_act(rho, z)),
                "quotient map moved by a deck translate at " + to_string(y));
      }
  // Conversely, pairs with the same class differ by the deck element y'y^-1.
  std::map<Arrow, std::vector<std::pair<Arrow, Arrow>>> classes;
  for (const Arrow& y : cover)
    for (const Arrow& z : cover) classes[quotient_map(y, z)].push_back({y, z});
  for (const auto& [gamma, pairs] : classes) {
    for (const auto& [y, z] : pairs)
      for (const auto& [y2, z2] : pairs) {
        const Arrow rho = compose(y2, inverse(y));
        r.count(rho.is_loop() && deck_act(rho, y) == y2 && deck_act(rho, z) == z2,
                "pairs in one class are not deck translates at " + to_string(gamma));
      }
  }
  return r;
}

QuotArrow QuotientGroupoid::orbit_class(const Arrow& y, const Arrow& z) const {
  if (y.range() != b_.base || z.range() != b_.base)
    throw DomainError(Errc::ambient_mismatch, "pair does not live on the cover");
  // Translate by the unique deck element moving y onto the section arrow
  // over its covering-fiber vertex.
  const Arrow& c = b_.sec.at(y.source());
  const Arrow rho = fgd::compose(c, fgd::inverse(y));
  return QuotArrow{c, fgd::compose(rho, z)};
}

QuotArrow QuotientGroupoid::from_pi1(const Arrow& gamma) const {
  const Arrow& c = b_.sec.at(gamma.range());
  return QuotArrow{c, fgd::compose(c, gamma)};
}

std::vector<VertexId> QuotientGroupoid::units() const {
  std::vector<VertexId> u(static_cast<std::size_t>(b_.graph->vertex_count));
  for (VertexId v = 0; v < b_.graph->vertex_count; ++v) u[static_cast<std::size_t>(v)] = v;
  return u;
}

std::vector<QuotArrow> QuotientGroupoid::ball(int radius) const {
  std::vector<QuotArrow> out;
  const std::vector<Arrow> cover = b_.transversal().ball(radius);
  for (VertexId u = 0; u < b_.graph->vertex_count; ++u)
    for (const Arrow& z : cover) out.push_back(QuotArrow{b_.sec.at(u), z});
  std::sort(out.begin(), out.end());
  return out;
}

QuotArrow QuotientGroupoid::compose(const QuotArrow& a, const QuotArrow& b) const {
  if (source_of(a) != range_of(b))
    throw DomainError(Errc::not_composable, "quotient arrows not composable");
  // Align the representative of b so its first component equals a.mate,
  // then [(x,y)][(y,z)] = [(x,z)].
  const Arrow rho = fgd::compose(a.mate, fgd::inverse(b.anchor));
  return QuotArrow{a.anchor, fgd::compose(rho, b.mate)};
}

}  // namespace fgd
