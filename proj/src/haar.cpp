#include "fgd/haar.hpp"

#include <algorithm>

namespace fgd {

const char* provenance_name(HaarProvenance p) {
  switch (p) {
    case HaarProvenance::from_base_measure: return "from_base_measure";
    case HaarProvenance::from_transversal: return "from_transversal";
    case HaarProvenance::transformation: return "transformation";
    case HaarProvenance::direct_oracle: return "direct_oracle";
  }
  return "unknown";
}

ArrowMeasure HaarSystem::measure_at(VertexId w) const {
  auto wf = weight;
  return ArrowMeasure([wf, w](const Arrow& a) { return wf(w, a); },
                      [w](const Arrow& a) { return a.range() == w; },
                      "the fiber over vertex " + std::to_string(w));
}

HaarSystem haar_from_base_measure(const VertexMeasure& nu, const Transversal& t,
                                  const Section& sec) {
  nu.require_fully_supported();
  if (nu.size() != t.graph().vertex_count)
    throw DomainError(Errc::ambient_mismatch, "base measure size != vertex count");
  const ArrowMeasure lam = compose_family(nu, counting_family(t), t);
  HaarSystem h;
  h.provenance = HaarProvenance::from_base_measure;
  h.base = t.base();
  h.base_measure = nu;
  const Section s = sec;
  h.weight = [lam, s](VertexId w, const Arrow& delta) {
    if (delta.range() != w)
      throw DomainError(Errc::ambient_mismatch, to_string(delta) + " is not in the fiber over " +
                                                    std::to_string(w));
    return lam.weight(compose(s.at(w), delta));
  };
  return h;
}

HaarSystem haar_from_transversal(const ArrowMeasure& lam, const Transversal& t,
                                 const Section& sec, const DeckAction& deck, int check_radius) {
  const std::vector<Arrow> ball = t.ball(check_radius);
  for (const Arrow& y : ball)
    if (lam.weight(y).sign() <= 0)
      throw DomainError(Errc::not_fully_supported,
                        "transversal measure vanishes at " + to_string(y));
  for (const Arrow& rho : deck.generators)
    for (const Arrow& y : ball) {
      if (lam.weight(deck_act(rho, y)) != lam.weight(y))
        throw DomainError(Errc::not_invariant,
                          "measure is not deck-invariant: moved " + to_string(y) + " by " +
                              to_string(rho));
      if (lam.weight(deck_act(inverse(rho), y)) != lam.weight(y))
        throw DomainError(Errc::not_invariant,
                          "measure is not deck-invariant: moved " + to_string(y) + " by " +
                              to_string(inverse(rho)));
    }
  HaarSystem h = haar_with_translators(lam, t.base(), sec.to_base);
  h.provenance = HaarProvenance::from_transversal;
  return h;
}

HaarSystem haar_with_translators(const ArrowMeasure& lam, VertexId base,
                                 std::vector<Arrow> etas) {
  for (std::size_t w = 0; w < etas.size(); ++w) {
    if (etas[w].range() != base || etas[w].source() != static_cast<VertexId>(w))
      throw DomainError(Errc::bad_translator,
                        "translator for vertex " + std::to_string(w) + " must lie in G^x_w");
  }
  HaarSystem h;
  h.provenance = HaarProvenance::from_transversal;
  h.base = base;
  h.weight = [lam, etas](VertexId w, const Arrow& delta) {
    if (delta.range() != w)
      throw DomainError(Errc::ambient_mismatch, to_string(delta) + " is not in the fiber over " +
                                                    std::to_string(w));
    return lam.weight(compose(etas.at(static_cast<std::size_t>(w)), delta));
  };
  return h;
}

HaarSystem direct_weight_oracle(const VertexMeasure& nu, VertexId base) {
  nu.require_fully_supported();
  HaarSystem h;
  h.provenance = HaarProvenance::direct_oracle;
  h.base = base;
  h.base_measure = nu;
  h.weight = [nu](VertexId w, const Arrow& delta) {
    if (delta.range() != w)
      throw DomainError(Errc::ambient_mismatch, to_string(delta) + " is not in the fiber over " +
                                                    std::to_string(w));
    return nu.at(delta.source());
  };
  return h;
}

ArrowMeasure transversal_from_haar(const HaarSystem& h, const Transversal& t) {
  return h.measure_at(t.base());
}

CheckResult compare_haar_systems(const HaarSystem& a, const HaarSystem& b, const MultiGraph& g,
                                 int radius) {
  CheckResult r;
  r.name = "haar_systems_equal";
  for (VertexId w = 0; w < g.vertex_count; ++w) {
    for (const Arrow& delta : Transversal(g, w).ball(radius)) {
      r.count(a.weight(w, delta) == b.weight(w, delta),
              "systems disagree at " + to_string(delta));
    }
  }
  return r;
}

CheckResult verify_haar(const MultiGraph& g, const HaarSystem& h, int radius, int trials,
                        Sampler& rng) {
  Pi1View view(g);
  auto weight = [&h](VertexId w, const Arrow& a) { return h.weight(w, a); };
  return verify_haar_on(view, weight, radius, trials, rng);
}

CheckResult verify_section_independence(const VertexMeasure& nu, const Transversal& t,
                                        const SpanningTree& tree, int radius, Sampler& rng) {
  CheckResult r;
  r.name = "section_independence";
  const Section sec = section(t, tree);
  const ArrowMeasure lam = compose_family(nu, counting_family(t), t);
  const HaarSystem canonical = haar_with_translators(lam, t.base(), sec.to_base);

  std::vector<Arrow> loops = pi1_generators(t, tree);
  // One extra short random loop (possibly the unit on a tree).
  const std::vector<Arrow> isotropy = isotropy_ball(t.graph(), t.base(), 3);
  loops.push_back(rng.pick(isotropy));

  for (const Arrow& rho : loops) {
    std::vector<Arrow> etas;
    etas.reserve(sec.to_base.size());
    for (const Arrow& c : sec.to_base) etas.push_back(compose(rho, c));
    const HaarSystem alt = haar_with_translators(lam, t.base(), std::move(etas));
    CheckResult cmp = compare_haar_systems(canonical, alt, t.graph(), radius);
    for (std::string& n : cmp.notes) n = "translated by " + to_string(rho) + ": " + n;
    r.merge(cmp);
  }
  return r;
}

TransHaarSystem transformation_haar(const TransformationGroupoid& tg) {
  const int n = tg.action().set_size();
  TransHaarSystem h;
  h.weight = [n](VertexId u, const TransArrow& a) {
    if (a.point != u || u < 0 || u >= n)
      throw DomainError(Errc::ambient_mismatch, "arrow is not in the requested fiber");
    return Rational(1);
  };
  return h;
}

CheckResult verify_pair_haar(const PairGroupoid& pg, const VertexMeasure& nu, int trials,
                             Sampler& rng) {
  nu.require_fully_supported();
  auto weight = [nu](VertexId u, const std::pair<VertexId, VertexId>& a) {
    if (a.first != u) throw DomainError(Errc::ambient_mismatch, "pair arrow fiber mismatch");
    return nu.at(a.second);
  };
  CheckResult r = verify_haar_on(pg, weight, 1, trials, rng);
  r.name = "pair_groupoid_haar";
  return r;
}

MultiGraph cycle_graph(int n) {
  if (n <= 0) throw DomainError(Errc::empty_graph, "cycle needs at least one vertex");
  MultiGraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i)
    g.edges.push_back({static_cast<EdgeId>(i), static_cast<VertexId>(i),
                       static_cast<VertexId>((i + 1) % n)});
  return g;
}

std::optional<CycleStructure> detect_cycle(const MultiGraph& g) {
  const int n = g.vertex_count;
  if (g.edge_count() != n) return std::nullopt;
  std::vector<std::vector<EdgeId>> incident(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges) {
    incident[static_cast<std::size_t>(e.src)].push_back(e.id);
    incident[static_cast<std::size_t>(e.dst)].push_back(e.id);
  }
  for (const auto& inc : incident)
    if (inc.size() != 2) return std::nullopt;

  CycleStructure cyc;
  cyc.n = n;
  cyc.label.assign(static_cast<std::size_t>(n), -1);
  cyc.step.assign(static_cast<std::size_t>(n), 0);

  // Walk the cycle from vertex 0, leaving each vertex by the edge that is
  // not the arrival edge; each edge is oriented positively in the walk
  // direction.
  VertexId at = 0;
  EdgeId arrived_by = -1;
  for (int pos = 0; pos < n; ++pos) {
    if (cyc.label[static_cast<std::size_t>(at)] != -1) return std::nullopt;
    cyc.label[static_cast<std::size_t>(at)] = pos;
    const auto& inc = incident[static_cast<std::size_t>(at)];
    EdgeId leave;
    if (arrived_by == -1)
      leave = std::min(inc[0], inc[1]);
    else if (inc[0] == arrived_by)
      leave = inc[1];
    else if (inc[1] == arrived_by)
      leave = inc[0];
    else
      return std::nullopt;
    const Edge& e = g.edges[static_cast<std::size_t>(leave)];
    const bool forward = (e.src == at);
    cyc.step[static_cast<std::size_t>(leave)] = forward ? 1 : -1;
    at = forward ? e.dst : e.src;
    arrived_by = leave;
  }
  if (at != 0) return std::nullopt;
  return cyc;
}

long winding(const CycleStructure& cyc, const Arrow& a) {
  long d = 0;
  for (const OrientedEdge& oe : a.word()) {
    const int s = cyc.step.at(static_cast<std::size_t>(oe.edge));
    d += oe.forward ? s : -s;
  }
  return d;
}

TransArrow to_transformation(const CycleStructure& cyc, const Arrow& a) {
  return TransArrow{cyc.label.at(static_cast<std::size_t>(a.range())),
                    FreeWord::power(0, -winding(cyc, a))};
}

CheckResult verify_group_case(const MultiGraph& g, const CycleStructure& cyc, int radius,
                              int trials, Sampler& rng) {
  CheckResult r;
  r.name = "group_case";
  const int n = cyc.n;
  TransformationGroupoid tg(rotation_action(n));

  const std::vector<Arrow> ball = enumerate_ball(g, radius);

  // Bijection between the balls.
  std::vector<TransArrow> image;
  image.reserve(ball.size());
  for (const Arrow& a : ball) image.push_back(to_transformation(cyc, a));
  std::vector<TransArrow> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  r.count(std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end(),
          "identification is not injective on the ball");
  r.count(sorted_image == tg.ball(radius),
          "identification does not cover the transformation-groupoid ball");

  // Range and source respected.
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Arrow& a = ball[i];
    r.count(tg.range_of(image[i]) == cyc.label[static_cast<std::size_t>(a.range())],
            "range not respected at " + to_string(a));
    r.count(tg.source_of(image[i]) == cyc.label[static_cast<std::size_t>(a.source())],
            "source not respected at " + to_string(a));
  }

  // Composition respected, exhaustively.
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) {
      if (ball[i].source() != ball[j].range()) continue;
      r.count(to_transformation(cyc, compose(ball[i], ball[j])) ==
                  tg.compose(image[i], image[j]),
              "composition not respected at " + to_string(ball[i]) + " , " +
                  to_string(ball[j]));
    }

  // The uniform system pushes forward to 1/n times the transformation one.
  const VertexMeasure uniform = VertexMeasure::uniform(g.vertex_count, Rational(1, n));
  const Transversal t(g, 0);
  const SpanningTree tree = spanning_tree(g, 0);
  const HaarSystem h = haar_from_base_measure(uniform, t, section(t, tree));
  const TransHaarSystem th = transformation_haar(tg);
  for (const Arrow& a : ball) {
    const TransArrow ta = to_transformation(cyc, a);
    r.count(h.weight(a.range(), a) == Rational(1, n) * th.weight(ta.point, ta),
            "pushforward weight mismatch at " + to_string(a));
  }

  // Both systems satisfy the Haar axioms.
  CheckResult pi1_axioms = verify_haar(g, h, radius, trials, rng);
  r.merge(pi1_axioms);
  auto tweight = [&th](VertexId u, const TransArrow& a) { return th.weight(u, a); };
  CheckResult trans_axioms = verify_haar_on(tg, tweight, radius, trials, rng);
  r.merge(trans_axioms);
  return r;
}

CheckResult verify_group_case(int n, int radius, int trials, Sampler& rng) {
  const MultiGraph g = cycle_graph(n);
  validate_graph(g);
  const auto cyc = detect_cycle(g);
  if (!cyc) throw DomainError(Errc::incompatible_action, "cycle graph not recognized");
  return verify_group_case(g, *cyc, radius, trials, rng);
}

}  // namespace fgd
