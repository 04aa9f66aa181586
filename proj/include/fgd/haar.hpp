#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgd/bibundle.hpp"
#include "fgd/measures.hpp"

namespace fgd {

enum class HaarProvenance { from_base_measure, from_transversal, transformation, direct_oracle };

const char* provenance_name(HaarProvenance p);

// Range-indexed family of fully supported left-invariant measures on the
// fundamental groupoid: one measure on r^{-1}(w) per vertex w.
struct HaarSystem {
  HaarProvenance provenance = HaarProvenance::direct_oracle;
  VertexId base = 0;  // base point of the transversal the construction used
  std::function<Rational(VertexId, const Arrow&)> weight;  // weight in lambda^w, needs r == w
  std::optional<VertexMeasure> base_measure;               // nu, when built from one

  ArrowMeasure measure_at(VertexId w) const;
};

// The system induced by a fully supported vertex measure, evaluated through
// the transversal: the weight of delta in lambda^w is the (nu o mu)-weight
// of c_w . delta.
HaarSystem haar_from_base_measure(const VertexMeasure& nu, const Transversal& t,
                                  const Section& sec);

// The system induced by a deck-invariant fully supported measure on the
// transversal, lambda^w = (translate by c_w) lambda. Invariance under the
// deck generators and positivity are checked on the ball of `check_radius`;
// throws NotInvariant / NotFullySupported.
HaarSystem haar_from_transversal(const ArrowMeasure& lam, const Transversal& t,
                                 const Section& sec, const DeckAction& deck, int check_radius);

// Same translation construction with an arbitrary choice of translating
// arrows eta_w in G^x_w (no invariance check). Used to confirm the result
// does not depend on the choice.
HaarSystem haar_with_translators(const ArrowMeasure& lam, VertexId base,
                                 std::vector<Arrow> etas);

// Closed form the two constructions must collapse to: weight(delta) =
// nu(source(delta)). Kept one-line on purpose; it is the oracle the other
// routes are checked against.
HaarSystem direct_weight_oracle(const VertexMeasure& nu, VertexId base);

// Restriction of a system to the transversal over x; feeding it back into
// haar_from_transversal reproduces the system.
ArrowMeasure transversal_from_haar(const HaarSystem& h, const Transversal& t);

// Pointwise equality of two systems on every fiber ball.
CheckResult compare_haar_systems(const HaarSystem& a, const HaarSystem& b, const MultiGraph& g,
                                 int radius);

// Haar axioms over a ball of any groupoid view: full support, pointwise
// left invariance on a small ball, and sampled exact integral invariance
// lambda^{s(xi)}(f o l_xi) == lambda^{r(xi)}(f).
template <GroupoidView G, typename WeightFn>
CheckResult verify_haar_on(const G& g, const WeightFn& weight, int radius, int trials,
                           Sampler& rng) {
  using A = typename G::arrow_type;
  CheckResult r;
  r.name = "haar_axioms";

  const std::vector<A> ball = g.ball(radius);
  std::map<VertexId, std::vector<A>> fibers;
  for (const A& a : ball) fibers[g.range_of(a)].push_back(a);

  // Support: every enumerated arrow carries positive weight.
  for (const auto& [w, fiber] : fibers)
    for (const A& a : fiber)
      r.count(weight(w, a).sign() > 0, "support: nonpositive weight at " + g.describe(a));

  // Pointwise invariance, exhaustive on a small ball.
  const std::vector<A> small = g.ball(std::min(radius, 2));
  std::map<VertexId, std::vector<A>> small_fibers;
  for (const A& a : small) small_fibers[g.range_of(a)].push_back(a);
  for (const A& xi : small) {
    const A xi_inv = g.inverse(xi);
    for (const A& delta : small_fibers[g.range_of(xi)]) {
      r.count(weight(g.source_of(xi), g.compose(xi_inv, delta)) ==
                  weight(g.range_of(xi), delta),
              "invariance fails pointwise at xi=" + g.describe(xi) +
                  ", delta=" + g.describe(delta));
    }
  }

  // Sampled integral form against random finitely supported functions.
  if (!ball.empty()) {
    for (int i = 0; i < trials; ++i) {
      const A& xi = rng.pick(ball);
      const A xi_inv = g.inverse(xi);
      const std::vector<A>& fiber = fibers[g.range_of(xi)];
      if (fiber.empty()) continue;
      GaussianRational lhs, rhs;
      const int terms = 1 + rng.below(3);
      for (int k = 0; k < terms; ++k) {
        const A& delta = rng.pick(fiber);
        const GaussianRational c = rng.small_gaussian();
        rhs += c * GaussianRational(weight(g.range_of(xi), delta));
        lhs += c * GaussianRational(weight(g.source_of(xi), g.compose(xi_inv, delta)));
      }
      r.count(lhs == rhs, "integral invariance fails at xi=" + g.describe(xi));
    }
  }
  return r;
}

CheckResult verify_haar(const MultiGraph& g, const HaarSystem& h, int radius, int trials,
                        Sampler& rng);

// Systems built with translating arrows c_w versus g . c_w (every deck
// generator, plus a random short loop) agree pointwise.
CheckResult verify_section_independence(const VertexMeasure& nu, const Transversal& t,
                                        const SpanningTree& tree, int radius, Sampler& rng);

// Haar system on a transformation groupoid: counting measure in the group
// direction over every point.
struct TransHaarSystem {
  std::function<Rational(VertexId, const TransArrow&)> weight;
};

TransHaarSystem transformation_haar(const TransformationGroupoid& tg);

// Degenerate pair-groupoid case {delta_x x nu}; returns the axiom report.
CheckResult verify_pair_haar(const PairGroupoid& pg, const VertexMeasure& nu, int trials,
                             Sampler& rng);

// ---------------------------------------------------------------------------
// The topological-group case at graph scale: cycle graphs.

MultiGraph cycle_graph(int n);

// A walk labelling of a cycle multigraph: vertex positions on Z/n and the
// step (+1/-1) a forward traversal of each edge contributes.
struct CycleStructure {
  int n = 0;
  std::vector<int> label;  // vertex -> position
  std::vector<int> step;   // edge -> contribution of a forward traversal
};

std::optional<CycleStructure> detect_cycle(const MultiGraph& g);

// Winding of an arrow around the cycle.
long winding(const CycleStructure& cyc, const Arrow& a);

// The identification of the fundamental groupoid of a cycle with the
// transformation groupoid of Z rotating Z/n.
TransArrow to_transformation(const CycleStructure& cyc, const Arrow& a);

// Checks the identification respects range, source and composition on the
// ball, is a bijection onto the transformation-groupoid ball, pushes the
// uniform Haar system to 1/n times the transformation one, and that both
// systems satisfy the Haar axioms.
CheckResult verify_group_case(const MultiGraph& g, const CycleStructure& cyc, int radius,
                              int trials, Sampler& rng);
CheckResult verify_group_case(int n, int radius, int trials, Sampler& rng);

}  // namespace fgd
