#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "fgd/arrow.hpp"
#include "fgd/freegroup.hpp"
#include "fgd/report.hpp"

namespace fgd {

// A groupoid presented through a finite window: unit set, range/source,
// partial composition, inversion, and ball enumeration by a radius
// parameter. Units are identified with integer ids throughout.
template <typename G>
concept GroupoidView = requires(const G& g, const typename G::arrow_type& a,
                                const typename G::arrow_type& b, VertexId u, int radius) {
  typename G::arrow_type;
  { g.units() } -> std::convertible_to<std::vector<VertexId>>;
  { g.ball(radius) } -> std::convertible_to<std::vector<typename G::arrow_type>>;
  { g.range_of(a) } -> std::convertible_to<VertexId>;
  { g.source_of(a) } -> std::convertible_to<VertexId>;
  { g.compose(a, b) } -> std::convertible_to<typename G::arrow_type>;
  { g.inverse(a) } -> std::convertible_to<typename G::arrow_type>;
  { g.unit_arrow(u) } -> std::convertible_to<typename G::arrow_type>;
  { g.describe(a) } -> std::convertible_to<std::string>;
};

// ---------------------------------------------------------------------------
// The fundamental groupoid of a graph, as a view over Arrow.

class Pi1View {
public:
  using arrow_type = Arrow;

  explicit Pi1View(const MultiGraph& g) : g_(&g) {}

  const MultiGraph& graph() const { return *g_; }

  std::vector<VertexId> units() const {
    std::vector<VertexId> u(static_cast<std::size_t>(g_->vertex_count));
    for (VertexId v = 0; v < g_->vertex_count; ++v) u[static_cast<std::size_t>(v)] = v;
    return u;
  }
  std::vector<Arrow> ball(int radius) const { return enumerate_ball(*g_, radius); }
  VertexId range_of(const Arrow& a) const { return a.range(); }
  VertexId source_of(const Arrow& a) const { return a.source(); }
  Arrow compose(const Arrow& a, const Arrow& b) const { return fgd::compose(a, b); }
  Arrow inverse(const Arrow& a) const { return fgd::inverse(a); }
  Arrow unit_arrow(VertexId u) const { return Arrow::unit(u); }
  std::string describe(const Arrow& a) const { return to_string(a); }

private:
  const MultiGraph* g_;
};

// Mutant of Pi1View whose composition concatenates words without reducing.
// Only used to confirm that the axiom checker notices.
class UnreducedPi1View {
public:
  using arrow_type = Arrow;

  explicit UnreducedPi1View(const MultiGraph& g) : inner_(g) {}

  std::vector<VertexId> units() const { return inner_.units(); }
  std::vector<Arrow> ball(int radius) const { return inner_.ball(radius); }
  VertexId range_of(const Arrow& a) const { return a.range(); }
  VertexId source_of(const Arrow& a) const { return a.source(); }
  Arrow compose(const Arrow& a, const Arrow& b) const {
    if (a.source() != b.range()) throw DomainError(Errc::not_composable, "endpoints mismatch");
    std::vector<OrientedEdge> word = a.word();
    word.insert(word.end(), b.word().begin(), b.word().end());
    return Arrow::unchecked(b.source(), a.range(), std::move(word));
  }
  Arrow inverse(const Arrow& a) const { return fgd::inverse(a); }
  Arrow unit_arrow(VertexId u) const { return Arrow::unit(u); }
  std::string describe(const Arrow& a) const { return to_string(a); }

private:
  Pi1View inner_;
};

// ---------------------------------------------------------------------------
// Pair groupoid on a finite vertex set: arrows (x, y), (x,y)(y,z) = (x,z).

class PairGroupoid {
public:
  using arrow_type = std::pair<VertexId, VertexId>;

  explicit PairGroupoid(VertexId point_count) : n_(point_count) {
    if (n_ <= 0) throw DomainError(Errc::empty_graph, "pair groupoid needs points");
  }

  VertexId point_count() const { return n_; }

  std::vector<VertexId> units() const {
    std::vector<VertexId> u(static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) u[static_cast<std::size_t>(v)] = v;
    return u;
  }
  std::vector<arrow_type> ball(int) const {
    std::vector<arrow_type> arrows;
    arrows.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (VertexId x = 0; x < n_; ++x)
      for (VertexId y = 0; y < n_; ++y) arrows.emplace_back(x, y);
    return arrows;
  }
  VertexId range_of(const arrow_type& a) const { return a.first; }
  VertexId source_of(const arrow_type& a) const { return a.second; }
  arrow_type compose(const arrow_type& a, const arrow_type& b) const {
    if (a.second != b.first) throw DomainError(Errc::not_composable, "pair endpoints mismatch");
    return {a.first, b.second};
  }
  arrow_type inverse(const arrow_type& a) const { return {a.second, a.first}; }
  arrow_type unit_arrow(VertexId u) const { return {u, u}; }
  std::string describe(const arrow_type& a) const {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  }

private:
  VertexId n_;
};

// ---------------------------------------------------------------------------
// Right action of a finitely generated free group on a finite set, each
// generator acting as a permutation.

struct GroupAction {
  int generator_count = 0;
  std::vector<std::vector<int>> perm;      // perm[gen][s]
  std::vector<std::vector<int>> perm_inv;  // filled by validate()

  int set_size() const { return perm.empty() ? 0 : static_cast<int>(perm.front().size()); }

  // Checks every generator is a permutation and builds the inverses.
  // Throws IncompatibleAction otherwise.
  void validate();

  int act(int s, const FreeWord& w) const;
};

// The action of Z on Z/n by rotation: s . 1 = s + 1 (mod n).
GroupAction rotation_action(int n);

struct TransArrow {
  VertexId point;  // = range
  FreeWord g;

  friend bool operator==(const TransArrow&, const TransArrow&) = default;
  friend bool operator<(const TransArrow& a, const TransArrow& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.g < b.g;
  }
};

// Transformation groupoid of a right group action: arrows (x, g) with
// r = x, s = x.g, (x, g)(x.g, t) = (x, gt), (x, g)^{-1} = (x.g, g^{-1}).
class TransformationGroupoid {
public:
  using arrow_type = TransArrow;

  explicit TransformationGroupoid(GroupAction action);

  const GroupAction& action() const { return action_; }

  std::vector<VertexId> units() const {
    std::vector<VertexId> u(static_cast<std::size_t>(action_.set_size()));
    for (int s = 0; s < action_.set_size(); ++s) u[static_cast<std::size_t>(s)] = s;
    return u;
  }
  std::vector<TransArrow> ball(int radius) const;
  VertexId range_of(const TransArrow& a) const { return a.point; }
  VertexId source_of(const TransArrow& a) const { return action_.act(a.point, a.g); }
  TransArrow compose(const TransArrow& a, const TransArrow& b) const;
  TransArrow inverse(const TransArrow& a) const { return {source_of(a), a.g.inverse()}; }
  TransArrow unit_arrow(VertexId u) const { return {u, FreeWord::identity()}; }
  std::string describe(const TransArrow& a) const {
    return "(" + std::to_string(a.point) + "," + a.g.str() + ")";
  }

private:
  GroupAction action_;
};

// ---------------------------------------------------------------------------
// Axiom check over a ball: unit and inverse laws, endpoint bookkeeping of
// products, associativity over composable triples. The triple loop is
// truncated deterministically once `budget` composites have been formed.
template <GroupoidView G>
CheckResult check_axioms(const G& g, int radius, long budget = 2'000'000) {
  using A = typename G::arrow_type;
  CheckResult r;
  r.name = "groupoid_axioms";

  const std::vector<A> ball = g.ball(radius);

  for (VertexId u : g.units()) {
    const A e = g.unit_arrow(u);
    r.count(g.range_of(e) == u && g.source_of(e) == u,
            "unit arrow of " + std::to_string(u) + " has wrong endpoints");
  }

  for (const A& a : ball) {
    const A left_unit = g.unit_arrow(g.range_of(a));
    const A right_unit = g.unit_arrow(g.source_of(a));
    r.count(g.compose(left_unit, a) == a, "left unit law fails at " + g.describe(a));
    r.count(g.compose(a, right_unit) == a, "right unit law fails at " + g.describe(a));

    const A ainv = g.inverse(a);
    r.count(g.range_of(ainv) == g.source_of(a) && g.source_of(ainv) == g.range_of(a),
            "inverse endpoints wrong at " + g.describe(a));
    r.count(g.compose(ainv, a) == right_unit, "gamma^-1 gamma != unit at " + g.describe(a));
    r.count(g.compose(a, ainv) == left_unit, "gamma gamma^-1 != unit at " + g.describe(a));
  }

  long composites = 0;
  for (const A& a : ball) {
    for (const A& b : ball) {
      if (g.source_of(a) != g.range_of(b)) continue;
      const A ab = g.compose(a, b);
      ++composites;
      r.count(g.range_of(ab) == g.range_of(a) && g.source_of(ab) == g.source_of(b),
              "product endpoints wrong for " + g.describe(a) + " , " + g.describe(b));
      if (composites > budget) continue;
      for (const A& c : ball) {
        if (g.source_of(b) != g.range_of(c)) continue;
        ++composites;
        r.count(g.compose(ab, c) == g.compose(a, g.compose(b, c)),
                "associativity fails for " + g.describe(a) + " , " + g.describe(b) + " , " +
                    g.describe(c));
        if (composites > budget) break;
      }
    }
  }
  return r;
}

}  // namespace fgd
