#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgd/cover.hpp"
#include "fgd/groupoid.hpp"
#include "fgd/report.hpp"

namespace fgd {

// The transversal over a base point as a bibundle: the isotropy group acts
// on the left by deck translation, the whole fundamental groupoid on the
// right by composition, and the two momentum maps are the constant map to
// the base and the covering (source-vertex) map.
struct EquivalenceBibundle {
  const MultiGraph* graph = nullptr;
  VertexId base = 0;
  Section sec;
  DeckAction deck;

  Transversal transversal() const { return Transversal(*graph, base); }
};

EquivalenceBibundle make_bibundle(const MultiGraph& g, VertexId base);

// Freeness of the deck action (injective kinetics) and commutation of the
// two actions, checked over a ball. Throws BibundleInvalid on a violation.
void validate_bibundle(const EquivalenceBibundle& b, int radius);

// Kinetics of the right action: (y, gamma) -> (y, y.gamma).
std::pair<Arrow, Arrow> kinetics(const Arrow& y, const Arrow& gamma);

// Its inverse on the fiber product {(y, z) : r(y) = r(z)}: (y, z) -> (y, y^{-1} z).
std::pair<Arrow, Arrow> kinetics_inverse(const Arrow& y, const Arrow& z);

// The quotient map q(y, z) = y^{-1} z identifying orbit classes of pairs
// with arrows of the fundamental groupoid.
Arrow quotient_map(const Arrow& y, const Arrow& z);

// An orbit class [(y, z)] under the diagonal deck action, stored by its
// canonical representative: the unique pair in the orbit whose first
// component is the section arrow over the orbit's range vertex.
struct QuotArrow {
  Arrow anchor;  // a section arrow
  Arrow mate;

  friend bool operator==(const QuotArrow&, const QuotArrow&) = default;
  friend bool operator<(const QuotArrow& a, const QuotArrow& b) {
    if (a.anchor == b.anchor) return a.mate < b.mate;
    return a.anchor < b.anchor;
  }
};

// q(k(y, gamma)) = gamma and the two kinetics round trips, exhaustively
// over composable pairs in the radius balls.
CheckResult verify_figure1(const EquivalenceBibundle& b, int radius);

// The orbit-class identification with the fundamental groupoid: a bijection
// on balls respecting range, source and composition, with orbit classes
// exactly the deck-translation classes.
CheckResult verify_quotient_bijection(const EquivalenceBibundle& b, int radius);

// The quotient of (cover x cover) by the diagonal deck action, with
// [(x,y)][(y,z)] = [(x,z)]. Arrow-bijective with the fundamental groupoid
// via to_pi1 / from_pi1.
class QuotientGroupoid {
public:
  using arrow_type = QuotArrow;

  explicit QuotientGroupoid(EquivalenceBibundle b) : b_(std::move(b)) {}

  const EquivalenceBibundle& bibundle() const { return b_; }

  // Orbit class of an arbitrary pair with r(y) = r(z) = base.
  QuotArrow orbit_class(const Arrow& y, const Arrow& z) const;

  Arrow to_pi1(const QuotArrow& a) const { return quotient_map(a.anchor, a.mate); }
  QuotArrow from_pi1(const Arrow& gamma) const;

  std::vector<VertexId> units() const;
  std::vector<QuotArrow> ball(int radius) const;
  VertexId range_of(const QuotArrow& a) const { return a.anchor.source(); }
  VertexId source_of(const QuotArrow& a) const { return a.mate.source(); }
  QuotArrow compose(const QuotArrow& a, const QuotArrow& b) const;
  QuotArrow inverse(const QuotArrow& a) const { return orbit_class(a.mate, a.anchor); }
  QuotArrow unit_arrow(VertexId u) const {
    return QuotArrow{b_.sec.at(u), b_.sec.at(u)};
  }
  std::string describe(const QuotArrow& a) const {
    return "[" + to_string(a.anchor) + " | " + to_string(a.mate) + "]";
  }

private:
  const EquivalenceBibundle b_;
};

}  // namespace fgd
