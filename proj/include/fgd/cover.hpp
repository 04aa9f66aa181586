#pragma once

#include <vector>

#include "fgd/arrow.hpp"

namespace fgd {

// The transversal r^{-1}(x): all arrows into the base point. For the
// fundamental groupoid of a graph this is the universal cover, and the
// covering map is the source-vertex map. Fibers are infinite as soon as the
// graph has a cycle, so every view is cut off at an explicit radius.
class Transversal {
public:
  Transversal(const MultiGraph& g, VertexId base);

  const MultiGraph& graph() const { return *g_; }
  VertexId base() const { return base_; }

  // Arrows with range == base and word length <= radius, sorted.
  std::vector<Arrow> ball(int radius) const;

  // The part of the covering fiber over u inside the radius ball.
  std::vector<Arrow> fiber(VertexId u, int radius) const;

  // The covering map: an element of the cover is sent to the vertex below.
  VertexId covering_map(const Arrow& y) const;

private:
  const MultiGraph* g_;
  VertexId base_;
};

// One arrow c_u : u -> base for every vertex, with c_base the unit. These
// are the spanning-tree geodesics, so each word uses tree edges only.
struct Section {
  VertexId base = 0;
  std::vector<Arrow> to_base;  // indexed by source vertex

  const Arrow& at(VertexId u) const { return to_base.at(static_cast<std::size_t>(u)); }
};

Section section(const Transversal& t, const SpanningTree& tree);

// One generating loop at the base per non-tree edge e (ascending id):
//   g_e = c_{dst(e)} * e * c_{src(e)}^{-1}.
std::vector<Arrow> pi1_generators(const Transversal& t, const SpanningTree& tree);

// The isotropy acting on the cover by left multiplication.
struct DeckAction {
  VertexId base = 0;
  std::vector<Arrow> generators;
};

DeckAction deck_action(const Transversal& t, const SpanningTree& tree);

// rho . y for an isotropy loop rho and a cover element y; leaves the
// covering fiber of y invariant.
Arrow deck_act(const Arrow& rho, const Arrow& y);

// Loops at x of word length <= radius, sorted.
std::vector<Arrow> isotropy_ball(const MultiGraph& g, VertexId x, int radius);

}  // namespace fgd
