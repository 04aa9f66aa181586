#include "fgd/cover.hpp"

#include <algorithm>

namespace fgd {

Transversal::Transversal(const MultiGraph& g, VertexId base) : g_(&g), base_(base) {
  if (!g.has_vertex(base)) throw DomainError(Errc::bad_base_point, "base vertex out of range");
}

std::vector<Arrow> Transversal::ball(int radius) const {
  const MultiGraph& g = *g_;
  // Segments arriving at each vertex, for growing words at the source end.
  std::vector<std::vector<OrientedEdge>> in(g.vertex_count);
  for (const Edge& e : g.edges) {
    in[e.dst].push_back({e.id, true});
    in[e.src].push_back({e.id, false});
  }

  std::vector<Arrow> result{Arrow::unit(base_)};
  std::vector<Arrow> frontier = result;
  for (int len = 1; len <= radius; ++len) {
    std::vector<Arrow> next;
    for (const Arrow& y : frontier) {
      for (const OrientedEdge& oe : in[y.source()]) {
        // oe is travelled first; it may not be undone by the old first segment.
        if (!y.is_unit() && oe.cancels(y.word().back())) continue;
        std::vector<OrientedEdge> word = y.word();
        word.push_back(oe);
        next.push_back(Arrow::unchecked(tail(g, oe), base_, std::move(word)));
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Arrow> Transversal::fiber(VertexId u, int radius) const {
  if (!g_->has_vertex(u)) throw DomainError(Errc::bad_base_point, "fiber vertex out of range");
  std::vector<Arrow> all = ball(radius);
  std::vector<Arrow> out;
  for (Arrow& y : all)
    if (y.source() == u) out.push_back(std::move(y));
  return out;
}

VertexId Transversal::covering_map(const Arrow& y) const {
  if (y.range() != base_)
    throw DomainError(Errc::ambient_mismatch, "arrow does not end at the base point");
  return y.source();
}

Section section(const Transversal& t, const SpanningTree& tree) {
  const MultiGraph& g = t.graph();
  if (tree.root != t.base())
    throw DomainError(Errc::bad_base_point, "spanning tree must be rooted at the base point");
  Section s;
  s.base = t.base();
  s.to_base.reserve(g.vertex_count);
  for (VertexId u = 0; u < g.vertex_count; ++u) {
    // Walk u -> root; the first-travelled segment belongs at the back.
    std::vector<OrientedEdge> word;
    for (VertexId v = u; v != tree.root;) {
      const SpanningTree::ParentLink& link = tree.parent[v];
      word.insert(word.begin(), {link.via, link.toward_parent_forward});
      v = link.parent;
    }
    s.to_base.push_back(reduce(g, word, u));
  }
  return s;
}

std::vector<Arrow> pi1_generators(const Transversal& t, const SpanningTree& tree) {
  const MultiGraph& g = t.graph();
  Section sec = section(t, tree);
  std::vector<Arrow> gens;
  for (const Edge& e : g.edges) {
    if (tree.contains(e.id)) continue;
    const OrientedEdge seg{e.id, true};
    Arrow step = reduce(g, std::span(&seg, 1), e.src);
    gens.push_back(compose(compose(sec.at(e.dst), step), inverse(sec.at(e.src))));
  }
  return gens;
}

DeckAction deck_action(const Transversal& t, const SpanningTree& tree) {
  return DeckAction{t.base(), pi1_generators(t, tree)};
}

Arrow deck_act(const Arrow& rho, const Arrow& y) {
  if (!rho.is_loop())
    throw DomainError(Errc::not_composable, "deck translation needs an isotropy loop");
  return compose(rho, y);
}

std::vector<Arrow> isotropy_ball(const MultiGraph& g, VertexId x, int radius) {
  std::vector<Arrow> out;
  for (Arrow& y : Transversal(g, x).ball(radius))
    if (y.source() == x) out.push_back(std::move(y));
  return out;
}

}  // namespace fgd
