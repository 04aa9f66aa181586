#pragma once

#include <algorithm>
#include <vector>

#include "fgd/graph.hpp"
#include "fgd/sampler.hpp"

namespace fgd::testing {

// One loop at a single vertex.
inline MultiGraph rose1() {
  return {1, {{0, 0, 0}}};
}

// Two loops at a single vertex.
inline MultiGraph rose2() {
  return {1, {{0, 0, 0}, {1, 0, 0}}};
}

// Two parallel edges p=0 -> q=1.
inline MultiGraph doubled_edge() {
  return {2, {{0, 0, 1}, {1, 0, 1}}};
}

// Directed triangle 0 -> 1 -> 2 -> 0.
inline MultiGraph triangle() {
  return {3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}};
}

// Path on four vertices (a tree).
inline MultiGraph path4() {
  return {4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}}};
}

// Connected multigraph with at most max_vertices vertices and max_edges
// edges: a random spanning tree plus random extra edges (loops and parallel
// edges allowed). Extra edges are capped at max_rank, the regime the
// default verification radius is calibrated for.
inline MultiGraph random_connected_graph(Sampler& rng, int max_vertices = 5, int max_edges = 7,
                                         int max_rank = 3) {
  const int v = 1 + rng.below(max_vertices);
  MultiGraph g;
  g.vertex_count = v;
  EdgeId next = 0;
  for (VertexId u = 1; u < v; ++u) {
    const VertexId other = rng.below(u);
    if (rng.below(2) == 0)
      g.edges.push_back({next++, other, u});
    else
      g.edges.push_back({next++, u, other});
  }
  const int room = std::min(max_edges - (v - 1), max_rank);
  const int extra = rng.below(room + 1);
  for (int i = 0; i < extra; ++i)
    g.edges.push_back({next++, rng.below(v), rng.below(v)});
  return g;
}

}  // namespace fgd::testing
