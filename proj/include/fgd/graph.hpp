#pragma once

#include <cstdint>
#include <vector>

#include "fgd/errors.hpp"

namespace fgd {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId dst;
};

// Finite connected multigraph modelling the underlying space. Parallel edges
// and self-loops are allowed; edge ids must be dense 0..E-1.
struct MultiGraph {
  VertexId vertex_count = 0;
  std::vector<Edge> edges;

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count; }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Throws DomainError (EmptyGraph, DanglingEdge, Disconnected) on a bad graph.
void validate_graph(const MultiGraph& g);

struct SpanningTree {
  struct ParentLink {
    VertexId parent = -1;
    EdgeId via = -1;
    bool toward_parent_forward = false;  // edge traversed src->dst when walking child -> parent
  };

  VertexId root = 0;
  std::vector<EdgeId> tree_edges;    // ascending
  std::vector<ParentLink> parent;    // parent[root] stays {-1,-1,false}

  bool contains(EdgeId e) const;
};

// Deterministic spanning tree grown from the root: at every step the
// lowest-id edge leaving the current tree claims its missing endpoint.
SpanningTree spanning_tree(const MultiGraph& g, VertexId root);

// Rank of the (free) fundamental group: E - V + 1.
int pi1_rank(const MultiGraph& g);

}  // namespace fgd
