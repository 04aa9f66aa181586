#include "fgd/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace fgd {

void validate_graph(const MultiGraph& g) {
  if (g.vertex_count <= 0) throw DomainError(Errc::empty_graph, "graph has no vertices");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.id != static_cast<EdgeId>(i))
      throw DomainError(Errc::dangling_edge,
                        "edge ids must be dense ascending; slot " + std::to_string(i) +
                            " holds id " + std::to_string(e.id));
    if (!g.has_vertex(e.src) || !g.has_vertex(e.dst))
      throw DomainError(Errc::dangling_edge, "edge " + std::to_string(e.id) +
                                                 " references a missing vertex");
  }
  // Undirected connectivity.
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<std::vector<VertexId>> adj(g.vertex_count);
  for (const Edge& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (!seen[v])
      throw DomainError(Errc::disconnected, "vertex " + std::to_string(v) + " is unreachable");
}

bool SpanningTree::contains(EdgeId e) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

SpanningTree spanning_tree(const MultiGraph& g, VertexId root) {
  if (!g.has_vertex(root)) throw DomainError(Errc::bad_base_point, "root out of range");

  SpanningTree t;
  t.root = root;
  t.parent.resize(g.vertex_count);
  std::vector<char> in_tree(g.vertex_count, 0);
  in_tree[root] = 1;

  for (VertexId claimed = 1; claimed < g.vertex_count; ++claimed) {
    // Lowest-id edge with exactly one endpoint in the tree wins.
    const Edge* pick = nullptr;
    VertexId child = -1;
    for (const Edge& e : g.edges) {
      if (in_tree[e.src] == in_tree[e.dst]) continue;
      pick = &e;
      child = in_tree[e.src] ? e.dst : e.src;
      break;  // edges are scanned in ascending id order
    }
    if (!pick) throw DomainError(Errc::disconnected, "graph not connected");
    in_tree[child] = 1;
    t.tree_edges.push_back(pick->id);
    VertexId par = (child == pick->dst) ? pick->src : pick->dst;
    // Walking child -> parent goes src->dst exactly when the child is the src.
    t.parent[child] = {par, pick->id, pick->src == child};
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

int pi1_rank(const MultiGraph& g) { return g.edge_count() - g.vertex_count + 1; }

}  // namespace fgd
