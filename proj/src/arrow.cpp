#include "fgd/arrow.hpp"

#include <algorithm>
#include <string>

namespace fgd {

VertexId tail(const MultiGraph& g, OrientedEdge oe) {
  const Edge& e = g.edges.at(oe.edge);
  return oe.forward ? e.src : e.dst;
}

VertexId head(const MultiGraph& g, OrientedEdge oe) {
  const Edge& e = g.edges.at(oe.edge);
  return oe.forward ? e.dst : e.src;
}

bool operator<(const Arrow& a, const Arrow& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (auto c = std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                      b.word_.begin(), b.word_.end());
      c != 0)
    return c < 0;
  return a.source_ < b.source_;
}

Arrow reduce(const MultiGraph& g, std::span<const OrientedEdge> raw, VertexId start) {
  if (!g.has_vertex(start)) throw DomainError(Errc::bad_base_point, "start vertex out of range");
  std::vector<OrientedEdge> stack;  // travel order
  VertexId at = start;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {  // rightmost travels first
    const OrientedEdge& oe = *it;
    if (oe.edge < 0 || oe.edge >= g.edge_count())
      throw DomainError(Errc::dangling_edge, "segment uses edge " + std::to_string(oe.edge));
    if (tail(g, oe) != at)
      throw DomainError(Errc::non_concatenable,
                        "segment starts at " + std::to_string(tail(g, oe)) + ", path is at " +
                            std::to_string(at));
    at = head(g, oe);
    if (!stack.empty() && stack.back().cancels(oe))
      stack.pop_back();
    else
      stack.push_back(oe);
  }
  std::reverse(stack.begin(), stack.end());  // store range-side first
  return Arrow::unchecked(start, at, std::move(stack));
}

Arrow compose(const Arrow& gamma, const Arrow& eta) {
  if (gamma.source() != eta.range())
    throw DomainError(Errc::not_composable,
                      "source " + std::to_string(gamma.source()) + " != range " +
                          std::to_string(eta.range()));
  // Both words are reduced, so cancellation only happens at the seam:
  // gamma's first travelled segment against eta's last travelled one.
  const auto& g = gamma.word();
  const auto& e = eta.word();
  std::size_t gi = g.size();  // suffix of gamma kept: g[0..gi)
  std::size_t ei = 0;         // prefix of eta dropped: e[ei..)
  while (gi > 0 && ei < e.size() && g[gi - 1].cancels(e[ei])) {
    --gi;
    ++ei;
  }
  std::vector<OrientedEdge> word;
  word.reserve(gi + (e.size() - ei));
  word.insert(word.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(gi));
  word.insert(word.end(), e.begin() + static_cast<std::ptrdiff_t>(ei), e.end());
  return Arrow::unchecked(eta.source(), gamma.range(), std::move(word));
}

Arrow inverse(const Arrow& gamma) {
  std::vector<OrientedEdge> word(gamma.word().rbegin(), gamma.word().rend());
  for (OrientedEdge& oe : word) oe = oe.flipped();
  return Arrow::unchecked(gamma.range(), gamma.source(), std::move(word));
}

std::vector<Arrow> enumerate_ball(const MultiGraph& g, int max_len) {
  // Travel-ordered incidence: all segments leaving each vertex.
  std::vector<std::vector<OrientedEdge>> out(g.vertex_count);
  for (const Edge& e : g.edges) {
    out[e.src].push_back({e.id, true});
    out[e.dst].push_back({e.id, false});
  }

  std::vector<Arrow> result;
  for (VertexId v = 0; v < g.vertex_count; ++v) result.push_back(Arrow::unit(v));

  // Grow words at the range end; a new segment may not undo the previous one.
  std::vector<Arrow> frontier = result;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Arrow> next;
    for (const Arrow& a : frontier) {
      for (const OrientedEdge& oe : out[a.range()]) {
        if (!a.is_unit() && a.word().front().cancels(oe)) continue;
        std::vector<OrientedEdge> word;
        word.reserve(a.word().size() + 1);
        word.push_back(oe);
        word.insert(word.end(), a.word().begin(), a.word().end());
        next.push_back(Arrow::unchecked(a.source(), head(g, oe), std::move(word)));
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string to_string(const Arrow& a) {
  std::string s = std::to_string(a.range()) + "<-" + std::to_string(a.source()) + ": ";
  if (a.is_unit()) return s + "1";
  bool first = true;
  for (const OrientedEdge& oe : a.word()) {
    if (!first) s += ".";
    first = false;
    s += "e" + std::to_string(oe.edge);
    if (!oe.forward) s += "~";
  }
  return s;
}

}  // namespace fgd
