#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "fgd/graph.hpp"

namespace fgd {

// One traversed edge segment; forward travels src -> dst.
struct OrientedEdge {
  EdgeId edge;
  bool forward;

  OrientedEdge flipped() const { return {edge, !forward}; }
  bool cancels(const OrientedEdge& o) const { return edge == o.edge && forward != o.forward; }

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge& a, const OrientedEdge& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    // forward sorts before backward
    return (a.forward ? 0 : 1) <=> (b.forward ? 0 : 1);
  }
};

VertexId tail(const MultiGraph& g, OrientedEdge oe);  // where the segment starts
VertexId head(const MultiGraph& g, OrientedEdge oe);  // where it ends

// An arrow of the fundamental groupoid of the graph: a homotopy class of
// paths, i.e. a reduced edge word together with its endpoints.
//
// Arrows compose right to left: in compose(g, h) the path h is travelled
// first. The word is stored in that reading order — the FIRST travelled
// segment is the LAST (rightmost) entry, the segment arriving at range()
// is word().front(). An empty word is the unit arrow at source == range.
class Arrow {
public:
  Arrow() = default;

  static Arrow unit(VertexId v) { return Arrow(v, v, {}); }

  // Escape hatch for verification harnesses that need to build non-reduced
  // or otherwise broken arrows on purpose. Normal code goes through
  // reduce/compose/inverse, which keep the word reduced.
  static Arrow unchecked(VertexId source, VertexId range, std::vector<OrientedEdge> word) {
    return Arrow(source, range, std::move(word));
  }

  VertexId source() const { return source_; }
  VertexId range() const { return range_; }
  const std::vector<OrientedEdge>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_unit() const { return word_.empty(); }
  bool is_loop() const { return source_ == range_; }

  friend bool operator==(const Arrow&, const Arrow&) = default;

  // Total order: word length, then the word lexicographically in stored
  // order, then the source vertex (which only matters for units).
  friend bool operator<(const Arrow& a, const Arrow& b);

private:
  Arrow(VertexId source, VertexId range, std::vector<OrientedEdge> word)
      : source_(source), range_(range), word_(std::move(word)) {}

  VertexId source_ = 0;
  VertexId range_ = 0;
  std::vector<OrientedEdge> word_;
};

// Normal form of a raw edge path. `raw` is given in arrow order — paths
// start from the right, so raw.back() is travelled first, leaving `start`.
// Adjacent inverse pairs are cancelled until none remain. Throws
// NonConcatenable when consecutive segments do not meet.
Arrow reduce(const MultiGraph& g, std::span<const OrientedEdge> raw, VertexId start);

// gamma * eta: travel eta, then gamma. Requires source(gamma) == range(eta).
Arrow compose(const Arrow& gamma, const Arrow& eta);

Arrow inverse(const Arrow& gamma);

// Every reduced arrow of word length <= max_len, sorted by the Arrow order.
std::vector<Arrow> enumerate_ball(const MultiGraph& g, int max_len);

// Report form, e.g. "0<-2: e0~.e1~" ("~" marks a backward segment; the
// first travelled segment is printed rightmost). Units print as "v<-v: 1".
std::string to_string(const Arrow& a);

}  // namespace fgd
