#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "interdict/bitset.hpp"

namespace interdict {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertices are 0-based in memory; the text formats use 1-based ids.
using Vertex = int;
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t weight = 1;
  std::int64_t cost = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  int edge;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

/// Undirected simple graph with a non-negative integer weight and a positive
/// interdiction cost on every edge, plus an optional (X, Y) bipartition.
///
/// Edges are normalized to u < v and stored sorted by (u, v); an edge index is
/// therefore a stable, label-determined handle that certificates refer to.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int num_vertices, std::vector<Edge> edges = {},
                         std::optional<std::vector<Side>> bipartition = std::nullopt);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  std::optional<int> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  const std::optional<std::vector<Side>>& bipartition() const noexcept { return bipartition_; }
  Side side(Vertex v) const;
  WeightedGraph with_bipartition(std::vector<Side> sides) const;
  WeightedGraph without_bipartition() const;

  bool unit_weights() const;
  bool unit_costs() const;

  // Copy of the graph with the flagged edges dropped (re-indexed).
  WeightedGraph without_edges(const BitSet& removed) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.bipartition_ == b.bipartition_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<Side>> bipartition_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  std::int64_t capacity = 1;
  std::int64_t cost = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed network with arc capacities, arc interdiction costs and
/// distinguished source/sink. Arcs are sorted by (from, to).
class FlowNetwork {
 public:
  FlowNetwork() = default;
  FlowNetwork(int num_vertices, std::vector<Arc> arcs, Vertex source, Vertex sink);

  int num_vertices() const noexcept { return n_; }
  int num_arcs() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(int index) const { return arcs_.at(static_cast<std::size_t>(index)); }
  Vertex source() const noexcept { return s_; }
  Vertex sink() const noexcept { return t_; }
  std::optional<int> find_arc(Vertex from, Vertex to) const;

  friend bool operator==(const FlowNetwork&, const FlowNetwork&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  Vertex s_ = 0;
  Vertex t_ = 0;
};

/// A subset of a host graph's edges (or a network's arcs) with its totals.
struct EdgeSet {
  std::vector<int> edges;
  std::int64_t total_cost = 0;
  std::int64_t total_weight = 0;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

EdgeSet make_edge_set(const WeightedGraph& g, std::vector<int> edges);
EdgeSet make_arc_set(const FlowNetwork& net, std::vector<int> arcs);

/// Non-negative integer or INFINITY. Finite arithmetic never yields INFINITY.
class ExtendedWeight {
 public:
  constexpr ExtendedWeight() = default;
  constexpr ExtendedWeight(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedWeight infinity() {
    ExtendedWeight w;
    w.infinite_ = true;
    return w;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedWeight& a,
                                                    const ExtendedWeight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace interdict
