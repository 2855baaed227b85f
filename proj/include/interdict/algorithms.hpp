#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "interdict/bitset.hpp"
#include "interdict/graph.hpp"

namespace interdict {

// Every primitive takes an optional `removed` filter so callers can evaluate
// G - I without materializing a new graph.

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  int sets() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_;
};

struct Components {
  int count = 0;
  std::vector<int> label;  // component id per vertex, numbered by lowest member
};

Components components(const WeightedGraph& g, const BitSet& removed = {});

/// eta(G): weight of a minimum spanning tree, INFINITY iff G - removed is
/// disconnected. Kruskal; ties broken by edge index.
ExtendedWeight mst_weight(const WeightedGraph& g, const BitSet& removed = {});
std::vector<int> minimum_spanning_forest(const WeightedGraph& g, const BitSet& removed = {});

/// Maximum-cardinality matching as edge indices (Kuhn on two-colorable
/// graphs, Edmonds' blossom contraction otherwise).
std::vector<int> maximum_matching(const WeightedGraph& g, const BitSet& removed = {});

/// Maximum-weight matching by exhaustive enumeration; refuses beyond
/// `edge_cap` active edges.
std::vector<int> maximum_weight_matching_exhaustive(const WeightedGraph& g,
                                                    const BitSet& removed = {},
                                                    int edge_cap = 20);

/// nu(G): cardinality for unit weights, otherwise total weight of a maximum
/// weight matching (exhaustive, 20-edge cap).
std::int64_t max_matching(const WeightedGraph& g, const BitSet& removed = {});
std::vector<int> max_matching_edges(const WeightedGraph& g, const BitSet& removed = {});

/// lambda(G): size of a minimum maximal matching, by branch and bound.
std::vector<int> minimum_maximal_matching(const WeightedGraph& g, const BitSet& removed = {});
std::int64_t min_maximal_matching(const WeightedGraph& g, const BitSet& removed = {});

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;
  std::vector<bool> source_side;  // residual reachability from s
};

FlowResult max_flow(const FlowNetwork& net, const BitSet& removed = {});

struct Connectivity {
  int d = 0;
  EdgeSet witness;
};

/// Edge connectivity via n-1 unit-capacity max-flow computations. Disconnected
/// or single-vertex input gives d = 0 with an empty witness.
Connectivity edge_connectivity(const WeightedGraph& g, const BitSet& removed = {});

enum class DominationMode { inclusive, exclusive };

/// Edges with at least one endpoint in `vertices`.
std::int64_t covered_edge_count(const WeightedGraph& g, std::span<const Vertex> vertices,
                                const BitSet& removed = {});

/// Edges sharing an endpoint with some member of `edges`. Inclusive counts the
/// members themselves as dominated; exclusive counts only E \ S.
std::int64_t domination_count(const WeightedGraph& g, std::span<const int> edges,
                              DominationMode mode, const BitSet& removed = {});

std::int64_t coverage_counts(const WeightedGraph& g, const VertexSet& vertices);
std::int64_t coverage_counts(const WeightedGraph& g, const EdgeSet& edges, DominationMode mode);

std::int64_t induced_edge_count(const WeightedGraph& g, std::span<const Vertex> vertices);

std::optional<std::vector<Side>> two_coloring(const WeightedGraph& g, const BitSet& removed = {});

/// Minimum vertex cover of a bipartite graph via Koenig's alternating-path
/// construction from a maximum matching.
VertexSet minimum_vertex_cover_bipartite(const WeightedGraph& g, const BitSet& removed = {});

/// Converts an edge dominating set into an independent one (a maximal
/// matching) of no larger size.
std::vector<int> independent_edge_dominating_set(const WeightedGraph& g,
                                                 std::span<const int> dominating,
                                                 const BitSet& removed = {});

bool is_matching(const WeightedGraph& g, std::span<const int> edges);
bool is_maximal_matching(const WeightedGraph& g, std::span<const int> edges,
                         const BitSet& removed = {});
bool is_independent_set(const WeightedGraph& g, std::span<const Vertex> vertices);
bool is_clique(const WeightedGraph& g, std::span<const Vertex> vertices);
bool is_vertex_cover(const WeightedGraph& g, std::span<const Vertex> vertices,
                     const BitSet& removed = {});

}  // namespace interdict
