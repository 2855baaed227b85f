#pragma once

#include <cstdint>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

/// Canonical adjacency code (n <= 11): the maximum, over relabelings, of the
/// upper-triangle adjacency bits read row by row. Equal codes for equal n
/// means isomorphic.
std::uint64_t canonical_code(const WeightedGraph& g);

/// Graph with n vertices decoded from a canonical code.
WeightedGraph graph_from_code(int n, std::uint64_t code);

/// Canonical codes of all isomorphism classes on exactly n vertices (n <= 10),
/// ascending. Cached; decode with graph_from_code.
const std::vector<std::uint64_t>& canonical_codes(int n);

/// One unit-weight representative per isomorphism class on exactly n
/// vertices, ordered by canonical code.
std::vector<WeightedGraph> graphs_up_to_isomorphism(int n);
std::vector<WeightedGraph> connected_graphs(int n);

/// Bipartite graphs with X = {0..nx-1}, Y = {nx..nx+ny-1} and the bipartition
/// annotated, one per orbit under side-preserving relabelings.
std::vector<WeightedGraph> bipartite_graphs(int nx, int ny);

/// Every graph with 1..max_n vertices, and every bipartite graph with sides
/// of 1..max_side vertices.
std::vector<WeightedGraph> general_sweep(int max_n);
std::vector<WeightedGraph> bipartite_sweep(int max_side);

}  // namespace interdict
