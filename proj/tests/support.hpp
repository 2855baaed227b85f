#pragma once

#include <utility>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict::testing {

inline WeightedGraph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1, 1});
  return WeightedGraph(n, edges);
}

struct WeightedPair {
  int u;
  int v;
  std::int64_t weight;
};

inline WeightedGraph make_weighted(int n, const std::vector<WeightedPair>& list) {
  std::vector<Edge> edges;
  for (const auto& e : list) edges.push_back({e.u, e.v, e.weight, 1});
  return WeightedGraph(n, edges);
}

inline WeightedGraph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return make_graph(n, pairs);
}

inline WeightedGraph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return make_graph(n, pairs);
}

inline WeightedGraph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return make_graph(n, pairs);
}

inline WeightedGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v, 1, 1});
  std::vector<Side> sides(static_cast<std::size_t>(a), Side::X);
  sides.resize(static_cast<std::size_t>(a + b), Side::Y);
  return WeightedGraph(a + b, edges, sides);
}

inline WeightedGraph with_two_coloring(const WeightedGraph& g, int split) {
  std::vector<Side> sides(static_cast<std::size_t>(g.num_vertices()), Side::Y);
  for (int v = 0; v < split; ++v) sides[static_cast<std::size_t>(v)] = Side::X;
  return g.with_bipartition(sides);
}

inline WeightedGraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return make_graph(10, pairs);
}

// Two weight-0 triangles joined by a weight-1 bridge.
inline WeightedGraph bridged_triangles() {
  return make_weighted(6, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {3, 4, 0}, {4, 5, 0}, {3, 5, 0}, {2, 3, 1}});
}

// Vertices a,b,c,d with 0-edges ab, cd and 1-edges bc, ad, ac.
inline WeightedGraph mixed_square() {
  return make_weighted(4, {{0, 1, 0}, {2, 3, 0}, {1, 2, 1}, {0, 3, 1}, {0, 2, 1}});
}

inline std::vector<int> all_edges(const WeightedGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e) out.push_back(e);
  return out;
}

}  // namespace interdict::testing
