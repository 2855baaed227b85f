#include "interdict/conflict_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "interdict/algorithms.hpp"

namespace interdict {

namespace {

enum class Pick { first, second };

std::string edge_name(const WeightedGraph& g, int i) {
  return "{" + std::to_string(g.edge(i).u + 1) + "," + std::to_string(g.edge(i).v + 1) + "}";
}

}  // namespace

ConflictGraph build_conflict_graph(const WeightedGraph& gadget, const std::vector<int>& chosen,
                                   int source_n) {
  ConflictGraph cg;
  cg.nodes = chosen;
  std::vector<int> owner(static_cast<std::size_t>(gadget.num_vertices()), -1);
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    owner[static_cast<std::size_t>(gadget.edge(chosen[k]).u)] = static_cast<int>(k);
    owner[static_cast<std::size_t>(gadget.edge(chosen[k]).v)] = static_cast<int>(k);
  }
  std::set<std::tuple<int, int, int, int, int>> seen;
  for (Vertex t = 0; t < 2 * source_n; ++t) {
    if (owner[static_cast<std::size_t>(t)] >= 0) continue;
    const int a = owner[static_cast<std::size_t>(t ^ 1)];
    if (a < 0) continue;
    for (const Incidence& inc : gadget.incident(t)) {
      const Vertex q = inc.neighbor;
      if (q >= 2 * source_n) continue;
      const int b = owner[static_cast<std::size_t>(q)];
      if (b < 0 || b == a) continue;
      const Side side = (t % 2 == 0) ? Side::X : Side::Y;
      // Both connectors of one constraint map to the same key.
      const auto key = std::make_tuple(std::min(a, b), std::max(a, b), static_cast<int>(side),
                                       std::min(t / 2, q / 2), std::max(t / 2, q / 2));
      if (!seen.insert(key).second) continue;
      cg.links.push_back({a, b, t, side});
    }
  }
  return cg;
}

Extraction extract_independent_set(const WeightedGraph& gadget, const std::vector<int>& chosen,
                                   const WeightedGraph& source, std::int64_t k) {
  const int n = source.num_vertices();
  if (static_cast<std::int64_t>(chosen.size()) > k)
    throw ExtractionError("more than k chosen edges", chosen);
  const std::int64_t dominated = domination_count(gadget, chosen, DominationMode::exclusive);
  if (dominated < 2 * k * n)
    throw ExtractionError("chosen edges dominate " + std::to_string(dominated) + " < " +
                              std::to_string(2 * k * n) + " edges",
                          chosen);

  for (int e : chosen) {
    const Edge& edge = gadget.edge(e);
    if (edge.u >= 2 * n || edge.v >= 2 * n)
      throw ExtractionError("pendant edge " + edge_name(gadget, e) + " cannot dominate 2n edges", {e});
  }
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      const Edge& a = gadget.edge(chosen[i]);
      const Edge& b = gadget.edge(chosen[j]);
      bool clash = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      for (Vertex x : {a.u, a.v})
        for (Vertex y : {b.u, b.v})
          if (x != y && gadget.adjacent(x, y)) clash = true;
      if (clash)
        throw ExtractionError("edges " + edge_name(gadget, chosen[i]) + " and " +
                                  edge_name(gadget, chosen[j]) + " share a dominated edge",
                              {chosen[i], chosen[j]});
    }
  }

  Extraction out;
  out.conflicts = build_conflict_graph(gadget, chosen, n);
  const std::size_t count = chosen.size();
  std::vector<std::vector<std::size_t>> incident(count);
  for (std::size_t l = 0; l < out.conflicts.links.size(); ++l) {
    incident[static_cast<std::size_t>(out.conflicts.links[l].a)].push_back(l);
    incident[static_cast<std::size_t>(out.conflicts.links[l].b)].push_back(l);
  }
  std::vector<int> degree(count);
  for (std::size_t v = 0; v < count; ++v) degree[v] = static_cast<int>(incident[v].size());
  std::vector<char> link_alive(out.conflicts.links.size(), 1);
  std::vector<char> resolved(count, 0);
  std::vector<Pick> pick(count, Pick::first);

  // Bottom-up peeling of leaves.
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < count; ++v)
    if (degree[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (resolved[v] || degree[v] > 1) continue;
    resolved[v] = 1;
    if (degree[v] == 0) {
      ++out.stats.isolated;
      pick[v] = Pick::first;
      continue;
    }
    ++out.stats.peeled_by_link;
    for (std::size_t l : incident[v]) {
      if (!link_alive[l]) continue;
      link_alive[l] = 0;
      const auto& link = out.conflicts.links[l];
      pick[v] = link.side == Side::Y ? Pick::second : Pick::first;
      const std::size_t other = static_cast<std::size_t>(link.a) == v ? static_cast<std::size_t>(link.b)
                                                                      : static_cast<std::size_t>(link.a);
      --degree[v];
      if (--degree[other] <= 1 && !resolved[other]) queue.push_back(other);
    }
  }

  // The remaining core is 2-colored: black picks first, white picks second.
  std::vector<int> color(count, -1);
  std::vector<std::size_t> parent(count, 0);
  std::vector<int> depth(count, 0);
  for (std::size_t root = 0; root < count; ++root) {
    if (resolved[root] || color[root] >= 0) continue;
    ++out.stats.core_components;
    color[root] = 0;
    parent[root] = root;
    std::deque<std::size_t> bfs{root};
    while (!bfs.empty()) {
      const std::size_t v = bfs.front();
      bfs.pop_front();
      ++out.stats.core_nodes;
      for (std::size_t l : incident[v]) {
        if (!link_alive[l]) continue;
        const auto& link = out.conflicts.links[l];
        const std::size_t w = static_cast<std::size_t>(link.a) == v ? static_cast<std::size_t>(link.b)
                                                                    : static_cast<std::size_t>(link.a);
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          bfs.push_back(w);
        } else if (color[w] == color[v]) {
          std::vector<int> left;
          std::vector<int> right;
          std::size_t x = v;
          std::size_t y = w;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              left.push_back(chosen[x]);
              x = parent[x];
            } else {
              right.push_back(chosen[y]);
              y = parent[y];
            }
          }
          left.push_back(chosen[x]);
          left.insert(left.end(), right.rbegin(), right.rend());
          throw ExtractionError("odd conflict cycle of length " + std::to_string(left.size()), left);
        }
      }
    }
  }
  for (std::size_t v = 0; v < count; ++v)
    if (!resolved[v]) pick[v] = color[v] == 0 ? Pick::first : Pick::second;

  for (std::size_t v = 0; v < count; ++v) {
    const Edge& e = gadget.edge(chosen[v]);
    // Edges are stored with u < v; the even endpoint is the first coordinate.
    const Vertex first = (e.u % 2 == 0 ? e.u : e.v) / 2;
    const Vertex second = (e.u % 2 == 1 ? e.u : e.v) / 2;
    out.vertices.push_back(pick[v] == Pick::first ? first : second);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace interdict
