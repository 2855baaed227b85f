#include "interdict/graph.hpp"

#include <algorithm>
#include <tuple>

namespace interdict {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

}  // namespace

WeightedGraph::WeightedGraph(int num_vertices, std::vector<Edge> edges,
                             std::optional<std::vector<Side>> bipartition)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw ValidationError("edge " + edge_text(e.u, e.v) + " references a missing vertex");
    if (e.weight < 0) throw ValidationError("negative weight on edge " + edge_text(e.u, e.v));
    if (e.cost < 1)
      throw ValidationError("interdiction cost below 1 on edge " + edge_text(e.u, e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw ValidationError("duplicate edge " + edge_text(edges_[i].u, edges_[i].v));
  }
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });

  if (bipartition) {
    if (static_cast<int>(bipartition->size()) != n_)
      throw ValidationError("bipartition does not label every vertex");
    for (const Edge& e : edges_) {
      if ((*bipartition)[static_cast<std::size_t>(e.u)] ==
          (*bipartition)[static_cast<std::size_t>(e.v)])
        throw ValidationError("edge " + edge_text(e.u, e.v) + " lies inside one side");
    }
    bipartition_ = std::move(bipartition);
  }
}

std::optional<int> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b),
                             [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Side WeightedGraph::side(Vertex v) const {
  if (!bipartition_) throw ValidationError("graph has no bipartition");
  return (*bipartition_)[static_cast<std::size_t>(v)];
}

WeightedGraph WeightedGraph::with_bipartition(std::vector<Side> sides) const {
  return WeightedGraph(n_, edges_, std::move(sides));
}

WeightedGraph WeightedGraph::without_bipartition() const { return WeightedGraph(n_, edges_); }

bool WeightedGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

bool WeightedGraph::unit_costs() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.cost == 1; });
}

WeightedGraph WeightedGraph::without_edges(const BitSet& removed) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!removed.test(i)) kept.push_back(edges_[i]);
  return WeightedGraph(n_, std::move(kept), bipartition_);
}

FlowNetwork::FlowNetwork(int num_vertices, std::vector<Arc> arcs, Vertex source, Vertex sink)
    : n_(num_vertices), arcs_(std::move(arcs)), s_(source), t_(sink) {
  if (n_ < 2) throw ValidationError("flow network needs at least two vertices");
  if (s_ < 0 || t_ < 0 || s_ >= n_ || t_ >= n_)
    throw ValidationError("source or sink out of range");
  if (s_ == t_) throw ValidationError("source equals sink");
  for (const Arc& a : arcs_) {
    if (a.from == a.to) throw ValidationError("self-loop arc at vertex " + std::to_string(a.from + 1));
    if (a.from < 0 || a.to < 0 || a.from >= n_ || a.to >= n_)
      throw ValidationError("arc references a missing vertex");
    if (a.capacity < 1) throw ValidationError("arc capacity below 1");
    if (a.cost < 0) throw ValidationError("negative arc cost");
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i].from == arcs_[i - 1].from && arcs_[i].to == arcs_[i - 1].to)
      throw ValidationError("duplicate arc (" + std::to_string(arcs_[i].from + 1) + "," +
                            std::to_string(arcs_[i].to + 1) + ")");
  }
}

std::optional<int> FlowNetwork::find_arc(Vertex from, Vertex to) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(from, to),
                             [](const Arc& a, const std::pair<Vertex, Vertex>& key) {
                               return std::tie(a.from, a.to) < std::tie(key.first, key.second);
                             });
  if (it == arcs_.end() || it->from != from || it->to != to) return std::nullopt;
  return static_cast<int>(it - arcs_.begin());
}

EdgeSet make_edge_set(const WeightedGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EdgeSet set;
  for (int i : edges) {
    if (i < 0 || i >= g.num_edges()) throw ValidationError("edge index out of range");
    set.total_cost += g.edge(i).cost;
    set.total_weight += g.edge(i).weight;
  }
  set.edges = std::move(edges);
  return set;
}

EdgeSet make_arc_set(const FlowNetwork& net, std::vector<int> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  EdgeSet set;
  for (int i : arcs) {
    if (i < 0 || i >= net.num_arcs()) throw ValidationError("arc index out of range");
    set.total_cost += net.arc(i).cost;
    set.total_weight += net.arc(i).capacity;
  }
  set.edges = std::move(arcs);
  return set;
}

std::int64_t ExtendedWeight::value() const {
  if (infinite_) throw std::logic_error("value() of INFINITY");
  return value_;
}

std::string ExtendedWeight::to_string() const {
  return infinite_ ? std::string("INFINITY") : std::to_string(value_);
}

}  // namespace interdict
