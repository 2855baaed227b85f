#include "interdict/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>

namespace interdict {

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  auto& ra = rank_[static_cast<std::size_t>(a)];
  auto& rb = rank_[static_cast<std::size_t>(b)];
  if (ra < rb) std::swap(a, b);
  parent_[static_cast<std::size_t>(b)] = a;
  if (ra == rb) ++rank_[static_cast<std::size_t>(a)];
  --sets_;
  return true;
}

Components components(const WeightedGraph& g, const BitSet& removed) {
  const int n = g.num_vertices();
  UnionFind uf(n);
  for (int i = 0; i < g.num_edges(); ++i)
    if (!removed.test(static_cast<std::size_t>(i))) uf.unite(g.edge(i).u, g.edge(i).v);
  Components out;
  out.count = uf.sets();
  out.label.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> root_label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    auto& rl = root_label[static_cast<std::size_t>(uf.find(v))];
    if (rl < 0) rl = next++;
    out.label[static_cast<std::size_t>(v)] = rl;
  }
  return out;
}

std::vector<int> minimum_spanning_forest(const WeightedGraph& g, const BitSet& removed) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.num_edges()));
  for (int i = 0; i < g.num_edges(); ++i)
    if (!removed.test(static_cast<std::size_t>(i))) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.edge(a).weight < g.edge(b).weight; });
  UnionFind uf(g.num_vertices());
  std::vector<int> forest;
  for (int i : order)
    if (uf.unite(g.edge(i).u, g.edge(i).v)) forest.push_back(i);
  std::sort(forest.begin(), forest.end());
  return forest;
}

ExtendedWeight mst_weight(const WeightedGraph& g, const BitSet& removed) {
  const auto forest = minimum_spanning_forest(g, removed);
  if (g.num_vertices() > 1 && static_cast<int>(forest.size()) < g.num_vertices() - 1)
    return ExtendedWeight::infinity();
  std::int64_t total = 0;
  for (int i : forest) total += g.edge(i).weight;
  return total;
}

namespace {

std::vector<std::vector<int>> active_adjacency(const WeightedGraph& g, const BitSet& removed) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    const Edge& e = g.edge(i);
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> mates_to_edges(const WeightedGraph& g, const std::vector<int>& mate) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    const int w = mate[static_cast<std::size_t>(v)];
    if (w > v) out.push_back(*g.find_edge(v, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Kuhn's augmenting-path algorithm, X side searching into Y.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const std::vector<std::vector<int>>& adj, const std::vector<Side>& sides)
      : adj_(adj), sides_(sides), mate_(adj.size(), -1), seen_(adj.size(), 0) {}

  std::vector<int> solve() {
    const int n = static_cast<int>(adj_.size());
    for (int v = 0; v < n; ++v) {
      if (sides_[static_cast<std::size_t>(v)] != Side::X) continue;
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (mate_[static_cast<std::size_t>(w)] < 0) {
          mate_[static_cast<std::size_t>(w)] = v;
          mate_[static_cast<std::size_t>(v)] = w;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (sides_[static_cast<std::size_t>(v)] != Side::X || mate_[static_cast<std::size_t>(v)] >= 0)
        continue;
      ++stamp_;
      augment(v);
    }
    return mate_;
  }

 private:
  bool augment(int x) {
    for (int y : adj_[static_cast<std::size_t>(x)]) {
      if (seen_[static_cast<std::size_t>(y)] == stamp_) continue;
      seen_[static_cast<std::size_t>(y)] = stamp_;
      const int other = mate_[static_cast<std::size_t>(y)];
      if (other < 0 || augment(other)) {
        mate_[static_cast<std::size_t>(y)] = x;
        mate_[static_cast<std::size_t>(x)] = y;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  const std::vector<Side>& sides_;
  std::vector<int> mate_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

// Edmonds' blossom contraction, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        mate_(adj.size(), -1),
        parent_(adj.size(), -1),
        base_(adj.size(), 0),
        used_(adj.size(), 0),
        blossom_(adj.size(), 0) {}

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[at(v)] >= 0) continue;
      for (int w : adj_[at(v)]) {
        if (mate_[at(w)] < 0) {
          mate_[at(w)] = v;
          mate_[at(v)] = w;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[at(root)] >= 0) continue;
      int v = find_path(root);
      while (v >= 0) {
        const int pv = parent_[at(v)];
        const int ppv = mate_[at(pv)];
        mate_[at(v)] = pv;
        mate_[at(pv)] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  static std::size_t at(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<char> seen(at(n_), 0);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = 1;
      if (mate_[at(a)] < 0) break;
      a = parent_[at(mate_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(mate_[at(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[at(v)] != b) {
      blossom_[at(base_[at(v)])] = 1;
      blossom_[at(base_[at(mate_[at(v)])])] = 1;
      parent_[at(v)] = child;
      child = mate_[at(v)];
      v = parent_[at(mate_[at(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[at(root)] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj_[at(v)]) {
        if (base_[at(v)] == base_[at(to)] || mate_[at(v)] == to) continue;
        if (to == root || (mate_[at(to)] >= 0 && parent_[at(mate_[at(to)])] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[at(base_[at(i)])]) {
              base_[at(i)] = cur;
              if (!used_[at(i)]) {
                used_[at(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[at(to)] < 0) {
          parent_[at(to)] = v;
          if (mate_[at(to)] < 0) return to;
          const int next = mate_[at(to)];
          used_[at(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

std::vector<Side> sides_or_coloring(const WeightedGraph& g, const BitSet& removed) {
  if (g.bipartition()) return *g.bipartition();
  auto coloring = two_coloring(g, removed);
  if (!coloring) throw ValidationError("graph is not bipartite");
  return *coloring;
}

}  // namespace

std::vector<int> maximum_matching(const WeightedGraph& g, const BitSet& removed) {
  const auto adj = active_adjacency(g, removed);
  std::optional<std::vector<Side>> sides = g.bipartition();
  if (!sides) sides = two_coloring(g, removed);
  if (sides) {
    BipartiteMatcher matcher(adj, *sides);
    return mates_to_edges(g, matcher.solve());
  }
  BlossomMatcher matcher(adj);
  return mates_to_edges(g, matcher.solve());
}

std::vector<int> maximum_weight_matching_exhaustive(const WeightedGraph& g, const BitSet& removed,
                                                    int edge_cap) {
  std::vector<int> active;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!removed.test(static_cast<std::size_t>(i))) active.push_back(i);
  if (static_cast<int>(active.size()) > edge_cap)
    throw CapExceeded("weighted matching enumeration cap: " + std::to_string(active.size()) +
                      " edges > " + std::to_string(edge_cap));
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> current;
  std::vector<int> best;
  std::int64_t best_weight = 0;
  std::int64_t weight = 0;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (weight > best_weight) {
      best_weight = weight;
      best = current;
    }
    for (std::size_t k = from; k < active.size(); ++k) {
      const Edge& e = g.edge(active[k]);
      if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
      current.push_back(active[k]);
      weight += e.weight;
      self(self, k + 1);
      weight -= e.weight;
      current.pop_back();
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  dfs(dfs, 0);
  return best;
}

std::vector<int> max_matching_edges(const WeightedGraph& g, const BitSet& removed) {
  if (g.unit_weights()) return maximum_matching(g, removed);
  return maximum_weight_matching_exhaustive(g, removed);
}

std::int64_t max_matching(const WeightedGraph& g, const BitSet& removed) {
  if (g.unit_weights()) return static_cast<std::int64_t>(maximum_matching(g, removed).size());
  std::int64_t total = 0;
  for (int i : maximum_weight_matching_exhaustive(g, removed)) total += g.edge(i).weight;
  return total;
}

namespace {

class MinimalMaximalSearch {
 public:
  MinimalMaximalSearch(const WeightedGraph& g, const BitSet& removed)
      : g_(g), free_(static_cast<std::size_t>(g.num_vertices()), 1) {
    for (int i = 0; i < g.num_edges(); ++i)
      if (!removed.test(static_cast<std::size_t>(i))) active_.push_back(i);
    // Greedy maximal matching seeds the incumbent.
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int i : active_) {
      const Edge& e = g.edge(i);
      if (used[idx(e.u)] || used[idx(e.v)]) continue;
      used[idx(e.u)] = used[idx(e.v)] = 1;
      best_.push_back(i);
    }
  }

  std::vector<int> run() {
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  bool open(int i) const {
    const Edge& e = g_.edge(i);
    return free_[idx(e.u)] && free_[idx(e.v)];
  }

  void search() {
    int first_open = -1;
    std::vector<char> touched(free_.size(), 0);
    int disjoint_open = 0;
    for (int i : active_) {
      if (!open(i)) continue;
      if (first_open < 0) first_open = i;
      const Edge& e = g_.edge(i);
      if (!touched[idx(e.u)] && !touched[idx(e.v)]) {
        touched[idx(e.u)] = touched[idx(e.v)] = 1;
        ++disjoint_open;
      }
    }
    if (first_open < 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    // One matching edge dominates at most two pairwise disjoint open edges.
    const std::size_t lower = current_.size() + static_cast<std::size_t>((disjoint_open + 1) / 2);
    if (lower >= best_.size()) return;

    const Edge& e = g_.edge(first_open);
    std::vector<int> branches;
    for (Vertex end : {e.u, e.v})
      for (const Incidence& inc : g_.incident(end))
        if (std::binary_search(active_.begin(), active_.end(), inc.edge) && open(inc.edge))
          branches.push_back(inc.edge);
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
    for (int f : branches) {
      const Edge& fe = g_.edge(f);
      free_[idx(fe.u)] = free_[idx(fe.v)] = 0;
      current_.push_back(f);
      search();
      current_.pop_back();
      free_[idx(fe.u)] = free_[idx(fe.v)] = 1;
    }
  }

  const WeightedGraph& g_;
  std::vector<int> active_;
  std::vector<char> free_;
  std::vector<int> current_;
  std::vector<int> best_;
};

struct RawArc {
  int from;
  int to;
  std::int64_t capacity;
};

struct RawFlow {
  std::int64_t value = 0;
  std::vector<std::int64_t> flow;
  std::vector<bool> reachable;
};

// Edmonds-Karp on an explicit arc list.
RawFlow edmonds_karp(int n, const std::vector<RawArc>& arcs, int s, int t) {
  struct Residual {
    int to;
    std::int64_t cap;
    std::size_t rev;
  };
  std::vector<std::vector<Residual>> res(static_cast<std::size_t>(n));
  std::vector<std::pair<int, std::size_t>> forward_pos;
  forward_pos.reserve(arcs.size());
  for (const RawArc& a : arcs) {
    auto& from = res[static_cast<std::size_t>(a.from)];
    auto& to = res[static_cast<std::size_t>(a.to)];
    from.push_back({a.to, a.capacity, to.size()});
    to.push_back({a.from, 0, from.size() - 1});
    forward_pos.emplace_back(a.from, from.size() - 1);
  }
  RawFlow out;
  std::vector<std::pair<int, std::size_t>> pred(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(pred.begin(), pred.end(), std::make_pair(-1, std::size_t{0}));
    pred[static_cast<std::size_t>(s)] = {s, 0};
    std::deque<int> queue{s};
    while (!queue.empty() && pred[static_cast<std::size_t>(t)].first < 0) {
      const int v = queue.front();
      queue.pop_front();
      const auto& list = res[static_cast<std::size_t>(v)];
      for (std::size_t k = 0; k < list.size(); ++k) {
        const Residual& r = list[k];
        if (r.cap > 0 && pred[static_cast<std::size_t>(r.to)].first < 0) {
          pred[static_cast<std::size_t>(r.to)] = {v, k};
          queue.push_back(r.to);
        }
      }
    }
    if (pred[static_cast<std::size_t>(t)].first < 0) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = t; v != s;) {
      const auto [u, k] = pred[static_cast<std::size_t>(v)];
      push = std::min(push, res[static_cast<std::size_t>(u)][k].cap);
      v = u;
    }
    for (int v = t; v != s;) {
      const auto [u, k] = pred[static_cast<std::size_t>(v)];
      Residual& r = res[static_cast<std::size_t>(u)][k];
      r.cap -= push;
      res[static_cast<std::size_t>(v)][r.rev].cap += push;
      v = u;
    }
    out.value += push;
  }
  out.reachable.assign(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) out.reachable[static_cast<std::size_t>(v)] = pred[static_cast<std::size_t>(v)].first >= 0;
  out.flow.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto [u, k] = forward_pos[i];
    out.flow.push_back(arcs[i].capacity - res[static_cast<std::size_t>(u)][k].cap);
  }
  return out;
}

}  // namespace

std::vector<int> minimum_maximal_matching(const WeightedGraph& g, const BitSet& removed) {
  return MinimalMaximalSearch(g, removed).run();
}

std::int64_t min_maximal_matching(const WeightedGraph& g, const BitSet& removed) {
  return static_cast<std::int64_t>(minimum_maximal_matching(g, removed).size());
}

FlowResult max_flow(const FlowNetwork& net, const BitSet& removed) {
  std::vector<RawArc> arcs;
  std::vector<int> index;
  for (int i = 0; i < net.num_arcs(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    const Arc& a = net.arc(i);
    arcs.push_back({a.from, a.to, a.capacity});
    index.push_back(i);
  }
  const RawFlow raw = edmonds_karp(net.num_vertices(), arcs, net.source(), net.sink());
  FlowResult out;
  out.value = raw.value;
  out.arc_flow.assign(static_cast<std::size_t>(net.num_arcs()), 0);
  for (std::size_t k = 0; k < index.size(); ++k)
    out.arc_flow[static_cast<std::size_t>(index[k])] = raw.flow[k];
  out.source_side = raw.reachable;
  return out;
}

Connectivity edge_connectivity(const WeightedGraph& g, const BitSet& removed) {
  const int n = g.num_vertices();
  if (n <= 1 || components(g, removed).count > 1) return {};
  std::vector<RawArc> arcs;
  std::vector<int> index;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    arcs.push_back({g.edge(i).u, g.edge(i).v, 1});
    arcs.push_back({g.edge(i).v, g.edge(i).u, 1});
    index.push_back(i);
  }
  Connectivity best;
  best.d = std::numeric_limits<int>::max();
  for (int t = 1; t < n; ++t) {
    const RawFlow flow = edmonds_karp(n, arcs, 0, t);
    if (flow.value >= best.d) continue;
    best.d = static_cast<int>(flow.value);
    std::vector<int> cut;
    for (int i : index)
      if (flow.reachable[static_cast<std::size_t>(g.edge(i).u)] !=
          flow.reachable[static_cast<std::size_t>(g.edge(i).v)])
        cut.push_back(i);
    best.witness = make_edge_set(g, std::move(cut));
  }
  return best;
}

std::int64_t covered_edge_count(const WeightedGraph& g, std::span<const Vertex> vertices,
                                const BitSet& removed) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::int64_t count = 0;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    if (in[static_cast<std::size_t>(g.edge(i).u)] || in[static_cast<std::size_t>(g.edge(i).v)]) ++count;
  }
  return count;
}

std::int64_t domination_count(const WeightedGraph& g, std::span<const int> edges,
                              DominationMode mode, const BitSet& removed) {
  std::vector<char> touched(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> member(static_cast<std::size_t>(g.num_edges()), 0);
  for (int i : edges) {
    member[static_cast<std::size_t>(i)] = 1;
    touched[static_cast<std::size_t>(g.edge(i).u)] = 1;
    touched[static_cast<std::size_t>(g.edge(i).v)] = 1;
  }
  std::int64_t count = 0;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    if (mode == DominationMode::exclusive && member[static_cast<std::size_t>(i)]) continue;
    if (touched[static_cast<std::size_t>(g.edge(i).u)] || touched[static_cast<std::size_t>(g.edge(i).v)])
      ++count;
  }
  return count;
}

std::int64_t coverage_counts(const WeightedGraph& g, const VertexSet& vertices) {
  return covered_edge_count(g, vertices);
}

std::int64_t coverage_counts(const WeightedGraph& g, const EdgeSet& edges, DominationMode mode) {
  return domination_count(g, edges.edges, mode);
}

std::int64_t induced_edge_count(const WeightedGraph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::int64_t count = 0;
  for (const Edge& e : g.edges())
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++count;
  return count;
}

std::optional<std::vector<Side>> two_coloring(const WeightedGraph& g, const BitSet& removed) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (removed.test(static_cast<std::size_t>(inc.edge))) continue;
        auto& c = color[static_cast<std::size_t>(inc.neighbor)];
        if (c < 0) {
          c = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(inc.neighbor);
        } else if (c == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> sides(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sides[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(v)] == 0 ? Side::X : Side::Y;
  return sides;
}

VertexSet minimum_vertex_cover_bipartite(const WeightedGraph& g, const BitSet& removed) {
  const std::vector<Side> sides = sides_or_coloring(g, removed);
  const auto adj = active_adjacency(g, removed);
  BipartiteMatcher matcher(adj, sides);
  const std::vector<int> mate = matcher.solve();
  const int n = g.num_vertices();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (sides[static_cast<std::size_t>(v)] == Side::X && mate[static_cast<std::size_t>(v)] < 0) {
      visited[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
    }
  }
  // Alternating search: X -> Y along non-matching edges, Y -> X along matching edges.
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (sides[static_cast<std::size_t>(v)] == Side::X) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (mate[static_cast<std::size_t>(v)] == w || visited[static_cast<std::size_t>(w)]) continue;
        visited[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    } else {
      const int w = mate[static_cast<std::size_t>(v)];
      if (w >= 0 && !visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet cover;
  for (int v = 0; v < n; ++v) {
    const bool in_x = sides[static_cast<std::size_t>(v)] == Side::X;
    if (in_x != static_cast<bool>(visited[static_cast<std::size_t>(v)])) cover.push_back(v);
  }
  return cover;
}

std::vector<int> independent_edge_dominating_set(const WeightedGraph& g,
                                                 std::span<const int> dominating,
                                                 const BitSet& removed) {
  const int n = g.num_vertices();
  std::vector<char> in_span(static_cast<std::size_t>(n), 0);
  for (int i : dominating) {
    in_span[static_cast<std::size_t>(g.edge(i).u)] = 1;
    in_span[static_cast<std::size_t>(g.edge(i).v)] = 1;
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    if (!in_span[static_cast<std::size_t>(g.edge(i).u)] && !in_span[static_cast<std::size_t>(g.edge(i).v)])
      throw ValidationError("edge set is not edge dominating");
  }
  // Maximum matching inside the spanned vertex set...
  BitSet outside = removed;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!in_span[static_cast<std::size_t>(g.edge(i).u)] || !in_span[static_cast<std::size_t>(g.edge(i).v)])
      outside.set(static_cast<std::size_t>(i));
  std::vector<int> result = maximum_matching(g, outside);
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  for (int i : result) {
    matched[static_cast<std::size_t>(g.edge(i).u)] = 1;
    matched[static_cast<std::size_t>(g.edge(i).v)] = 1;
  }
  // ...then each leftover spanned vertex grabs a free neighbor outside the span.
  for (int w = 0; w < n; ++w) {
    if (!in_span[static_cast<std::size_t>(w)] || matched[static_cast<std::size_t>(w)]) continue;
    for (const Incidence& inc : g.incident(w)) {
      if (removed.test(static_cast<std::size_t>(inc.edge))) continue;
      const int y = inc.neighbor;
      if (in_span[static_cast<std::size_t>(y)] || matched[static_cast<std::size_t>(y)]) continue;
      matched[static_cast<std::size_t>(w)] = matched[static_cast<std::size_t>(y)] = 1;
      result.push_back(inc.edge);
      break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_matching(const WeightedGraph& g, std::span<const int> edges) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int i : edges) {
    const Edge& e = g.edge(i);
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
  }
  return true;
}

bool is_maximal_matching(const WeightedGraph& g, std::span<const int> edges, const BitSet& removed) {
  for (int i : edges)
    if (removed.test(static_cast<std::size_t>(i))) return false;
  if (!is_matching(g, edges)) return false;
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int i : edges) used[static_cast<std::size_t>(g.edge(i).u)] = used[static_cast<std::size_t>(g.edge(i).v)] = 1;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (removed.test(static_cast<std::size_t>(i))) continue;
    if (!used[static_cast<std::size_t>(g.edge(i).u)] && !used[static_cast<std::size_t>(g.edge(i).v)]) return false;
  }
  return true;
}

bool is_independent_set(const WeightedGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_clique(const WeightedGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_vertex_cover(const WeightedGraph& g, std::span<const Vertex> vertices, const BitSet& removed) {
  std::int64_t active = 0;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!removed.test(static_cast<std::size_t>(i))) ++active;
  return covered_edge_count(g, vertices, removed) == active;
}

}  // namespace interdict
