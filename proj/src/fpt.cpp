#include "interdict/fpt.hpp"

#include <algorithm>
#include <numeric>

#include "interdict/algorithms.hpp"

namespace interdict {

namespace {

void partitions_into(int rest, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(rest, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(rest - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Lexicographically first i-subset whose removal leaves at least `target`
// components. A deletion adds at most one component, which bounds each branch.
class CutSearch {
 public:
  CutSearch(const WeightedGraph& g, int size, std::int64_t target)
      : g_(g), size_(size), target_(target), removed_(static_cast<std::size_t>(g.num_edges())) {}

  bool run() { return descend(0); }
  const std::vector<int>& chosen() const { return chosen_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  bool descend(int start) {
    ++nodes_;
    const int depth = static_cast<int>(chosen_.size());
    const std::int64_t count = components(g_, removed_).count;
    if (count + (size_ - depth) < target_) return false;
    if (depth == size_) return count >= target_;
    for (int e = start; e + (size_ - depth) <= g_.num_edges(); ++e) {
      chosen_.push_back(e);
      removed_.set(static_cast<std::size_t>(e));
      if (descend(e + 1)) return true;
      removed_.reset(static_cast<std::size_t>(e));
      chosen_.pop_back();
    }
    return false;
  }

  const WeightedGraph& g_;
  int size_;
  std::int64_t target_;
  BitSet removed_;
  std::vector<int> chosen_;
  std::int64_t nodes_ = 0;
};

struct Piece {
  std::vector<Vertex> vertices;
  std::vector<int> edge_map;  // local edge index -> host edge index
  CutProfile profile;
};

OracleResult mve_result(const WeightedGraph& g, std::vector<int> cut, const char* path) {
  OracleResult result;
  std::sort(cut.begin(), cut.end());
  const EdgeSet set = make_edge_set(g, std::move(cut));
  BitSet removed(static_cast<std::size_t>(g.num_edges()));
  for (int e : set.edges) removed.set(static_cast<std::size_t>(e));
  result.optimum = mst_weight(g, removed);
  result.certificate = set;
  result.stats["path"] = path;
  return result;
}

void require_bipartite(const WeightedGraph& g) {
  if (!g.bipartition() && !two_coloring(g)) throw ValidationError("graph is not bipartite");
}

}  // namespace

std::vector<Partition> additive_partitions(int b) {
  if (b < 0) throw ValidationError("partitions need b >= 0");
  std::vector<Partition> out;
  Partition prefix;
  partitions_into(b, b, prefix, out);
  return out;
}

CutProfile kway_cut_exact(const WeightedGraph& g, int s, const Caps& caps) {
  if (s < 0) throw ValidationError("cut size must be non-negative");
  if (binomial_prefix_sum(g.num_edges(), s, caps.edge_subset_limit()) > caps.edge_subset_limit())
    throw CapExceeded("enumeration cap: k-way cut over " + std::to_string(g.num_edges()) + " edges");
  CutProfile out;
  out.best.push_back(components(g).count);
  out.witnesses.emplace_back();
  for (int i = 1; i <= s; ++i) {
    out.best.push_back(out.best.back());
    out.witnesses.push_back(out.witnesses.back());
    if (i > g.num_edges()) continue;
    CutSearch search(g, i, out.best[static_cast<std::size_t>(i) - 1] + 1);
    const bool found = search.run();
    out.nodes += search.nodes();
    if (found) {
      out.best.back() += 1;
      out.witnesses.back() = search.chosen();
    }
  }
  return out;
}

OracleResult fpt_mve_01(const WeightedGraph& g, std::int64_t b, const FptOptions& opts) {
  if (b < 0) throw ValidationError("budget must be non-negative");
  for (const Edge& e : g.edges())
    if (e.weight != 0 && e.weight != 1) throw ValidationError("fpt_mve_01 needs edge weights in {0, 1}");
  if (g.num_vertices() <= 1) return mve_result(g, {}, "trivial");
  if (components(g).count > 1) return mve_result(g, {}, "disconnected");

  const Connectivity conn = edge_connectivity(g);
  if (conn.d <= b) {
    OracleResult result = mve_result(g, conn.witness.edges, "cut");
    result.stats["edgeConnectivity"] = conn.d;
    return result;
  }

  // Table A: cut profiles of the components of the weight-0 subgraph H.
  BitSet heavy(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).weight == 1) heavy.set(static_cast<std::size_t>(e));
  const Components parts = components(g, heavy);
  std::vector<Piece> pieces(static_cast<std::size_t>(parts.count));
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    pieces[static_cast<std::size_t>(parts.label[static_cast<std::size_t>(v)])].vertices.push_back(v);
  const int budget = static_cast<int>(b);
  std::int64_t nodes = 0;
  nlohmann::json table_a = nlohmann::json::array();
  for (Piece& piece : pieces) {
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < piece.vertices.size(); ++i)
      local[static_cast<std::size_t>(piece.vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.weight != 0 || local[static_cast<std::size_t>(edge.u)] < 0) continue;
      edges.push_back({local[static_cast<std::size_t>(edge.u)], local[static_cast<std::size_t>(edge.v)], 0, edge.cost});
      piece.edge_map.push_back(e);
    }
    // Relabeling is monotone, so local edge order matches host edge order.
    const WeightedGraph sub(static_cast<int>(piece.vertices.size()), std::move(edges));
    piece.profile = kway_cut_exact(sub, budget, opts.caps);
    nodes += piece.profile.nodes;
    table_a.push_back(piece.profile.best);
  }

  // Table B: per budget i, components ranked by their profile at i.
  std::vector<std::vector<int>> table_b(static_cast<std::size_t>(budget) + 1);
  for (int i = 1; i <= budget; ++i) {
    std::vector<int> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return pieces[static_cast<std::size_t>(x)].profile.best[static_cast<std::size_t>(i)] >
             pieces[static_cast<std::size_t>(y)].profile.best[static_cast<std::size_t>(i)];
    });
    if (!opts.full_window && static_cast<int>(order.size()) > budget) order.resize(static_cast<std::size_t>(budget));
    table_b[static_cast<std::size_t>(i)] = std::move(order);
  }

  // Assign the parts of every partition of b to distinct components, each
  // part drawn from the first j entries of its row (j = number of parts).
  const auto partitions = additive_partitions(budget);
  std::int64_t best_score = -1;
  std::vector<std::pair<int, int>> best_assignment;
  std::vector<std::pair<int, int>> assignment;
  std::vector<char> used(pieces.size(), 0);
  std::int64_t assignments = 0;
  for (const Partition& partition : partitions) {
    const std::size_t window = opts.full_window ? pieces.size() : partition.size();
    auto branch = [&](auto&& self, std::size_t t, std::int64_t score) -> void {
      ++nodes;
      if (t == partition.size()) {
        ++assignments;
        if (score > best_score) {
          best_score = score;
          best_assignment = assignment;
        }
        return;
      }
      const int part = partition[t];
      const auto& row = table_b[static_cast<std::size_t>(part)];
      for (std::size_t r = 0; r < row.size() && r < window; ++r) {
        const int c = row[r];
        if (used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = 1;
        assignment.emplace_back(c, part);
        self(self, t + 1,
             score + pieces[static_cast<std::size_t>(c)].profile.best[static_cast<std::size_t>(part)] - 1);
        assignment.pop_back();
        used[static_cast<std::size_t>(c)] = 0;
      }
    };
    branch(branch, 0, static_cast<std::int64_t>(pieces.size()));
  }

  std::vector<int> cut;
  for (const auto& [c, part] : best_assignment) {
    const Piece& piece = pieces[static_cast<std::size_t>(c)];
    for (int local : piece.profile.witnesses[static_cast<std::size_t>(part)])
      cut.push_back(piece.edge_map[static_cast<std::size_t>(local)]);
  }
  OracleResult result = mve_result(g, std::move(cut), "partition");
  result.nodes = nodes;
  result.stats["edgeConnectivity"] = conn.d;
  result.stats["components"] = pieces.size();
  result.stats["partitions"] = partitions.size();
  result.stats["assignments"] = assignments;
  result.stats["bestComponentCount"] = best_score;
  result.stats["tableA"] = std::move(table_a);
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= budget; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c : table_b[static_cast<std::size_t>(i)]) row.push_back(c);
    rows.push_back(std::move(row));
  }
  result.stats["tableB"] = std::move(rows);
  return result;
}

OracleResult pvc_bipartite(const WeightedGraph& g, std::int64_t k) {
  require_bipartite(g);
  const int n = g.num_vertices();
  OracleResult result;
  if (k < 0) throw ValidationError("k must be non-negative");
  if (k > n) {
    result.optimum = ExtendedWeight::infinity();
    result.certificate = VertexSet{};
    result.feasible = false;
    return result;
  }
  std::vector<int> residual(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) residual[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> state(static_cast<std::size_t>(n), 0);  // 0 open, 1 taken, 2 discarded
  std::vector<Vertex> taken;
  std::int64_t best = -1;
  VertexSet best_set;

  auto branch = [&](auto&& self, std::int64_t covered) -> void {
    ++result.nodes;
    const std::int64_t slots = k - static_cast<std::int64_t>(taken.size());
    std::vector<int> open;
    for (Vertex v = 0; v < n; ++v)
      if (state[static_cast<std::size_t>(v)] == 0) open.push_back(v);
    std::stable_sort(open.begin(), open.end(), [&](int a, int c) {
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(c)];
    });
    std::int64_t bound = covered;
    for (std::int64_t i = 0; i < slots && i < static_cast<std::int64_t>(open.size()); ++i)
      bound += residual[static_cast<std::size_t>(open[static_cast<std::size_t>(i)])];
    if (bound <= best) return;
    if (slots == 0 || open.empty() || residual[static_cast<std::size_t>(open.front())] == 0) {
      best = covered;
      best_set = taken;
      return;
    }
    const Vertex v = open.front();
    state[static_cast<std::size_t>(v)] = 1;
    taken.push_back(v);
    const int gain = residual[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v))
      if (state[static_cast<std::size_t>(inc.neighbor)] != 1) --residual[static_cast<std::size_t>(inc.neighbor)];
    self(self, covered + gain);
    for (const Incidence& inc : g.incident(v))
      if (state[static_cast<std::size_t>(inc.neighbor)] != 1) ++residual[static_cast<std::size_t>(inc.neighbor)];
    taken.pop_back();
    state[static_cast<std::size_t>(v)] = 2;
    self(self, covered);
    state[static_cast<std::size_t>(v)] = 0;
  };
  branch(branch, 0);

  // Fill up to exactly k vertices with the lowest unused ids.
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : best_set) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < n && static_cast<std::int64_t>(best_set.size()) < k; ++v)
    if (!in[static_cast<std::size_t>(v)]) best_set.push_back(v);
  std::sort(best_set.begin(), best_set.end());
  result.optimum = covered_edge_count(g, best_set);
  result.certificate = best_set;
  return result;
}

OracleResult fpt_mmei_bipartite(const WeightedGraph& g, std::int64_t b, std::int64_t m) {
  require_bipartite(g);
  if (!g.unit_weights() || !g.unit_costs())
    throw ValidationError("bipartite MMEI solver needs unit weights and costs");
  if (b < 0 || m < 0) throw ValidationError("parameters must be non-negative");
  OracleResult result;
  for (std::int64_t k = 0; k <= g.num_vertices(); ++k) {
    const OracleResult cover = pvc_bipartite(g, k);
    result.nodes += cover.nodes;
    if (g.num_edges() - cover.optimum.value() > b) continue;
    const VertexSet& chosen = std::get<VertexSet>(cover.certificate);
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : chosen) in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> uncovered;
    for (int e = 0; e < g.num_edges(); ++e)
      if (!in[static_cast<std::size_t>(g.edge(e).u)] && !in[static_cast<std::size_t>(g.edge(e).v)]) uncovered.push_back(e);
    BitSet removed(static_cast<std::size_t>(g.num_edges()));
    for (int e : uncovered) removed.set(static_cast<std::size_t>(e));
    result.optimum = max_matching(g, removed);
    result.certificate = make_edge_set(g, std::move(uncovered));
    result.decision = result.optimum <= ExtendedWeight(m);
    result.stats["coverSize"] = k;
    result.stats["cover"] = nlohmann::json::array();
    for (Vertex v : chosen) result.stats["cover"].push_back(v + 1);
    return result;
  }
  throw ValidationError("no partial cover found");  // unreachable: k = n covers every edge
}

}  // namespace interdict
