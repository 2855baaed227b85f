#include "interdict/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>

namespace interdict {

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("INTERDICT_CAP_EDGES")) caps.max_edges = std::atoi(env);
  if (const char* env = std::getenv("INTERDICT_CAP_VERTICES")) caps.max_vertices = std::atoi(env);
  if (caps.max_edges < 0 || caps.max_edges > 62 || caps.max_vertices < 0 || caps.max_vertices > 62)
    throw ValidationError("caps must lie in 0..62");
  return caps;
}

std::uint64_t Caps::edge_subset_limit() const { return std::uint64_t{1} << max_edges; }
std::uint64_t Caps::vertex_subset_limit() const { return std::uint64_t{1} << max_vertices; }

std::uint64_t binomial_prefix_sum(int n, int k, std::uint64_t limit) {
  unsigned __int128 term = 1;
  unsigned __int128 total = 0;
  for (int i = 0; i <= std::min(n, k); ++i) {
    if (i > 0) term = term * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    total += term;
    if (total > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

struct Item {
  std::vector<int> edges;
  std::int64_t cost = 0;
};

struct Node {
  ExtendedWeight value;
  std::vector<char> support;  // empty: any removal may change the value
};

using NodePtr = std::shared_ptr<const Node>;

struct SearchSpec {
  std::vector<Item> items;
  std::int64_t budget = 0;
  bool maximize = false;
  ExtendedWeight ideal;
  std::uint64_t limit = 0;
  std::string what;
};

struct SearchOutcome {
  ExtendedWeight best;
  std::vector<int> edges;
  std::vector<ExtendedWeight> level_best;
  std::int64_t nodes = 0;
};

// Visits item subsets level by level (by item count), lexicographically within
// a level, so the first optimum found is the smallest and lexicographically
// first. A child whose added item misses the parent's support reuses the
// parent's value.
class LevelSearch {
 public:
  using Evaluate = std::function<Node(const BitSet&)>;

  LevelSearch(SearchSpec spec, Evaluate evaluate)
      : spec_(std::move(spec)), evaluate_(std::move(evaluate)) {}

  SearchOutcome run() {
    std::vector<std::int64_t> costs;
    for (const Item& item : spec_.items) costs.push_back(item.cost);
    std::sort(costs.begin(), costs.end());
    int max_level = 0;
    std::int64_t spent = 0;
    for (std::int64_t c : costs) {
      if (spent + c > spec_.budget) break;
      spent += c;
      ++max_level;
    }
    if (spec_.budget < 0) max_level = -1;
    const std::uint64_t visits =
        binomial_prefix_sum(static_cast<int>(spec_.items.size()), max_level, spec_.limit);
    if (visits > spec_.limit)
      throw CapExceeded("enumeration cap: " + spec_.what + " would visit more than " +
                        std::to_string(spec_.limit) + " subsets");

    const NodePtr root = std::make_shared<Node>(evaluate_(removed_));
    out_.nodes = 1;
    out_.best = root->value;
    out_.level_best.push_back(root->value);
    if (root->value == spec_.ideal) return out_;
    for (int level = 1; level <= max_level && !stop_; ++level) {
      level_ = level;
      have_level_best_ = false;
      dfs(0, 0, 0, root);
      out_.level_best.push_back(have_level_best_ ? level_best_ : out_.level_best.back());
    }
    return out_;
  }

 private:
  bool better(const ExtendedWeight& a, const ExtendedWeight& b) const {
    return spec_.maximize ? a > b : a < b;
  }

  void dfs(int depth, std::size_t start, std::int64_t cost, const NodePtr& node) {
    if (depth == level_) {
      ++out_.nodes;
      if (!have_level_best_ || better(node->value, level_best_)) {
        level_best_ = node->value;
        have_level_best_ = true;
      }
      if (better(node->value, out_.best)) {
        out_.best = node->value;
        out_.edges.clear();
        for (std::size_t i : chosen_)
          out_.edges.insert(out_.edges.end(), spec_.items[i].edges.begin(), spec_.items[i].edges.end());
        std::sort(out_.edges.begin(), out_.edges.end());
        if (out_.best == spec_.ideal) stop_ = true;
      }
      return;
    }
    const std::size_t remaining = static_cast<std::size_t>(level_ - depth);
    for (std::size_t i = start; i + remaining <= spec_.items.size() && !stop_; ++i) {
      const Item& item = spec_.items[i];
      if (cost + item.cost > spec_.budget) continue;
      bool touches = node->support.empty();
      for (int e : item.edges) {
        removed_.set(static_cast<std::size_t>(e));
        if (!touches && node->support[static_cast<std::size_t>(e)]) touches = true;
      }
      chosen_.push_back(i);
      if (touches)
        dfs(depth + 1, i + 1, cost + item.cost, std::make_shared<Node>(evaluate_(removed_)));
      else
        dfs(depth + 1, i + 1, cost + item.cost, node);
      chosen_.pop_back();
      for (int e : item.edges) removed_.reset(static_cast<std::size_t>(e));
    }
  }

  SearchSpec spec_;
  Evaluate evaluate_;
  BitSet removed_;
  std::vector<std::size_t> chosen_;
  SearchOutcome out_;
  int level_ = 0;
  bool stop_ = false;
  bool have_level_best_ = false;
  ExtendedWeight level_best_;
};

std::vector<Item> unit_items(int count, const std::function<std::int64_t(int)>& cost) {
  std::vector<Item> items;
  items.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) items.push_back({{i}, cost(i)});
  return items;
}

std::vector<char> membership(std::size_t size, const std::vector<int>& members) {
  std::vector<char> flags(size, 0);
  for (int i : members) flags[static_cast<std::size_t>(i)] = 1;
  return flags;
}

OracleResult edge_result(const WeightedGraph& g, const SearchOutcome& outcome) {
  OracleResult result;
  result.optimum = outcome.best;
  result.certificate = make_edge_set(g, outcome.edges);
  result.nodes = outcome.nodes;
  return result;
}

// Advances a sorted index combination; false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

OracleResult infeasible_vertex_result() {
  OracleResult result;
  result.optimum = ExtendedWeight::infinity();
  result.certificate = VertexSet{};
  result.feasible = false;
  return result;
}

}  // namespace

OracleResult oracle_mve(const WeightedGraph& g, std::int64_t b, const Caps& caps) {
  SearchSpec spec;
  spec.items = unit_items(g.num_edges(), [](int) { return 1; });
  spec.budget = b;
  spec.maximize = true;
  spec.ideal = ExtendedWeight::infinity();
  spec.limit = caps.edge_subset_limit();
  spec.what = "mve";
  LevelSearch search(std::move(spec), [&](const BitSet& removed) {
    const auto forest = minimum_spanning_forest(g, removed);
    Node node;
    node.value = mst_weight(g, removed);
    node.support = membership(static_cast<std::size_t>(g.num_edges()), forest);
    return node;
  });
  return edge_result(g, search.run());
}

OracleResult oracle_mmei(const WeightedGraph& g, std::int64_t b, const Caps& caps) {
  // A matching uses at most one of several equal-weight pendant edges at a
  // vertex, so those are deleted all together or not at all.
  std::map<std::pair<Vertex, std::int64_t>, std::vector<int>> classes;
  std::vector<Item> items;
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    Vertex center = -1;
    if (g.degree(e.u) == 1 && g.degree(e.v) > 1) center = e.v;
    if (g.degree(e.v) == 1 && g.degree(e.u) > 1) center = e.u;
    if (center >= 0)
      classes[{center, e.weight}].push_back(i);
    else
      items.push_back({{i}, e.cost});
  }
  for (auto& [key, members] : classes) {
    Item item;
    for (int i : members) item.cost += g.edge(i).cost;
    item.edges = std::move(members);
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.edges.front() < b.edges.front(); });

  SearchSpec spec;
  spec.items = std::move(items);
  spec.budget = b;
  spec.ideal = 0;
  spec.limit = caps.edge_subset_limit();
  spec.what = "mmei";
  LevelSearch search(std::move(spec), [&](const BitSet& removed) {
    const auto matching = max_matching_edges(g, removed);
    Node node;
    std::int64_t value = 0;
    for (int i : matching) value += g.edge(i).weight;
    node.value = value;
    node.support = membership(static_cast<std::size_t>(g.num_edges()), matching);
    return node;
  });
  return edge_result(g, search.run());
}

OracleResult oracle_fei(const FlowNetwork& net, std::int64_t b, const Caps& caps) {
  SearchSpec spec;
  spec.items = unit_items(net.num_arcs(), [&](int i) { return net.arc(i).cost; });
  spec.budget = b;
  spec.ideal = 0;
  spec.limit = caps.edge_subset_limit();
  spec.what = "fei";
  LevelSearch search(std::move(spec), [&](const BitSet& removed) {
    const FlowResult flow = max_flow(net, removed);
    Node node;
    node.value = flow.value;
    node.support.assign(static_cast<std::size_t>(net.num_arcs()), 0);
    for (int i = 0; i < net.num_arcs(); ++i)
      node.support[static_cast<std::size_t>(i)] = flow.arc_flow[static_cast<std::size_t>(i)] > 0;
    return node;
  });
  const SearchOutcome outcome = search.run();
  OracleResult result;
  result.optimum = outcome.best;
  result.certificate = make_arc_set(net, outcome.edges);
  result.nodes = outcome.nodes;
  return result;
}

OracleResult oracle_mmmei(const WeightedGraph& g, std::int64_t b, const Caps& caps) {
  SearchSpec spec;
  spec.items = unit_items(g.num_edges(), [](int) { return 1; });
  spec.budget = b;
  spec.ideal = 0;
  spec.limit = caps.edge_subset_limit();
  spec.what = "mmmei";
  LevelSearch search(std::move(spec), [&](const BitSet& removed) {
    return Node{ExtendedWeight(min_maximal_matching(g, removed)), {}};
  });
  return edge_result(g, search.run());
}

OracleResult oracle_peds(const WeightedGraph& g, std::int64_t k, DominationMode mode,
                         const Caps& caps) {
  // Upper bound for early exit: each chosen edge reaches deg(u) + deg(v) - 1
  // edges including itself.
  std::vector<std::int64_t> reach;
  for (const Edge& e : g.edges())
    reach.push_back(g.degree(e.u) + g.degree(e.v) - (mode == DominationMode::inclusive ? 1 : 2));
  std::sort(reach.rbegin(), reach.rend());
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < reach.size() && static_cast<std::int64_t>(i) < k; ++i) bound += reach[i];
  bound = std::min<std::int64_t>(bound, g.num_edges());

  SearchSpec spec;
  spec.items = unit_items(g.num_edges(), [](int) { return 1; });
  spec.budget = k;
  spec.maximize = true;
  spec.ideal = bound;
  spec.limit = caps.edge_subset_limit();
  spec.what = "peds";
  LevelSearch search(std::move(spec), [&](const BitSet& chosen) {
    return Node{ExtendedWeight(domination_count(g, chosen.indices(), mode)), {}};
  });
  return edge_result(g, search.run());
}

OracleResult oracle_kway(const WeightedGraph& g, std::int64_t s, const Caps& caps) {
  SearchSpec spec;
  spec.items = unit_items(g.num_edges(), [](int) { return 1; });
  spec.budget = s;
  spec.maximize = true;
  spec.ideal = g.num_vertices();
  spec.limit = caps.edge_subset_limit();
  spec.what = "kway";
  LevelSearch search(std::move(spec), [&](const BitSet& removed) {
    return Node{ExtendedWeight(components(g, removed).count), {}};
  });
  const SearchOutcome outcome = search.run();
  OracleResult result = edge_result(g, outcome);
  auto profile = nlohmann::json::array();
  std::int64_t best = 0;
  for (std::int64_t i = 0; i <= s; ++i) {
    if (static_cast<std::size_t>(i) < outcome.level_best.size())
      best = std::max(best, outcome.level_best[static_cast<std::size_t>(i)].value());
    else
      best = std::max(best, outcome.best.value());
    profile.push_back(best);
  }
  result.stats["profile"] = std::move(profile);
  return result;
}

OracleResult oracle_pvc(const WeightedGraph& g, std::int64_t k, const Caps& caps) {
  const int n = g.num_vertices();
  if (k > n) return infeasible_vertex_result();
  if (binomial_prefix_sum(n, static_cast<int>(k), caps.vertex_subset_limit()) > caps.vertex_subset_limit())
    throw CapExceeded("enumeration cap: pvc over " + std::to_string(n) + " vertices");
  OracleResult result;
  std::vector<int> idx = first_combination(static_cast<int>(k));
  std::int64_t best = -1;
  do {
    ++result.nodes;
    const std::int64_t covered = covered_edge_count(g, idx);
    if (covered > best) {
      best = covered;
      result.certificate = VertexSet(idx.begin(), idx.end());
      if (best == g.num_edges()) break;
    }
  } while (next_combination(idx, n));
  result.optimum = best;
  return result;
}

namespace {

OracleResult side_constrained(const WeightedGraph& g, std::int64_t k1, std::int64_t k2,
                              bool maximize_cover, const Caps& caps) {
  const auto sides = sides_of(g);
  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  for (int v = 0; v < g.num_vertices(); ++v)
    (sides[static_cast<std::size_t>(v)] == Side::X ? xs : ys).push_back(v);
  if (k1 > static_cast<std::int64_t>(xs.size()) || k2 > static_cast<std::int64_t>(ys.size()))
    return infeasible_vertex_result();
  const std::uint64_t limit = caps.vertex_subset_limit();
  const unsigned __int128 visits =
      static_cast<unsigned __int128>(binomial_prefix_sum(static_cast<int>(xs.size()), static_cast<int>(k1), limit)) *
      binomial_prefix_sum(static_cast<int>(ys.size()), static_cast<int>(k2), limit);
  if (visits > limit)
    throw CapExceeded("enumeration cap: side-constrained search over " +
                      std::to_string(xs.size()) + "+" + std::to_string(ys.size()) + " vertices");
  OracleResult result;
  std::int64_t best = -1;
  std::vector<int> ix = first_combination(static_cast<int>(k1));
  do {
    std::vector<int> iy = first_combination(static_cast<int>(k2));
    do {
      ++result.nodes;
      VertexSet chosen;
      for (int i : ix) chosen.push_back(xs[static_cast<std::size_t>(i)]);
      for (int i : iy) chosen.push_back(ys[static_cast<std::size_t>(i)]);
      std::sort(chosen.begin(), chosen.end());
      const std::int64_t value =
          maximize_cover ? covered_edge_count(g, chosen) : induced_edge_count(g, chosen);
      if (best < 0 || (maximize_cover ? value > best : value < best)) {
        best = value;
        result.certificate = chosen;
      }
    } while (next_combination(iy, static_cast<int>(ys.size())));
  } while (next_combination(ix, static_cast<int>(xs.size())));
  result.optimum = best;
  return result;
}

// Maximum independent set in the graph given by `adj` bitmasks.
OracleResult max_independent(const std::vector<std::uint64_t>& adj, const Caps& caps) {
  const int n = static_cast<int>(adj.size());
  if (n > caps.max_vertices || n > 62)
    throw CapExceeded("enumeration cap: independent-set search over " + std::to_string(n) + " vertices");
  OracleResult result;
  std::uint64_t best_set = 0;
  int best_size = 0;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int v, std::uint64_t chosen, std::uint64_t blocked, int size) -> void {
    ++result.nodes;
    if (size + (n - v) <= best_size) return;
    if (v == n) {
      best_size = size;
      best_set = chosen;
      return;
    }
    if (!((blocked >> v) & 1U))
      self(self, v + 1, chosen | (std::uint64_t{1} << v), blocked | adj[static_cast<std::size_t>(v)], size + 1);
    self(self, v + 1, chosen, blocked, size);
  };
  rec(rec, 0, 0, 0, 0);
  VertexSet vs;
  for (int v = 0; v < n; ++v)
    if ((best_set >> v) & 1U) vs.push_back(v);
  result.optimum = best_size;
  result.certificate = vs;
  return result;
}

}  // namespace

OracleResult oracle_kss(const WeightedGraph& g, std::int64_t k1, std::int64_t k2, const Caps& caps) {
  return side_constrained(g, k1, k2, false, caps);
}

OracleResult oracle_kkpvc(const WeightedGraph& g, std::int64_t k1, std::int64_t k2, const Caps& caps) {
  return side_constrained(g, k1, k2, true, caps);
}

OracleResult oracle_independent_set(const WeightedGraph& g, const Caps& caps) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return max_independent(adj, caps);
}

OracleResult oracle_clique(const WeightedGraph& g, const Caps& caps) {
  const int n = g.num_vertices();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  return max_independent(adj, caps);
}

OracleResult solve_oracle(const ProblemInstance& inst, const Caps& caps) {
  inst.validate();
  OracleResult result;
  switch (inst.kind) {
    case ProblemKind::MVE:
      result = oracle_mve(inst.weighted(), inst.param("b"), caps);
      break;
    case ProblemKind::MMEI:
      result = oracle_mmei(inst.weighted(), inst.param("b"), caps);
      break;
    case ProblemKind::FEI:
      result = oracle_fei(inst.network(), inst.param("b"), caps);
      break;
    case ProblemKind::MMMEI:
      result = oracle_mmmei(inst.weighted(), inst.param("b"), caps);
      break;
    case ProblemKind::PVC:
      result = oracle_pvc(inst.weighted(), inst.param("k"), caps);
      break;
    case ProblemKind::PEDS:
      result = oracle_peds(inst.weighted(), inst.param("k"), inst.mode, caps);
      break;
    case ProblemKind::KKPVC:
      result = oracle_kkpvc(inst.weighted(), inst.param("k1"), inst.param("k2"), caps);
      break;
    case ProblemKind::KSS:
      result = oracle_kss(inst.weighted(), inst.param("k1"), inst.param("k2"), caps);
      break;
    case ProblemKind::KWAY:
      result = oracle_kway(inst.weighted(), inst.param("s"), caps);
      break;
    case ProblemKind::IS:
      result = oracle_independent_set(inst.weighted(), caps);
      break;
    case ProblemKind::CLIQUE:
      result = oracle_clique(inst.weighted(), caps);
      break;
  }
  result.decision = result.feasible && decide(inst, result.optimum);
  return result;
}

}  // namespace interdict
