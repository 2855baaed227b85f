#include "interdict/kernel.hpp"

#include <algorithm>
#include <map>

#include "interdict/algorithms.hpp"
#include "interdict/io.hpp"

namespace interdict {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Vertex deletions on a fixed original graph.
class Workspace {
 public:
  explicit Workspace(const WeightedGraph& g)
      : g_(g), alive_(static_cast<std::size_t>(g.num_vertices()), 1), degree_(static_cast<std::size_t>(g.num_vertices())) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Incidence& inc : g_.incident(v))
      if (alive(inc.neighbor)) out.push_back(inc.neighbor);
    std::sort(out.begin(), out.end());
    return out;
  }

  void remove(Vertex v) {
    if (!alive(v)) throw ValidationError("vertex " + std::to_string(v + 1) + " removed twice");
    alive_[static_cast<std::size_t>(v)] = 0;
    for (const Incidence& inc : g_.incident(v))
      if (alive(inc.neighbor)) --degree_[static_cast<std::size_t>(inc.neighbor)];
  }

  std::vector<Vertex> survivors() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (alive(v)) out.push_back(v);
    return out;
  }

  WeightedGraph induced(std::vector<Vertex>* map_out = nullptr) const {
    const std::vector<Vertex> keep = survivors();
    std::vector<int> index(static_cast<std::size_t>(g_.num_vertices()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g_.edges())
      if (alive(e.u) && alive(e.v))
        edges.push_back({index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)], e.weight, e.cost});
    std::optional<std::vector<Side>> sides;
    if (g_.bipartition()) {
      sides.emplace();
      for (Vertex v : keep) sides->push_back(g_.side(v));
    }
    if (map_out) *map_out = keep;
    return WeightedGraph(static_cast<int>(keep.size()), std::move(edges), std::move(sides));
  }

  // Rule 1 at the lowest vertex with too many pendant neighbors.
  bool rule1_step(std::int64_t keep, std::vector<KernelStep>& steps) {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!alive(v)) continue;
      std::vector<Vertex> pendants;
      for (Vertex w : neighbors(v))
        if (degree(w) == 1) pendants.push_back(w);
      if (static_cast<std::int64_t>(pendants.size()) <= keep) continue;
      KernelStep step;
      step.rule = 1;
      step.anchor = {v};
      step.kept.assign(pendants.begin(), pendants.begin() + keep);
      step.removed.assign(pendants.begin() + keep, pendants.end());
      for (Vertex w : step.removed) remove(w);
      steps.push_back(std::move(step));
      return true;
    }
    return false;
  }

  // Rule 2 on the first (by lowest member) class of vertices sharing the
  // same non-empty open neighborhood U with |W| > max(|U|, b+1). Such a
  // class is independent, fully joined to U and disjoint from it.
  bool rule2_step(std::int64_t b, std::vector<KernelStep>& steps) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (alive(v) && degree(v) > 0) classes[neighbors(v)].push_back(v);
    const std::pair<const std::vector<Vertex>, std::vector<Vertex>>* best = nullptr;
    for (const auto& entry : classes) {
      const std::int64_t limit = std::max<std::int64_t>(static_cast<std::int64_t>(entry.first.size()), b + 1);
      if (static_cast<std::int64_t>(entry.second.size()) <= limit) continue;
      if (!best || entry.second.front() < best->second.front()) best = &entry;
    }
    if (!best) return false;
    const std::int64_t limit = std::max<std::int64_t>(static_cast<std::int64_t>(best->first.size()), b + 1);
    KernelStep step;
    step.rule = 2;
    step.anchor = best->first;
    step.kept.assign(best->second.begin(), best->second.begin() + limit);
    step.removed.assign(best->second.begin() + limit, best->second.end());
    for (Vertex w : step.removed) remove(w);
    steps.push_back(std::move(step));
    return true;
  }

 private:
  const WeightedGraph& g_;
  std::vector<char> alive_;
  std::vector<int> degree_;
};

void require_unit(const WeightedGraph& g) {
  if (!g.unit_weights() || !g.unit_costs())
    throw ValidationError("kernelization needs unit edge weights and interdiction costs");
}

std::int64_t rule1_keep(std::int64_t b, Rule1Mode mode) { return mode == Rule1Mode::safe ? b + 1 : b; }

nlohmann::json one_based(const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string_view verdict_name(KernelVerdict verdict) {
  switch (verdict) {
    case KernelVerdict::yes: return "yes";
    case KernelVerdict::no: return "no";
    case KernelVerdict::reduced: return "reduced";
  }
  return "reduced";
}

std::int64_t kernel_l(std::int64_t b, std::int64_t m) {
  std::int64_t l = m;
  for (std::int64_t i = 1; i <= m; ++i) l += (std::int64_t{1} << i) * binomial(m, i) * std::max(i, b + 1);
  return l;
}

std::int64_t kernel_bound(std::int64_t b, std::int64_t m) {
  return b + 4 * m * m + 2 * b * m + 4 * b * m + kernel_l(b, m) * m;
}

std::int64_t kernel_bound_closing(std::int64_t b, std::int64_t m) {
  return kernel_l(b, m) * m + 4 * b * m + 4 * m * m;
}

std::pair<WeightedGraph, bool> rule1(const WeightedGraph& g, std::int64_t b, Rule1Mode mode) {
  require_unit(g);
  Workspace ws(g);
  std::vector<KernelStep> steps;
  while (ws.rule1_step(rule1_keep(b, mode), steps)) {
  }
  return {ws.induced(), !steps.empty()};
}

std::pair<WeightedGraph, bool> rule2(const WeightedGraph& g, std::int64_t b) {
  require_unit(g);
  Workspace ws(g);
  std::vector<KernelStep> steps;
  while (ws.rule2_step(b, steps)) {
  }
  return {ws.induced(), !steps.empty()};
}

KernelResult kernelize(const WeightedGraph& g, std::int64_t b, std::int64_t m, Rule1Mode mode) {
  require_unit(g);
  if (b < 0 || m < 0) throw ValidationError("kernel parameters must be non-negative");
  KernelResult out;
  out.original = g;
  out.b = b;
  out.m = m;
  out.mode = mode;
  Workspace ws(g);
  for (bool changed = true; changed;) {
    changed = false;
    while (ws.rule1_step(rule1_keep(b, mode), out.steps)) changed = true;
    while (ws.rule2_step(b, out.steps)) changed = true;
  }
  out.kernel = ws.induced(&out.vertex_map);
  out.bound = kernel_bound(b, m);
  out.closing_bound = kernel_bound_closing(b, m);
  const std::int64_t edges = out.kernel.num_edges();
  if (edges > out.bound)
    out.verdict = KernelVerdict::no;
  else if (edges <= b || max_matching(out.kernel) <= m)
    out.verdict = KernelVerdict::yes;
  else
    out.verdict = KernelVerdict::reduced;
  return out;
}

nlohmann::json KernelResult::trace() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const KernelStep& s : steps)
    steps_json.push_back({{"rule", s.rule}, {"anchor", one_based(s.anchor)}, {"kept", one_based(s.kept)},
                          {"removed", one_based(s.removed)}});
  return {{"b", b},
          {"m", m},
          {"rule1Mode", mode == Rule1Mode::safe ? "safe" : "literal"},
          {"original", graph_to_json(original)},
          {"steps", std::move(steps_json)},
          {"before", {{"vertices", original.num_vertices()}, {"edges", original.num_edges()}}},
          {"after", {{"vertices", kernel.num_vertices()}, {"edges", kernel.num_edges()}}},
          {"vertexMap", one_based(vertex_map)},
          {"kernel", graph_to_json(kernel)},
          {"bound", bound},
          {"closingBound", closing_bound},
          {"withinBound", kernel.num_edges() <= bound},
          {"verdict", verdict_name(verdict)}};
}

WeightedGraph replay_kernel(const nlohmann::json& trace) {
  const WeightedGraph original = expect_weighted(parse_graph_json(trace.at("original")));
  const std::int64_t b = trace.at("b").get<std::int64_t>();
  const Rule1Mode mode = trace.value("rule1Mode", "safe") == "literal" ? Rule1Mode::literal : Rule1Mode::safe;
  const int n = original.num_vertices();
  auto ids = [n](const nlohmann::json& list) {
    std::vector<Vertex> out;
    for (const auto& id : list) {
      const int v = id.get<int>() - 1;
      if (v < 0 || v >= n) throw ValidationError("replay: vertex id out of range");
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  Workspace ws(original);
  int index = 0;
  for (const auto& step : trace.at("steps")) {
    ++index;
    const std::vector<Vertex> anchor = ids(step.at("anchor"));
    const std::vector<Vertex> kept = ids(step.at("kept"));
    const std::vector<Vertex> removed = ids(step.at("removed"));
    std::vector<Vertex> members = kept;
    members.insert(members.end(), removed.begin(), removed.end());
    std::sort(members.begin(), members.end());
    // Recompute the class the rule acts on and compare.
    std::vector<Vertex> expected;
    std::int64_t keep = 0;
    const int rule = step.at("rule").get<int>();
    if (rule == 1 && anchor.size() == 1 && ws.alive(anchor[0])) {
      for (Vertex w : ws.neighbors(anchor[0]))
        if (ws.degree(w) == 1) expected.push_back(w);
      keep = rule1_keep(b, mode);
    } else if (rule == 2 && !anchor.empty()) {
      for (Vertex v = 0; v < n; ++v)
        if (ws.alive(v) && ws.degree(v) > 0 && ws.neighbors(v) == anchor) expected.push_back(v);
      keep = std::max<std::int64_t>(static_cast<std::int64_t>(anchor.size()), b + 1);
    }
    if (expected.empty() || members != expected || static_cast<std::int64_t>(kept.size()) != keep ||
        removed.empty())
      throw ValidationError("replay: step " + std::to_string(index) + " is not a valid rule application");
    for (Vertex v : removed) ws.remove(v);
  }
  WeightedGraph kernel = ws.induced();
  if (trace.contains("kernel") && expect_weighted(parse_graph_json(trace.at("kernel"))) != kernel)
    throw ValidationError("replay: recorded kernel differs from the replayed one");
  return kernel;
}

}  // namespace interdict
