#include "interdict/reduction.hpp"

#include <algorithm>

#include "interdict/conflict_graph.hpp"

namespace interdict {

namespace {

const EdgeSet& edges_of(const Certificate& cert) {
  if (const auto* set = std::get_if<EdgeSet>(&cert)) return *set;
  throw ValidationError("expected an edge certificate");
}

const VertexSet& vertices_of(const Certificate& cert) {
  if (const auto* set = std::get_if<VertexSet>(&cert)) return *set;
  throw ValidationError("expected a vertex certificate");
}

BitSet removed_of(const EdgeSet& set) {
  BitSet removed;
  for (int i : set.edges) removed.set(static_cast<std::size_t>(i));
  return removed;
}

void require_unit(const WeightedGraph& g, const char* what) {
  if (!g.unit_weights() || !g.unit_costs())
    throw ValidationError(std::string(what) + " needs unit weights and costs");
}

WeightedGraph with_sides(const WeightedGraph& g) { return g.with_bipartition(sides_of(g)); }

// Single edge with X = {1}, Y = {2}.
WeightedGraph single_edge() { return WeightedGraph(2, {{0, 1, 1, 1}}, std::vector<Side>{Side::X, Side::Y}); }

ProblemInstance trivial_no(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MMEI:
      return make_instance(kind, single_edge(), {{"b", 0}, {"m", 0}});
    case ProblemKind::MMMEI:
      return make_instance(kind, single_edge(), {{"b", 0}, {"r", 0}});
    case ProblemKind::KKPVC:
      return make_instance(kind, single_edge(), {{"k1", 2}, {"k2", 0}, {"x", 0}});
    case ProblemKind::PVC:
      return make_instance(kind, single_edge(), {{"k", 3}, {"x", 0}});
    default:
      throw std::logic_error("no trivial instance for this kind");
  }
}

Certificate unused_map(const Certificate&) {
  throw ValidationError("witness maps are undefined for a trivial no-instance");
}

Reduction trivial_reduction(std::string name, ProblemInstance source, ProblemKind target,
                            nlohmann::json param_map) {
  Reduction red;
  red.name = std::move(name);
  red.source = std::move(source);
  red.target = trivial_no(target);
  red.param_map = std::move(param_map);
  red.param_map["trivialNo"] = true;
  red.trivial_target = true;
  red.forward = unused_map;
  red.backward = unused_map;
  return red;
}

// Pads a vertex set with the lowest unused ids until it has k members.
VertexSet pad_to(VertexSet vs, std::int64_t k, int n) {
  std::sort(vs.begin(), vs.end());
  for (Vertex v = 0; v < n && static_cast<std::int64_t>(vs.size()) < k; ++v)
    if (!std::binary_search(vs.begin(), vs.end(), v)) {
      vs.push_back(v);
      std::sort(vs.begin(), vs.end());
    }
  return vs;
}

EdgeSet uncovered_edges(const WeightedGraph& g, const VertexSet& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : cover) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!in[static_cast<std::size_t>(g.edge(i).u)] && !in[static_cast<std::size_t>(g.edge(i).v)]) out.push_back(i);
  return make_edge_set(g, std::move(out));
}

EdgeSet undominated_edges(const WeightedGraph& g, const std::vector<int>& chosen) {
  std::vector<char> touched(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int i : chosen) touched[static_cast<std::size_t>(g.edge(i).u)] = touched[static_cast<std::size_t>(g.edge(i).v)] = 1;
  std::vector<int> out;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!touched[static_cast<std::size_t>(g.edge(i).u)] && !touched[static_cast<std::size_t>(g.edge(i).v)]) out.push_back(i);
  return make_edge_set(g, std::move(out));
}

}  // namespace

std::vector<int> minimum_edge_dominating_set(const WeightedGraph& g, const BitSet& removed) {
  std::vector<int> active;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!removed.test(static_cast<std::size_t>(i))) active.push_back(i);
  const int m = static_cast<int>(active.size());
  if (m > 24) throw CapExceeded("enumeration cap: edge dominating set over " + std::to_string(m) + " edges");
  auto dominates = [&](const std::vector<int>& chosen) {
    return domination_count(g, chosen, DominationMode::inclusive, removed) == m;
  };
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> chosen;
      for (int i : idx) chosen.push_back(active[static_cast<std::size_t>(i)]);
      if (dominates(chosen)) return chosen;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return active;
}

Reduction red_kway_to_mve(const WeightedGraph& g, std::int64_t s, std::int64_t k, GadgetPairs pairs) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 0, 1});
  int next = n;
  int gadgets = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (pairs == GadgetPairs::non_adjacent && g.adjacent(u, v)) continue;
      ++gadgets;
      const int first = next;
      next += static_cast<int>(s) + 1;
      for (int c = first; c < next; ++c) {
        for (int d = c + 1; d < next; ++d) edges.push_back({c, d, 0, 1});
        edges.push_back({u, c, 1, 1});
        edges.push_back({v, c, 0, 1});
      }
    }
  }
  Reduction red;
  red.name = "kway-to-mve";
  red.source = make_instance(ProblemKind::KWAY, g, {{"s", s}, {"k", k}});
  WeightedGraph target(next, std::move(edges));
  red.target = make_instance(ProblemKind::MVE, target, {{"b", s}, {"r", std::max<std::int64_t>(k - 1, 0)}});
  red.param_map = {{"b", "s"}, {"r", "k-1"}, {"gadgets", gadgets},
                   {"gadgetPairs", pairs == GadgetPairs::all ? "all" : "non-adjacent"}};
  red.forward = [g, target](const Certificate& cert) -> Certificate {
    std::vector<int> out;
    for (int i : edges_of(cert).edges) out.push_back(*target.find_edge(g.edge(i).u, g.edge(i).v));
    return make_edge_set(target, std::move(out));
  };
  red.backward = [g, target, n](const Certificate& cert) -> Certificate {
    std::vector<int> out;
    for (int i : edges_of(cert).edges) {
      const Edge& e = target.edge(i);
      if (e.u < n && e.v < n) out.push_back(*g.find_edge(e.u, e.v));
    }
    return make_edge_set(g, std::move(out));
  };
  return red;
}

Reduction red_pvc_to_mmei(const WeightedGraph& g, std::int64_t k, std::int64_t x) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const std::int64_t b = static_cast<std::int64_t>(m) * (n - k) + m - x;
  auto source = make_instance(ProblemKind::PVC, g, {{"k", k}, {"x", x}});
  nlohmann::json param_map = {{"b", "|E|(|V|-k)+|E|-x"}, {"m", "k"}, {"bValue", b}};
  if (k > n || b < 0)
    return trivial_reduction("pvc-to-mmei", std::move(source), ProblemKind::MMEI, std::move(param_map));

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1, 1});
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < m; ++j) edges.push_back({v, n + v * m + j, 1, 1});
  WeightedGraph target(n + n * m, std::move(edges));

  Reduction red;
  red.name = "pvc-to-mmei";
  red.source = std::move(source);
  red.target = make_instance(ProblemKind::MMEI, target, {{"b", b}, {"m", k}});
  red.param_map = std::move(param_map);
  red.forward = [g, target, n, m](const Certificate& cert) -> Certificate {
    const VertexSet& cover = vertices_of(cert);
    std::vector<int> out;
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(cover.begin(), cover.end(), v) != cover.end()) continue;
      for (int j = 0; j < m; ++j) out.push_back(*target.find_edge(v, n + v * m + j));
    }
    for (int i : uncovered_edges(g, cover).edges)
      out.push_back(*target.find_edge(g.edge(i).u, g.edge(i).v));
    return make_edge_set(target, std::move(out));
  };
  red.backward = [target, n, m, k](const Certificate& cert) -> Certificate {
    const BitSet removed = removed_of(edges_of(cert));
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v) {
      for (int j = 0; j < m; ++j) {
        if (!removed.test(static_cast<std::size_t>(*target.find_edge(v, n + v * m + j)))) {
          keep.push_back(v);
          break;
        }
      }
    }
    return pad_to(std::move(keep), k, n);
  };
  return red;
}

Reduction equiv_pvc_to_mmei_bipartite(const WeightedGraph& g0, std::int64_t k, std::int64_t x) {
  require_unit(g0, "mmei-pvc-bipartite");
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  auto source = make_instance(ProblemKind::PVC, g, {{"k", k}, {"x", x}});
  nlohmann::json param_map = {{"b", "|E|-x"}, {"m", "k"}};
  if (k > n || x > m)
    return trivial_reduction("mmei-pvc-bipartite", std::move(source), ProblemKind::MMEI, std::move(param_map));
  Reduction red;
  red.name = "mmei-pvc-bipartite";
  red.source = std::move(source);
  red.target = make_instance(ProblemKind::MMEI, g, {{"b", m - x}, {"m", k}});
  red.param_map = std::move(param_map);
  red.forward = [g](const Certificate& cert) -> Certificate { return uncovered_edges(g, vertices_of(cert)); };
  red.backward = [g, k, n](const Certificate& cert) -> Certificate {
    return pad_to(minimum_vertex_cover_bipartite(g, removed_of(edges_of(cert))), k, n);
  };
  return red;
}

Reduction equiv_mmei_to_pvc_bipartite(const WeightedGraph& g0, std::int64_t b, std::int64_t m) {
  require_unit(g0, "mmei-pvc-bipartite");
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  const std::int64_t k = std::min<std::int64_t>(m, n);
  Reduction red;
  red.name = "mmei-pvc-bipartite:reverse";
  red.source = make_instance(ProblemKind::MMEI, g, {{"b", b}, {"m", m}});
  red.target = make_instance(ProblemKind::PVC, g,
                             {{"k", k}, {"x", std::max<std::int64_t>(g.num_edges() - b, 0)}});
  red.param_map = {{"k", "min(m,|V|)"}, {"x", "max(|E|-b,0)"}};
  red.forward = [g, k, n](const Certificate& cert) -> Certificate {
    return pad_to(minimum_vertex_cover_bipartite(g, removed_of(edges_of(cert))), k, n);
  };
  red.backward = [g](const Certificate& cert) -> Certificate { return uncovered_edges(g, vertices_of(cert)); };
  return red;
}

Reduction red_mmei_to_fei(const WeightedGraph& g0, std::int64_t b, std::int64_t m) {
  require_unit(g0, "mmei-to-fei");
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  const Vertex s = n;
  const Vertex t = n + 1;
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    const bool u_in_x = g.side(e.u) == Side::X;
    arcs.push_back({u_in_x ? e.u : e.v, u_in_x ? e.v : e.u, 1, 1});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.side(v) == Side::X)
      arcs.push_back({s, v, 1, b + 1});
    else
      arcs.push_back({v, t, 1, b + 1});
  }
  FlowNetwork net(n + 2, std::move(arcs), s, t);
  Reduction red;
  red.name = "mmei-to-fei";
  red.source = make_instance(ProblemKind::MMEI, g, {{"b", b}, {"m", m}});
  red.target = make_instance(ProblemKind::FEI, net, {{"b", b}, {"r", m}});
  red.param_map = {{"b", "b"}, {"r", "m"}, {"terminalArcCost", b + 1}};
  red.forward = [g, net](const Certificate& cert) -> Certificate {
    std::vector<int> out;
    for (int i : edges_of(cert).edges) {
      const Edge& e = g.edge(i);
      const bool u_in_x = g.side(e.u) == Side::X;
      out.push_back(*net.find_arc(u_in_x ? e.u : e.v, u_in_x ? e.v : e.u));
    }
    return make_arc_set(net, std::move(out));
  };
  red.backward = [g, net, n](const Certificate& cert) -> Certificate {
    std::vector<int> out;
    for (int i : edges_of(cert).edges) {
      const Arc& a = net.arc(i);
      if (a.from < n && a.to < n) out.push_back(*g.find_edge(a.from, a.to));
    }
    return make_edge_set(g, std::move(out));
  };
  return red;
}

WeightedGraph is_to_peds_gadget(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<Side> sides(static_cast<std::size_t>(2 * n), Side::X);
  for (Vertex v = 0; v < n; ++v) {
    sides[static_cast<std::size_t>(second_twin(v))] = Side::Y;
    edges.push_back({first_twin(v), second_twin(v), 1, 1});
  }
  for (const Edge& e : g.edges()) {
    edges.push_back({first_twin(e.u), second_twin(e.v), 1, 1});
    edges.push_back({second_twin(e.u), first_twin(e.v), 1, 1});
  }
  int next = 2 * n;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex twin : {first_twin(v), second_twin(v)}) {
      const Side opposite = twin % 2 == 0 ? Side::Y : Side::X;
      for (int j = 0; j < n - g.degree(v); ++j) {
        edges.push_back({twin, next++, 1, 1});
        sides.push_back(opposite);
      }
    }
  }
  return WeightedGraph(next, std::move(edges), std::move(sides));
}

Reduction red_is_to_peds(const WeightedGraph& g, std::int64_t k) {
  const int n = g.num_vertices();
  const WeightedGraph target = is_to_peds_gadget(g);
  Reduction red;
  red.name = "is-to-peds";
  red.source = make_instance(ProblemKind::IS, g, {{"k", k}});
  red.target = make_instance(ProblemKind::PEDS, target, {{"k", k}, {"x", 2 * k * n}},
                             DominationMode::exclusive);
  red.param_map = {{"k", "k"}, {"x", "2kn"}, {"dominationMode", "exclusive"}};
  red.forward = [target, k](const Certificate& cert) -> Certificate {
    const VertexSet& vs = vertices_of(cert);
    std::vector<int> out;
    for (std::size_t i = 0; i < vs.size() && static_cast<std::int64_t>(i) < k; ++i)
      out.push_back(*target.find_edge(first_twin(vs[i]), second_twin(vs[i])));
    return make_edge_set(target, std::move(out));
  };
  red.backward = [g, target, k](const Certificate& cert) -> Certificate {
    return extract_independent_set(target, edges_of(cert).edges, g, k).vertices;
  };
  return red;
}

Reduction equiv_peds_to_mmmei(const WeightedGraph& g0, std::int64_t k, std::int64_t x) {
  const WeightedGraph g = with_sides(g0);
  const std::int64_t m = g.num_edges();
  auto source = make_instance(ProblemKind::PEDS, g, {{"k", k}, {"x", x}}, DominationMode::inclusive);
  nlohmann::json param_map = {{"b", "|E|-x"}, {"r", "k"}, {"dominationMode", "inclusive"}};
  if (x > m)
    return trivial_reduction("peds-mmmei", std::move(source), ProblemKind::MMMEI, std::move(param_map));
  Reduction red;
  red.name = "peds-mmmei";
  red.source = std::move(source);
  red.target = make_instance(ProblemKind::MMMEI, g, {{"b", m - x}, {"r", k}});
  red.param_map = std::move(param_map);
  red.forward = [g](const Certificate& cert) -> Certificate {
    return undominated_edges(g, edges_of(cert).edges);
  };
  red.backward = [g](const Certificate& cert) -> Certificate {
    const BitSet removed = removed_of(edges_of(cert));
    return make_edge_set(g, independent_edge_dominating_set(g, minimum_edge_dominating_set(g, removed), removed));
  };
  return red;
}

Reduction equiv_mmmei_to_peds(const WeightedGraph& g0, std::int64_t b, std::int64_t r) {
  const WeightedGraph g = with_sides(g0);
  Reduction red;
  red.name = "peds-mmmei:reverse";
  red.source = make_instance(ProblemKind::MMMEI, g, {{"b", b}, {"r", r}});
  red.target = make_instance(ProblemKind::PEDS, g,
                             {{"k", r}, {"x", std::max<std::int64_t>(g.num_edges() - b, 0)}},
                             DominationMode::inclusive);
  red.param_map = {{"k", "r"}, {"x", "max(|E|-b,0)"}, {"dominationMode", "inclusive"}};
  red.forward = [g](const Certificate& cert) -> Certificate {
    const BitSet removed = removed_of(edges_of(cert));
    return make_edge_set(g, independent_edge_dominating_set(g, minimum_edge_dominating_set(g, removed), removed));
  };
  red.backward = [g](const Certificate& cert) -> Certificate {
    return undominated_edges(g, edges_of(cert).edges);
  };
  return red;
}

Reduction equiv_uncovered_pvc_to_mmei(const WeightedGraph& g0, std::int64_t k, std::int64_t u) {
  require_unit(g0, "mmei-pvc-uncovered");
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  auto source = make_instance(ProblemKind::PVC, g, {{"k", k}, {"u", u}});
  nlohmann::json param_map = {{"b", "u"}, {"m", "k"}};
  if (k > n)
    return trivial_reduction("mmei-pvc-uncovered", std::move(source), ProblemKind::MMEI, std::move(param_map));
  Reduction red;
  red.name = "mmei-pvc-uncovered";
  red.source = std::move(source);
  red.target = make_instance(ProblemKind::MMEI, g, {{"b", u}, {"m", k}});
  red.param_map = std::move(param_map);
  red.forward = [g](const Certificate& cert) -> Certificate { return uncovered_edges(g, vertices_of(cert)); };
  red.backward = [g, k, n](const Certificate& cert) -> Certificate {
    return pad_to(minimum_vertex_cover_bipartite(g, removed_of(edges_of(cert))), k, n);
  };
  return red;
}

Reduction equiv_mmei_to_uncovered_pvc(const WeightedGraph& g0, std::int64_t b, std::int64_t m) {
  require_unit(g0, "mmei-pvc-uncovered");
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  const std::int64_t k = std::min<std::int64_t>(m, n);
  Reduction red;
  red.name = "mmei-pvc-uncovered:reverse";
  red.source = make_instance(ProblemKind::MMEI, g, {{"b", b}, {"m", m}});
  red.target = make_instance(ProblemKind::PVC, g, {{"k", k}, {"u", b}});
  red.param_map = {{"k", "min(m,|V|)"}, {"u", "b"}};
  red.forward = [g, k, n](const Certificate& cert) -> Certificate {
    return pad_to(minimum_vertex_cover_bipartite(g, removed_of(edges_of(cert))), k, n);
  };
  red.backward = [g](const Certificate& cert) -> Certificate { return uncovered_edges(g, vertices_of(cert)); };
  return red;
}

Reduction red_clique_to_kss(const WeightedGraph& g, std::int64_t k) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<Edge> edges;
  std::vector<Side> sides(static_cast<std::size_t>(n), Side::X);
  sides.resize(static_cast<std::size_t>(n + m), Side::Y);
  for (int i = 0; i < m; ++i)
    for (Vertex v = 0; v < n; ++v)
      if (v != g.edge(i).u && v != g.edge(i).v) edges.push_back({v, n + i, 1, 1});
  WeightedGraph target(n + m, std::move(edges), std::move(sides));
  const std::int64_t k2 = k * (k - 1) / 2;
  Reduction red;
  red.name = "clique-to-kss";
  red.source = make_instance(ProblemKind::CLIQUE, g, {{"k", k}});
  red.target = make_instance(ProblemKind::KSS, target, {{"k1", k}, {"k2", k2}, {"x", k * k2 - 2 * k2}});
  red.param_map = {{"k1", "k"}, {"k2", "C(k,2)"}, {"x", "k1*k2-2*k2"}};
  red.forward = [g, n, k](const Certificate& cert) -> Certificate {
    VertexSet clique = vertices_of(cert);
    clique.resize(static_cast<std::size_t>(std::min<std::int64_t>(k, static_cast<std::int64_t>(clique.size()))));
    VertexSet out = clique;
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        out.push_back(n + *g.find_edge(clique[a], clique[b]));
    std::sort(out.begin(), out.end());
    return out;
  };
  red.backward = [n](const Certificate& cert) -> Certificate {
    VertexSet out;
    for (Vertex v : vertices_of(cert))
      if (v < n) out.push_back(v);
    return out;
  };
  return red;
}

Reduction red_kss_to_kkpvc(const WeightedGraph& g0, std::int64_t k1, std::int64_t k2, std::int64_t x) {
  const WeightedGraph g = with_sides(g0);
  const int n = g.num_vertices();
  auto source = make_instance(ProblemKind::KSS, g, {{"k1", k1}, {"k2", k2}, {"x", x}});
  std::int64_t size_x = 0;
  for (Vertex v = 0; v < n; ++v) size_x += g.side(v) == Side::X;
  nlohmann::json param_map = {{"k1", "k1"}, {"k2", "k2"}, {"x", "n(k1+k2)-x"}};
  if (k1 > size_x || k2 > n - size_x)
    return trivial_reduction("kss-to-kkpvc", std::move(source), ProblemKind::KKPVC, std::move(param_map));

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Side> sides = *g.bipartition();
  int next = n;
  for (Vertex v = 0; v < n; ++v) {
    const Side opposite = g.side(v) == Side::X ? Side::Y : Side::X;
    for (int j = 0; j < n - g.degree(v); ++j) {
      edges.push_back({v, next++, 1, 1});
      sides.push_back(opposite);
    }
  }
  WeightedGraph target(next, std::move(edges), std::move(sides));
  Reduction red;
  red.name = "kss-to-kkpvc";
  red.source = std::move(source);
  red.target = make_instance(ProblemKind::KKPVC, target,
                             {{"k1", k1}, {"k2", k2}, {"x", std::max<std::int64_t>(n * (k1 + k2) - x, 0)}});
  red.param_map = std::move(param_map);
  red.forward = [](const Certificate& cert) -> Certificate { return vertices_of(cert); };
  red.backward = [g, target, n](const Certificate& cert) -> Certificate {
    VertexSet out;
    std::vector<Side> pending;
    for (Vertex v : vertices_of(cert)) {
      if (v < n)
        out.push_back(v);
      else
        pending.push_back(target.side(v));
    }
    for (Side side : pending) {
      for (Vertex w = 0; w < n; ++w) {
        if (g.side(w) != side || std::find(out.begin(), out.end(), w) != out.end()) continue;
        out.push_back(w);
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return red;
}

const std::vector<ReductionSpec>& reduction_specs() {
  static const std::vector<ReductionSpec> specs = {
      {"kway-to-mve", ProblemKind::KWAY, ProblemKind::MVE, false},
      {"pvc-to-mmei", ProblemKind::PVC, ProblemKind::MMEI, false},
      {"mmei-pvc-bipartite", ProblemKind::PVC, ProblemKind::MMEI, true},
      {"mmei-pvc-bipartite:reverse", ProblemKind::MMEI, ProblemKind::PVC, true},
      {"mmei-to-fei", ProblemKind::MMEI, ProblemKind::FEI, true},
      {"is-to-peds", ProblemKind::IS, ProblemKind::PEDS, false},
      {"peds-mmmei", ProblemKind::PEDS, ProblemKind::MMMEI, true},
      {"peds-mmmei:reverse", ProblemKind::MMMEI, ProblemKind::PEDS, true},
      {"mmei-pvc-uncovered", ProblemKind::PVC, ProblemKind::MMEI, true},
      {"mmei-pvc-uncovered:reverse", ProblemKind::MMEI, ProblemKind::PVC, true},
      {"clique-to-kss", ProblemKind::CLIQUE, ProblemKind::KSS, false},
      {"kss-to-kkpvc", ProblemKind::KSS, ProblemKind::KKPVC, true},
  };
  return specs;
}

const ReductionSpec& find_reduction_spec(const std::string& name) {
  for (const auto& spec : reduction_specs())
    if (spec.name == name) return spec;
  throw ValidationError("unknown reduction '" + name + "'");
}

Reduction build_reduction(const std::string& name, const ProblemInstance& source, GadgetPairs pairs) {
  const ReductionSpec& spec = find_reduction_spec(name);
  if (source.kind != spec.source)
    throw ValidationError("reduction '" + name + "' expects a " + std::string(kind_name(spec.source)) +
                          " instance, got " + std::string(kind_name(source.kind)));
  const WeightedGraph& g = source.weighted();
  auto p = [&](const char* key) { return source.param(key); };
  if (name == "kway-to-mve") return red_kway_to_mve(g, p("s"), p("k"), pairs);
  if (name == "pvc-to-mmei") return red_pvc_to_mmei(g, p("k"), p("x"));
  if (name == "mmei-pvc-bipartite") return equiv_pvc_to_mmei_bipartite(g, p("k"), p("x"));
  if (name == "mmei-pvc-bipartite:reverse") return equiv_mmei_to_pvc_bipartite(g, p("b"), p("m"));
  if (name == "mmei-to-fei") return red_mmei_to_fei(g, p("b"), p("m"));
  if (name == "is-to-peds") return red_is_to_peds(g, p("k"));
  if (name == "peds-mmmei") {
    if (source.mode != DominationMode::inclusive)
      throw ValidationError("peds-mmmei needs inclusive domination counting");
    return equiv_peds_to_mmmei(g, p("k"), p("x"));
  }
  if (name == "peds-mmmei:reverse") return equiv_mmmei_to_peds(g, p("b"), p("r"));
  if (name == "mmei-pvc-uncovered") return equiv_uncovered_pvc_to_mmei(g, p("k"), p("u"));
  if (name == "mmei-pvc-uncovered:reverse") return equiv_mmei_to_uncovered_pvc(g, p("b"), p("m"));
  if (name == "clique-to-kss") return red_clique_to_kss(g, p("k"));
  return red_kss_to_kkpvc(g, p("k1"), p("k2"), p("x"));
}

}  // namespace interdict
