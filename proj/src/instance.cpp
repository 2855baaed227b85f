#include "interdict/instance.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace interdict {

namespace {

struct KindInfo {
  ProblemKind kind;
  std::string_view name;
  std::vector<std::string> params;
};

const std::vector<KindInfo>& kind_table() {
  static const std::vector<KindInfo> table = {
      {ProblemKind::MVE, "mve", {"b", "r"}},
      {ProblemKind::MMEI, "mmei", {"b", "m"}},
      {ProblemKind::FEI, "fei", {"b", "r"}},
      {ProblemKind::MMMEI, "mmmei", {"b", "r"}},
      {ProblemKind::PVC, "pvc", {"k"}},
      {ProblemKind::PEDS, "peds", {"k", "x"}},
      {ProblemKind::KKPVC, "kkpvc", {"k1", "k2", "x"}},
      {ProblemKind::KSS, "kss", {"k1", "k2", "x"}},
      {ProblemKind::KWAY, "kway", {"s", "k"}},
      {ProblemKind::IS, "is", {"k"}},
      {ProblemKind::CLIQUE, "clique", {"k"}},
  };
  return table;
}

const KindInfo& info(ProblemKind kind) {
  for (const auto& entry : kind_table())
    if (entry.kind == kind) return entry;
  throw std::logic_error("unknown problem kind");
}

bool needs_flow(ProblemKind kind) { return kind == ProblemKind::FEI; }

bool needs_bipartite(ProblemKind kind) {
  return kind == ProblemKind::KKPVC || kind == ProblemKind::KSS;
}

std::int64_t count_in_side(const std::vector<Side>& sides, const VertexSet& vs, Side side) {
  return std::count_if(vs.begin(), vs.end(),
                       [&](Vertex v) { return sides[static_cast<std::size_t>(v)] == side; });
}

bool distinct_in_range(const VertexSet& vs, int n) {
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= n || !seen.insert(v).second) return false;
  }
  return true;
}

BitSet removed_of(const EdgeSet& set) {
  BitSet removed;
  for (int i : set.edges) removed.set(static_cast<std::size_t>(i));
  return removed;
}

}  // namespace

std::string_view kind_name(ProblemKind kind) { return info(kind).name; }

std::optional<ProblemKind> parse_kind(std::string_view name) {
  for (const auto& entry : kind_table())
    if (entry.name == name) return entry.kind;
  return std::nullopt;
}

bool maximizes(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MVE:
    case ProblemKind::PVC:
    case ProblemKind::PEDS:
    case ProblemKind::KKPVC:
    case ProblemKind::KWAY:
    case ProblemKind::IS:
    case ProblemKind::CLIQUE:
      return true;
    default:
      return false;
  }
}

const WeightedGraph& ProblemInstance::weighted() const {
  if (const auto* g = std::get_if<WeightedGraph>(&graph)) return *g;
  throw ValidationError(std::string(kind_name(kind)) + " needs an undirected graph");
}

const FlowNetwork& ProblemInstance::network() const {
  if (const auto* net = std::get_if<FlowNetwork>(&graph)) return *net;
  throw ValidationError(std::string(kind_name(kind)) + " needs a flow network");
}

std::int64_t ProblemInstance::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw ValidationError("missing parameter '" + name + "' for " + std::string(kind_name(kind)));
  return it->second;
}

void ProblemInstance::validate() const {
  if (needs_flow(kind))
    (void)network();
  else
    (void)weighted();
  std::vector<std::string> expected = info(kind).params;
  if (kind == ProblemKind::PVC) {
    if (has("x") == has("u")) throw ValidationError("pvc takes exactly one of 'x' or 'u'");
    expected.push_back(has("x") ? "x" : "u");
  }
  for (const auto& name : expected) {
    if (!has(name))
      throw ValidationError("missing parameter '" + name + "' for " + std::string(kind_name(kind)));
  }
  for (const auto& [name, value] : params) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end())
      throw ValidationError("unexpected parameter '" + name + "' for " +
                            std::string(kind_name(kind)));
    if (value < 0) throw ValidationError("parameter '" + name + "' is negative");
  }
  if (needs_bipartite(kind)) (void)sides_of(weighted());
}

ProblemInstance make_instance(ProblemKind kind, AnyGraph graph, Params params, DominationMode mode) {
  ProblemInstance inst{kind, std::move(graph), std::move(params), mode};
  inst.validate();
  return inst;
}

std::vector<Side> sides_of(const WeightedGraph& g) {
  if (g.bipartition()) return *g.bipartition();
  auto coloring = two_coloring(g);
  if (!coloring) throw ValidationError("graph is not bipartite");
  return *coloring;
}

bool decide(const ProblemInstance& inst, const ExtendedWeight& value) {
  switch (inst.kind) {
    case ProblemKind::MVE:
      return value >= ExtendedWeight(inst.param("r"));
    case ProblemKind::MMEI:
      return value <= ExtendedWeight(inst.param("m"));
    case ProblemKind::FEI:
    case ProblemKind::MMMEI:
      return value <= ExtendedWeight(inst.param("r"));
    case ProblemKind::PVC: {
      if (value.is_infinite()) return false;
      if (inst.has("u")) return value.value() + inst.param("u") >= inst.weighted().num_edges();
      return value.value() >= inst.param("x");
    }
    case ProblemKind::PEDS:
    case ProblemKind::KKPVC:
      return !value.is_infinite() && value.value() >= inst.param("x");
    case ProblemKind::KSS:
      return value <= ExtendedWeight(inst.param("x"));
    case ProblemKind::KWAY:
    case ProblemKind::IS:
    case ProblemKind::CLIQUE:
      return !value.is_infinite() && value.value() >= inst.param("k");
  }
  return false;
}

std::optional<ExtendedWeight> evaluate_certificate(const ProblemInstance& inst,
                                                   const Certificate& cert) {
  if (inst.kind == ProblemKind::FEI) {
    const auto* arcs = std::get_if<EdgeSet>(&cert);
    if (!arcs) return std::nullopt;
    const FlowNetwork& net = inst.network();
    for (int i : arcs->edges)
      if (i < 0 || i >= net.num_arcs()) return std::nullopt;
    const EdgeSet fresh = make_arc_set(net, arcs->edges);
    if (fresh.total_cost > inst.param("b")) return std::nullopt;
    return ExtendedWeight(max_flow(net, removed_of(fresh)).value);
  }

  const WeightedGraph& g = inst.weighted();
  if (const auto* set = std::get_if<EdgeSet>(&cert)) {
    for (int i : set->edges)
      if (i < 0 || i >= g.num_edges()) return std::nullopt;
    const EdgeSet fresh = make_edge_set(g, set->edges);
    const std::int64_t size = static_cast<std::int64_t>(fresh.edges.size());
    const BitSet removed = removed_of(fresh);
    switch (inst.kind) {
      case ProblemKind::MVE:
        if (size > inst.param("b")) return std::nullopt;
        return mst_weight(g, removed);
      case ProblemKind::MMEI:
        if (fresh.total_cost > inst.param("b")) return std::nullopt;
        return ExtendedWeight(max_matching(g, removed));
      case ProblemKind::MMMEI:
        if (size > inst.param("b")) return std::nullopt;
        return ExtendedWeight(min_maximal_matching(g, removed));
      case ProblemKind::KWAY:
        if (size > inst.param("s")) return std::nullopt;
        return ExtendedWeight(components(g, removed).count);
      case ProblemKind::PEDS:
        if (size > inst.param("k")) return std::nullopt;
        return ExtendedWeight(domination_count(g, fresh.edges, inst.mode));
      default:
        return std::nullopt;
    }
  }

  const VertexSet& vs = std::get<VertexSet>(cert);
  if (!distinct_in_range(vs, g.num_vertices())) return std::nullopt;
  const std::int64_t size = static_cast<std::int64_t>(vs.size());
  switch (inst.kind) {
    case ProblemKind::PVC:
      if (size != inst.param("k")) return std::nullopt;
      return ExtendedWeight(covered_edge_count(g, vs));
    case ProblemKind::KKPVC:
    case ProblemKind::KSS: {
      const auto sides = sides_of(g);
      if (count_in_side(sides, vs, Side::X) != inst.param("k1") ||
          count_in_side(sides, vs, Side::Y) != inst.param("k2"))
        return std::nullopt;
      if (inst.kind == ProblemKind::KKPVC) return ExtendedWeight(covered_edge_count(g, vs));
      return ExtendedWeight(induced_edge_count(g, vs));
    }
    case ProblemKind::IS:
      if (!is_independent_set(g, vs)) return std::nullopt;
      return ExtendedWeight(size);
    case ProblemKind::CLIQUE:
      if (!is_clique(g, vs)) return std::nullopt;
      return ExtendedWeight(size);
    default:
      return std::nullopt;
  }
}

std::string weight_to_json_text(const ExtendedWeight& w) { return w.to_string(); }

nlohmann::json weight_to_json(const ExtendedWeight& w) {
  if (w.is_infinite()) return "INFINITY";
  return w.value();
}

nlohmann::json certificate_to_json(const ProblemInstance& inst, const Certificate& cert) {
  nlohmann::json doc;
  if (const auto* set = std::get_if<EdgeSet>(&cert)) {
    auto list = nlohmann::json::array();
    if (inst.kind == ProblemKind::FEI) {
      for (int i : set->edges) list.push_back({inst.network().arc(i).from + 1, inst.network().arc(i).to + 1});
      doc["arcs"] = std::move(list);
    } else {
      for (int i : set->edges) list.push_back({inst.weighted().edge(i).u + 1, inst.weighted().edge(i).v + 1});
      doc["edges"] = std::move(list);
    }
    doc["totalCost"] = set->total_cost;
    doc["totalWeight"] = set->total_weight;
  } else {
    auto list = nlohmann::json::array();
    for (Vertex v : std::get<VertexSet>(cert)) list.push_back(v + 1);
    doc["vertices"] = std::move(list);
  }
  return doc;
}

Certificate certificate_from_json(const ProblemInstance& inst, const nlohmann::json& doc) {
  if (doc.contains("vertices")) {
    VertexSet vs;
    for (const auto& id : doc.at("vertices")) vs.push_back(id.get<int>() - 1);
    std::sort(vs.begin(), vs.end());
    return vs;
  }
  std::vector<int> idx;
  if (doc.contains("arcs")) {
    for (const auto& pair : doc.at("arcs")) {
      auto found = inst.network().find_arc(pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1);
      if (!found) throw ValidationError("certificate arc not in network");
      idx.push_back(*found);
    }
    return make_arc_set(inst.network(), std::move(idx));
  }
  for (const auto& pair : doc.at("edges")) {
    auto found = inst.weighted().find_edge(pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1);
    if (!found) throw ValidationError("certificate edge not in graph");
    idx.push_back(*found);
  }
  return make_edge_set(inst.weighted(), std::move(idx));
}

nlohmann::json instance_to_json(const ProblemInstance& inst) {
  nlohmann::json doc;
  doc["kind"] = std::string(kind_name(inst.kind));
  doc["graph"] = std::visit([](const auto& g) { return graph_to_json(g); }, inst.graph);
  doc["params"] = inst.params;
  if (inst.kind == ProblemKind::PEDS)
    doc["dominationMode"] = inst.mode == DominationMode::inclusive ? "inclusive" : "exclusive";
  return doc;
}

ProblemInstance instance_from_json(const nlohmann::json& doc) {
  try {
    auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (!kind) throw ValidationError("unknown problem kind");
    Params params = doc.at("params").get<Params>();
    DominationMode mode = DominationMode::inclusive;
    if (doc.contains("dominationMode") && doc.at("dominationMode") == "exclusive")
      mode = DominationMode::exclusive;
    return make_instance(*kind, parse_graph_json(doc.at("graph")), std::move(params), mode);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed instance JSON: ") + ex.what());
  }
}

}  // namespace interdict
