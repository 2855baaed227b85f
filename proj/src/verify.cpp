#include "interdict/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "interdict/enumerate.hpp"

namespace interdict {

namespace {

// The parameter compared against the optimum; everything else shapes the
// optimization itself, so results can be shared across its values.
std::string threshold_param(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::MMEI: return "m";
    case ProblemKind::MVE:
    case ProblemKind::FEI:
    case ProblemKind::MMMEI: return "r";
    case ProblemKind::PVC: return inst.has("u") ? "u" : "x";
    case ProblemKind::PEDS:
    case ProblemKind::KKPVC:
    case ProblemKind::KSS: return "x";
    case ProblemKind::KWAY:
    case ProblemKind::IS:
    case ProblemKind::CLIQUE: return "k";
  }
  return "";
}

std::string cache_key(const ProblemInstance& inst) {
  std::string key(kind_name(inst.kind));
  key += inst.mode == DominationMode::inclusive ? "|i|" : "|e|";
  const std::string skip = threshold_param(inst);
  for (const auto& [name, value] : inst.params)
    if (name != skip) key += name + "=" + std::to_string(value) + ";";
  key += std::visit([](const auto& g) { return write_graph(g); }, inst.graph);
  return key;
}

class OracleCache {
 public:
  explicit OracleCache(const Caps& caps) : caps_(caps) {}

  OracleResult solve(const ProblemInstance& inst) {
    const std::string key = cache_key(inst);
    auto it = results_.find(key);
    if (it == results_.end()) it = results_.emplace(key, solve_oracle(inst, caps_)).first;
    OracleResult out = it->second;
    out.decision = out.feasible && decide(inst, out.optimum);
    return out;
  }

 private:
  Caps caps_;
  std::map<std::string, OracleResult> results_;
};

void mutate_target(Reduction& red) {
  for (const char* key : {"b", "x", "u", "k1"}) {
    if (red.target.has(key)) {
      red.target.params[key] += 1;
      return;
    }
  }
}

nlohmann::json point_json(const Reduction& red) {
  return {{"source", instance_to_json(red.source)}, {"target", instance_to_json(red.target)}};
}

struct Outcome {
  std::int64_t points = 0;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::int64_t source_yes = 0;
  std::int64_t structural_checked = 0;
  std::vector<nlohmann::json> counterexamples;
  std::vector<nlohmann::json> skipped_points;
  std::vector<nlohmann::json> structural;
};

std::optional<std::string> check_witness(const ProblemInstance& inst, const Certificate& cert) {
  const auto value = evaluate_certificate(inst, cert);
  if (!value) return "mapped certificate violates the instance constraints";
  if (!decide(inst, *value)) return "mapped certificate reaches only " + value->to_string();
  return std::nullopt;
}

// Optimal-certificate claims that accompany two of the constructions.
std::optional<std::string> structural_claim(const Reduction& red, const OracleResult& target) {
  if (red.name == "kway-to-mve") {
    const int n = red.source.weighted().num_vertices();
    const WeightedGraph& g = red.target.weighted();
    for (int i : std::get<EdgeSet>(target.certificate).edges)
      if (g.edge(i).u >= n || g.edge(i).v >= n) return "optimal certificate uses a gadget edge";
  }
  if (red.name == "mmei-to-fei") {
    const FlowNetwork& net = red.target.network();
    const std::int64_t heavy = red.target.param("b") + 1;
    for (int i : std::get<EdgeSet>(target.certificate).edges)
      if (net.arc(i).cost == heavy) return "optimal certificate uses a cost-(b+1) arc";
  }
  return std::nullopt;
}

Outcome sweep_graph(const std::string& name, const ReductionSpec& spec, const WeightedGraph& g,
                    const SweepOptions& opts) {
  Outcome out;
  OracleCache cache(opts.caps);
  for (const Params& params : sweep_parameters(spec, g)) {
    ++out.points;
    const ProblemInstance source = make_instance(spec.source, g, params);
    Reduction red;
    try {
      red = build_reduction(name, source, opts.pairs);
      if (opts.mutate && !red.trivial_target) mutate_target(red);
    } catch (const std::exception& e) {
      out.counterexamples.push_back({{"reason", std::string("construction failed: ") + e.what()},
                                     {"source", instance_to_json(source)}});
      continue;
    }
    OracleResult src;
    OracleResult tgt;
    try {
      src = cache.solve(red.source);
      tgt = cache.solve(red.target);
    } catch (const CapExceeded& e) {
      ++out.skipped;
      auto entry = point_json(red);
      entry["reason"] = e.what();
      out.skipped_points.push_back(std::move(entry));
      continue;
    }
    ++out.checked;
    if (src.decision) ++out.source_yes;
    auto report = [&](const std::string& reason) {
      auto entry = point_json(red);
      entry["reason"] = reason;
      entry["sourceOptimum"] = weight_to_json(src.optimum);
      entry["targetOptimum"] = weight_to_json(tgt.optimum);
      out.counterexamples.push_back(std::move(entry));
    };
    if (src.decision != tgt.decision) {
      report(std::string("decision mismatch: source ") + (src.decision ? "yes" : "no") + ", target " +
             (tgt.decision ? "yes" : "no"));
      continue;
    }
    if (red.trivial_target) continue;
    try {
      if (src.decision)
        if (auto bad = check_witness(red.target, red.forward(src.certificate))) report("forward map: " + *bad);
      if (tgt.decision)
        if (auto bad = check_witness(red.source, red.backward(tgt.certificate))) report("backward map: " + *bad);
    } catch (const std::exception& e) {
      report(std::string("witness map failed: ") + e.what());
    }
    if (tgt.feasible && (name == "kway-to-mve" || name == "mmei-to-fei")) {
      ++out.structural_checked;
      if (auto bad = structural_claim(red, tgt)) {
        auto entry = point_json(red);
        entry["reason"] = *bad;
        entry["certificate"] = certificate_to_json(red.target, tgt.certificate);
        out.structural.push_back(std::move(entry));
      }
    }
  }
  return out;
}

}  // namespace

nlohmann::json VerifyReport::to_json() const {
  return {{"reduction", reduction},
          {"points", points},
          {"checked", checked},
          {"skipped", skipped},
          {"sourceYes", source_yes},
          {"counterexamples", counterexamples},
          {"skippedPoints", skipped_points},
          {"structuralChecked", structural_checked},
          {"structuralViolations", structural_violations},
          {"passed", passed()}};
}

std::vector<WeightedGraph> sweep_sources(const ReductionSpec& spec, const SweepOptions& opts) {
  return spec.bipartite_source ? bipartite_sweep(opts.max_side) : general_sweep(opts.max_n);
}

std::vector<Params> sweep_parameters(const ReductionSpec& spec, const WeightedGraph& g) {
  const std::int64_t n = g.num_vertices();
  const std::int64_t e = g.num_edges();
  std::vector<Params> out;
  auto grid = [&](const char* a, std::int64_t a_max, const char* b, std::int64_t b_max) {
    for (std::int64_t i = 0; i <= a_max; ++i)
      for (std::int64_t j = 0; j <= b_max; ++j) out.push_back({{a, i}, {b, j}});
  };
  const std::string& name = spec.name;
  if (name == "kway-to-mve") {
    grid("s", e, "k", n);
  } else if (name == "pvc-to-mmei" || name == "mmei-pvc-bipartite") {
    grid("k", n, "x", e + 1);
  } else if (name == "mmei-pvc-bipartite:reverse") {
    grid("b", e + 1, "m", n);
  } else if (name == "mmei-to-fei") {
    grid("b", e, "m", max_matching(g) + 1);
  } else if (name == "is-to-peds" || name == "clique-to-kss") {
    for (std::int64_t k = 0; k <= n; ++k) out.push_back({{"k", k}});
  } else if (name == "peds-mmmei") {
    grid("k", e, "x", e + 1);
  } else if (name == "peds-mmmei:reverse") {
    grid("b", e, "r", e);
  } else if (name == "mmei-pvc-uncovered") {
    grid("k", n, "u", e);
  } else if (name == "mmei-pvc-uncovered:reverse") {
    grid("b", e, "m", n);
  } else if (name == "kss-to-kkpvc") {
    std::int64_t size_x = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) size_x += g.side(v) == Side::X;
    for (std::int64_t k1 = 0; k1 <= size_x; ++k1)
      for (std::int64_t k2 = 0; k2 <= n - size_x; ++k2)
        for (std::int64_t x = 0; x <= e; ++x) out.push_back({{"k1", k1}, {"k2", k2}, {"x", x}});
  } else {
    throw ValidationError("no sweep defined for reduction '" + name + "'");
  }
  return out;
}

VerifyReport verify_equivalence(const std::string& name, const SweepOptions& opts) {
  const ReductionSpec& spec = find_reduction_spec(name);
  const std::vector<WeightedGraph> sources = sweep_sources(spec, opts);
  std::vector<Outcome> outcomes(sources.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opts.jobs));
  if (jobs == 1) {
    for (std::size_t i = 0; i < sources.size(); ++i) outcomes[i] = sweep_graph(name, spec, sources[i], opts);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < sources.size(); i += jobs) outcomes[i] = sweep_graph(name, spec, sources[i], opts);
      });
    for (auto& t : workers) t.join();
  }

  VerifyReport report;
  report.reduction = name;
  std::vector<nlohmann::json> counterexamples;
  for (auto& o : outcomes) {
    report.points += o.points;
    report.checked += o.checked;
    report.skipped += o.skipped;
    report.source_yes += o.source_yes;
    report.structural_checked += o.structural_checked;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    for (auto& p : o.skipped_points) report.skipped_points.push_back(std::move(p));
    for (auto& s : o.structural) report.structural_violations.push_back(std::move(s));
  }
  std::stable_sort(counterexamples.begin(), counterexamples.end(),
                   [](const auto& a, const auto& b) { return a.dump() < b.dump(); });
  for (auto& c : counterexamples) report.counterexamples.push_back(std::move(c));
  return report;
}

}  // namespace interdict
