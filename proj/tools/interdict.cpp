// Command-line front end: solve, reduce, kernelize, generate, verify, bench, replay.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "interdict/fpt.hpp"
#include "interdict/kernel.hpp"
#include "interdict/oracle.hpp"
#include "interdict/reduction.hpp"
#include "interdict/verify.hpp"

namespace fs = std::filesystem;
using namespace interdict;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  bool json_output = false;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<int> cap_edges;
  std::optional<int> cap_vertices;
  bool timing = false;

  // Problem parameters, set only when given on the command line.
  std::map<std::string, std::optional<std::int64_t>> params = {
      {"b", std::nullopt}, {"r", std::nullopt},  {"m", std::nullopt},  {"k", std::nullopt}, {"x", std::nullopt},
      {"u", std::nullopt}, {"k1", std::nullopt}, {"k2", std::nullopt}, {"s", std::nullopt}};
  std::string mode = "inclusive";

  Caps caps() const {
    Caps caps = Caps::from_env();
    if (cap_edges) caps.max_edges = *cap_edges;
    if (cap_vertices) caps.max_vertices = *cap_vertices;
    return caps;
  }

  Params given(const std::vector<std::string>& names = {}) const {
    Params out;
    for (const auto& [name, value] : params)
      if (value && (names.empty() || std::find(names.begin(), names.end(), name) != names.end())) out[name] = *value;
    return out;
  }

  DominationMode domination() const {
    if (mode == "inclusive") return DominationMode::inclusive;
    if (mode == "exclusive") return DominationMode::exclusive;
    throw UsageError("--mode must be inclusive or exclusive");
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + cfg.output + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string graph_text(const RunConfig& cfg, const AnyGraph& graph) {
  return std::visit(
      [&](const auto& g) { return cfg.json_output ? dump(graph_to_json(g)) : write_graph(g); }, graph);
}

std::vector<std::string> param_names(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MVE:
    case ProblemKind::FEI:
    case ProblemKind::MMMEI: return {"b", "r"};
    case ProblemKind::MMEI: return {"b", "m"};
    case ProblemKind::PVC: return {"k", "x", "u"};
    case ProblemKind::PEDS: return {"k", "x"};
    case ProblemKind::KKPVC:
    case ProblemKind::KSS: return {"k1", "k2", "x"};
    case ProblemKind::KWAY: return {"s", "k"};
    case ProblemKind::IS:
    case ProblemKind::CLIQUE: return {"k"};
  }
  return {};
}

// The input is either a bare graph (text or JSON) or a full instance JSON
// carrying kind and parameters.
struct Loaded {
  AnyGraph graph;
  std::optional<ProblemInstance> instance;
};

Loaded load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  const std::string text = read_text_file(cfg.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("params") && doc.contains("graph")) {
      ProblemInstance inst = instance_from_json(doc);
      return {inst.graph, inst};
    }
    return {parse_graph_json(doc), std::nullopt};
  }
  return {parse_graph(text), std::nullopt};
}

json result_json(const ProblemInstance& inst, const OracleResult& res, const std::string& problem,
                 const std::string& algo, std::optional<double> millis) {
  return {{"problem", problem},
          {"algo", algo},
          {"optimum", weight_to_json(res.optimum)},
          {"certificate", certificate_to_json(inst, res.certificate)},
          {"decision", res.decision ? "yes" : "no"},
          {"feasible", res.feasible},
          {"nodesExplored", res.nodes},
          {"elapsedMs", millis ? json(*millis) : json(nullptr)},
          {"stats", res.stats}};
}

// Problem names accepted by solve; the fpt names pick the specialised
// algorithms, and they also work as aliases under the oracle.
ProblemKind problem_kind(const std::string& problem) {
  if (problem == "mve01") return ProblemKind::MVE;
  if (problem == "mmei-bipartite") return ProblemKind::MMEI;
  if (problem == "pvc-bipartite") return ProblemKind::PVC;
  if (auto kind = parse_kind(problem)) return *kind;
  throw UsageError("unknown problem '" + problem + "'");
}

bool fpt_applies(const ProblemInstance& inst) {
  if (inst.kind == ProblemKind::KWAY) return true;
  if (inst.kind != ProblemKind::MVE && inst.kind != ProblemKind::MMEI && inst.kind != ProblemKind::PVC) return false;
  const WeightedGraph& g = inst.weighted();
  if (inst.kind == ProblemKind::MVE)
    return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.weight == 0 || e.weight == 1; });
  if (inst.kind == ProblemKind::MMEI && (!g.unit_weights() || !g.unit_costs())) return false;
  return two_coloring(g).has_value();
}

OracleResult run_fpt(const ProblemInstance& inst, const Caps& caps) {
  if (!fpt_applies(inst))
    throw UsageError("no fpt algorithm for this '" + std::string(kind_name(inst.kind)) + "' instance");
  const WeightedGraph& g = inst.weighted();
  OracleResult res;
  switch (inst.kind) {
    case ProblemKind::MVE: {
      FptOptions opts;
      opts.caps = caps;
      res = fpt_mve_01(g, inst.param("b"), opts);
      break;
    }
    case ProblemKind::MMEI:
      res = fpt_mmei_bipartite(g, inst.param("b"), inst.param("m"));
      break;
    case ProblemKind::PVC:
      res = pvc_bipartite(g, inst.param("k"));
      break;
    case ProblemKind::KWAY: {
      const CutProfile profile = kway_cut_exact(g, static_cast<int>(inst.param("s")), caps);
      res.optimum = profile.best.back();
      res.certificate = make_edge_set(g, profile.witnesses.back());
      res.nodes = profile.nodes;
      res.stats["profile"] = profile.best;
      break;
    }
    default:
      throw UsageError("no fpt algorithm for problem '" + std::string(kind_name(inst.kind)) + "'");
  }
  res.decision = res.feasible && decide(inst, res.optimum);
  return res;
}

// Kernelize, then solve the kernel exactly unless the verdict is already
// settled. Certificates are reported on the kernel with original vertex ids.
OracleResult run_kernel(const ProblemInstance& inst, const Caps& caps) {
  if (inst.kind != ProblemKind::MMEI) throw UsageError("the kernel algorithm applies to mmei only");
  const KernelResult kr = kernelize(inst.weighted(), inst.param("b"), inst.param("m"));
  OracleResult res;
  res.stats["verdict"] = verdict_name(kr.verdict);
  res.stats["kernelVertices"] = kr.kernel.num_vertices();
  res.stats["kernelEdges"] = kr.kernel.num_edges();
  res.stats["bound"] = kr.bound;
  res.certificate = make_edge_set(inst.weighted(), {});
  if (kr.verdict == KernelVerdict::reduced) {
    const OracleResult inner = oracle_mmei(kr.kernel, inst.param("b"), caps);
    res.optimum = inner.optimum;
    res.nodes = inner.nodes;
    std::vector<int> mapped;
    for (int e : std::get<EdgeSet>(inner.certificate).edges) {
      const Edge& edge = kr.kernel.edge(e);
      mapped.push_back(*inst.weighted().find_edge(kr.vertex_map[static_cast<std::size_t>(edge.u)],
                                                   kr.vertex_map[static_cast<std::size_t>(edge.v)]));
    }
    std::sort(mapped.begin(), mapped.end());
    res.certificate = make_edge_set(inst.weighted(), std::move(mapped));
    res.decision = decide(inst, res.optimum);
  } else {
    res.optimum = max_matching(kr.kernel);
    res.decision = kr.verdict == KernelVerdict::yes;
    res.stats["optimumOf"] = "kernel without interdiction";
  }
  return res;
}

ProblemInstance instance_for(const RunConfig& cfg, const Loaded& loaded, ProblemKind kind) {
  if (loaded.instance && loaded.instance->kind == kind) {
    ProblemInstance inst = *loaded.instance;
    for (const auto& [name, value] : cfg.given()) inst.params[name] = value;
    inst.validate();
    return inst;
  }
  return make_instance(kind, loaded.graph, cfg.given(param_names(kind)), cfg.domination());
}

OracleResult run_algo(const std::string& algo, const ProblemInstance& inst, const Caps& caps) {
  if (algo == "oracle") return solve_oracle(inst, caps);
  if (algo == "fpt") return run_fpt(inst, caps);
  if (algo == "kernel") return run_kernel(inst, caps);
  throw UsageError("unknown algorithm '" + algo + "'");
}

int cmd_solve(const RunConfig& cfg, std::string problem, const std::string& algo) {
  const Loaded loaded = load_input(cfg);
  if (problem.empty()) {
    if (!loaded.instance) throw UsageError("--problem is required unless the input is an instance file");
    problem = std::string(kind_name(loaded.instance->kind));
  }
  const ProblemInstance inst = instance_for(cfg, loaded, problem_kind(problem));
  const Caps caps = cfg.caps();
  const auto start = std::chrono::steady_clock::now();
  OracleResult res;
  try {
    res = run_algo(algo, inst, caps);
  } catch (const CapExceeded& e) {
    emit(cfg, dump({{"problem", problem}, {"algo", algo}, {"error", "enumeration cap"}, {"detail", e.what()}}));
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::optional<double> millis;
  if (cfg.timing)
    millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(cfg, dump(result_json(inst, res, problem, algo, millis)));
  return res.decision ? kExitYes : kExitNo;
}

const ReductionSpec& pick_reduction(const std::string& name, const std::string& from, const std::string& to,
                                    const RunConfig& cfg) {
  if (!name.empty()) return find_reduction_spec(name);
  const auto src = parse_kind(from);
  const auto tgt = parse_kind(to);
  if (!src || !tgt) throw UsageError("give --reduction, or both --from and --to as problem kinds");
  const bool uncovered = cfg.params.at("u").has_value();
  for (const auto& spec : reduction_specs()) {
    if (spec.source != *src || spec.target != *tgt) continue;
    if (*src == ProblemKind::PVC && uncovered != (spec.name.find("uncovered") != std::string::npos)) continue;
    return spec;
  }
  throw UsageError("no reduction from " + from + " to " + to);
}

std::string witness_description(const std::string& name) {
  static const std::map<std::string, std::pair<std::string, std::string>> maps = {
      {"kway-to-mve", {"cut edges keep their endpoints", "target edges between original vertices"}},
      {"pvc-to-mmei", {"pendant edges of every vertex outside the cover plus the original edges it misses",
                       "vertices that keep a pendant edge, padded to k"}},
      {"mmei-pvc-bipartite", {"edges not covered by the vertex set", "minimum vertex cover of G - I"}},
      {"mmei-pvc-bipartite:reverse", {"minimum vertex cover of G - I", "edges not covered by the vertex set"}},
      {"mmei-to-fei", {"interdicted edges become their X-to-Y arcs", "interdicted X-to-Y arcs become their edges"}},
      {"is-to-peds", {"twin edge of every chosen vertex", "conflict-graph extraction of an independent set"}},
      {"peds-mmmei", {"edges not dominated by S", "minimum edge dominating set of G - I made independent"}},
      {"peds-mmmei:reverse", {"minimum edge dominating set of G - I made independent", "edges not dominated by S"}},
      {"mmei-pvc-uncovered", {"edges not covered by the vertex set", "minimum vertex cover of G - I"}},
      {"mmei-pvc-uncovered:reverse", {"minimum vertex cover of G - I", "edges not covered by the vertex set"}},
      {"clique-to-kss", {"clique vertices plus the vertices of their edges", "vertices on the X side"}},
      {"kss-to-kkpvc", {"same vertex set", "pendants swapped for unchosen original vertices"}},
  };
  const auto it = maps.find(name);
  return it == maps.end() ? "" : it->second.first + " | " + it->second.second;
}

json witness_json(const Reduction& red) {
  const std::string text = witness_description(red.name);
  const auto bar = text.find(" | ");
  return {{"reduction", red.name},
          {"source", instance_to_json(red.source)},
          {"paramMap", red.param_map},
          {"trivialTarget", red.trivial_target},
          {"forward", text.substr(0, bar)},
          {"backward", bar == std::string::npos ? "" : text.substr(bar + 3)}};
}

int cmd_reduce(const RunConfig& cfg, const std::string& name, const std::string& from, const std::string& to,
               const std::string& pairs) {
  const ReductionSpec& spec = pick_reduction(name, from, to, cfg);
  const Loaded loaded = load_input(cfg);
  const ProblemInstance source = instance_for(cfg, loaded, spec.source);
  const Reduction red = build_reduction(spec.name, source, pairs == "non-adjacent" ? GadgetPairs::non_adjacent : GadgetPairs::all);
  if (cfg.output.empty()) {
    std::cout << dump({{"target", instance_to_json(red.target)}, {"witness", witness_json(red)}});
  } else {
    write_file(cfg.output, dump(instance_to_json(red.target)));
    write_file(cfg.output + ".witness.json", dump(witness_json(red)));
  }
  return kExitYes;
}

int cmd_replay(const RunConfig& cfg, const std::string& trace_path) {
  json trace;
  try {
    trace = json::parse(read_text_file(trace_path));
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("invalid trace JSON: ") + e.what());
  }
  emit(cfg, graph_text(cfg, replay_kernel(trace)));
  return kExitYes;
}

int cmd_kernelize(const RunConfig& cfg, const std::string& trace_path, const std::string& replay,
                  const std::string& rule1_mode) {
  if (!replay.empty()) return cmd_replay(cfg, replay);
  const Loaded loaded = load_input(cfg);
  const WeightedGraph g = expect_weighted(loaded.graph);
  auto b = cfg.params.at("b");
  auto m = cfg.params.at("m");
  if (loaded.instance && loaded.instance->kind == ProblemKind::MMEI) {
    if (!b) b = loaded.instance->param("b");
    if (!m) m = loaded.instance->param("m");
  }
  if (!b || !m) throw UsageError("kernelize needs -b and -m");
  if (rule1_mode != "safe" && rule1_mode != "literal") throw UsageError("--rule1 must be safe or literal");
  const KernelResult kr = kernelize(g, *b, *m, rule1_mode == "safe" ? Rule1Mode::safe : Rule1Mode::literal);
  const json trace = kr.trace();
  if (!trace_path.empty()) write_file(trace_path, dump(trace));
  if (cfg.json_output) {
    emit(cfg, dump({{"verdict", trace["verdict"]},
                    {"before", trace["before"]},
                    {"after", trace["after"]},
                    {"bound", kr.bound},
                    {"closingBound", kr.closing_bound},
                    {"steps", kr.steps.size()},
                    {"kernel", graph_to_json(kr.kernel)}}));
  } else {
    std::string text = "# verdict " + std::string(verdict_name(kr.verdict)) + ", bound " + std::to_string(kr.bound) + "\n";
    emit(cfg, text + write_graph(kr.kernel));
  }
  return kr.verdict == KernelVerdict::no ? kExitNo : kExitYes;
}

// Deterministic bounded draw; avoids the implementation-defined mapping of
// the standard distributions.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

struct GenerateOptions {
  std::string family;
  std::optional<int> n;
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<int> edges;
  std::string weights = "unit";
  std::string source;
};

std::vector<Edge> sample_edges(std::vector<std::pair<int, int>> pairs, int count, std::mt19937_64& rng) {
  if (count < 0 || count > static_cast<int>(pairs.size()))
    throw UsageError("edge count must lie in 0.." + std::to_string(pairs.size()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i)
    std::swap(pairs[i], pairs[i + below(rng, pairs.size() - i)]);
  std::vector<Edge> out;
  for (int i = 0; i < count; ++i) out.push_back({pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second, 1, 1});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

void assign_weights(std::vector<Edge>& edges, const std::string& weights, std::mt19937_64& rng) {
  if (weights == "unit") return;
  if (weights != "01") throw UsageError("--weights must be unit or 01");
  for (Edge& e : edges) e.weight = static_cast<std::int64_t>(below(rng, 2));
}

WeightedGraph named_graph(const std::string& name) {
  std::smatch match;
  std::vector<Edge> edges;
  if (std::regex_match(name, match, std::regex("k(\\d+)"))) {
    const int n = std::stoi(match[1]);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1, 1});
    return WeightedGraph(n, edges);
  }
  if (std::regex_match(name, match, std::regex("k(\\d+),(\\d+)"))) {
    const int a = std::stoi(match[1]);
    const int b = std::stoi(match[2]);
    std::vector<Side> sides(static_cast<std::size_t>(a), Side::X);
    sides.resize(static_cast<std::size_t>(a + b), Side::Y);
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) edges.push_back({u, a + v, 1, 1});
    return WeightedGraph(a + b, edges, sides);
  }
  if (std::regex_match(name, match, std::regex("([pc])(\\d+)"))) {
    const int n = std::stoi(match[2]);
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1, 1});
    if (match[1] == "c") {
      if (n < 3) throw UsageError("cycles need at least 3 vertices");
      edges.push_back({0, n - 1, 1, 1});
    }
    return WeightedGraph(n, edges);
  }
  if (std::regex_match(name, match, std::regex("(\\d+)k2"))) {
    const int copies = std::stoi(match[1]);
    for (int i = 0; i < copies; ++i) edges.push_back({2 * i, 2 * i + 1, 1, 1});
    return WeightedGraph(2 * copies, edges);
  }
  if (name == "prism") {
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
      edges.push_back({u, v, 1, 1});
    return WeightedGraph(6, edges);
  }
  if (name == "petersen") {
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5, 1, 1});
      edges.push_back({i, i + 5, 1, 1});
      edges.push_back({5 + i, 5 + (i + 2) % 5, 1, 1});
    }
    return WeightedGraph(10, edges);
  }
  throw UsageError("unknown named graph '" + name + "'");
}

WeightedGraph family_graph(const GenerateOptions& opts, const std::string& family, std::mt19937_64& rng) {
  auto need = [](const std::optional<int>& value, const char* flag) {
    if (!value || *value < 0) throw UsageError(std::string("this family needs a non-negative ") + flag);
    return *value;
  };
  if (family == "gnm-random") {
    const int n = need(opts.n, "--n");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    auto edges = sample_edges(pairs, need(opts.edges, "--edges"), rng);
    assign_weights(edges, opts.weights, rng);
    return WeightedGraph(n, edges);
  }
  if (family == "bipartite-random") {
    const int nx = need(opts.nx, "--nx");
    const int ny = need(opts.ny, "--ny");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nx; ++u)
      for (int v = 0; v < ny; ++v) pairs.emplace_back(u, nx + v);
    auto edges = sample_edges(pairs, need(opts.edges, "--edges"), rng);
    assign_weights(edges, opts.weights, rng);
    std::vector<Side> sides(static_cast<std::size_t>(nx), Side::X);
    sides.resize(static_cast<std::size_t>(nx + ny), Side::Y);
    return WeightedGraph(nx + ny, edges, sides);
  }
  if (family == "clique" || family == "cycle" || family == "path") {
    const int n = need(opts.n, "--n");
    const char prefix = family == "clique" ? 'k' : family == "cycle" ? 'c' : 'p';
    WeightedGraph g = named_graph(std::string(1, prefix) + std::to_string(n));
    auto edges = g.edges();
    assign_weights(edges, opts.weights, rng);
    return WeightedGraph(g.num_vertices(), edges);
  }
  throw UsageError("unknown family '" + family + "'");
}

int cmd_generate(const RunConfig& cfg, const GenerateOptions& opts) {
  std::mt19937_64 rng(cfg.seed);
  if (opts.family.rfind("gadget:", 0) != 0) {
    emit(cfg, graph_text(cfg, family_graph(opts, opts.family, rng)));
    return kExitYes;
  }
  const ReductionSpec& spec = find_reduction_spec(opts.family.substr(7));
  WeightedGraph source;
  if (!opts.source.empty()) {
    source = named_graph(opts.source);
  } else if (!cfg.input.empty()) {
    source = expect_weighted(load_input(cfg).graph);
  } else {
    source = family_graph(opts, spec.bipartite_source ? "bipartite-random" : "gnm-random", rng);
  }
  if (spec.bipartite_source && !source.bipartition()) {
    const auto sides = two_coloring(source);
    if (!sides) throw UsageError("reduction '" + spec.name + "' needs a bipartite source");
    source = source.with_bipartition(*sides);
  }
  const ProblemInstance inst = make_instance(spec.source, source, cfg.given(param_names(spec.source)), cfg.domination());
  const Reduction red = build_reduction(spec.name, inst);
  emit(cfg, cfg.json_output ? dump(instance_to_json(red.target)) : graph_text(cfg, red.target.graph));
  return kExitYes;
}

int cmd_verify(const RunConfig& cfg, const std::string& name, int max_n, int max_side, bool mutate,
               const std::string& pairs) {
  SweepOptions opts;
  opts.max_n = max_n;
  opts.max_side = max_side;
  opts.jobs = cfg.jobs;
  opts.caps = cfg.caps();
  opts.mutate = mutate;
  opts.pairs = pairs == "non-adjacent" ? GadgetPairs::non_adjacent : GadgetPairs::all;
  std::vector<std::string> names;
  if (name == "all")
    for (const auto& spec : reduction_specs()) names.push_back(spec.name);
  else
    names.push_back(find_reduction_spec(name).name);
  json reports = json::array();
  bool passed = true;
  for (const auto& n : names) {
    const VerifyReport report = verify_equivalence(n, opts);
    passed = passed && report.passed();
    reports.push_back(report.to_json());
  }
  emit(cfg, dump(names.size() == 1 ? reports[0] : json{{"reports", reports}, {"passed", passed}}));
  return passed ? kExitYes : kExitNo;
}

struct BenchRow {
  std::string instance;
  std::string algo;
  std::string optimum;
  std::string decision;
  std::int64_t nodes = 0;
  std::optional<double> millis;
  std::string error;
};

std::vector<BenchRow> bench_instance(const fs::path& file, const std::vector<std::string>& algos, const Caps& caps,
                                     bool timing) {
  std::vector<BenchRow> rows;
  ProblemInstance inst = instance_from_json(json::parse(read_text_file(file.string())));
  for (const auto& algo : algos) {
    BenchRow row;
    row.instance = file.filename().string();
    row.algo = algo;
    const auto start = std::chrono::steady_clock::now();
    try {
      const OracleResult res = run_algo(algo, inst, caps);
      row.optimum = res.optimum.to_string();
      row.decision = res.decision ? "yes" : "no";
      row.nodes = res.nodes;
    } catch (const UsageError&) {
      continue;  // algorithm does not apply to this instance kind
    } catch (const std::exception& e) {
      row.error = e.what();
      row.optimum = "error";
      row.decision = "error";
    }
    if (timing) row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_bench(const RunConfig& cfg, const std::string& corpus, const std::string& algo_list) {
  if (corpus.empty() || !fs::is_directory(corpus)) {
    std::cerr << "error: corpus directory '" << corpus << "' not found\n";
    return kExitError;
  }
  std::vector<std::string> algos;
  std::stringstream split(algo_list);
  for (std::string part; std::getline(split, part, ',');)
    if (!part.empty()) algos.push_back(part);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  const Caps caps = cfg.caps();
  std::vector<std::vector<BenchRow>> results(files.size());
  std::vector<std::string> failures(files.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = bench_instance(files[i], algos, caps, cfg.timing);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < files.size(); i += jobs) work(i);
    });
  for (auto& t : workers) t.join();
  for (std::size_t i = 0; i < files.size(); ++i)
    if (!failures[i].empty()) throw ValidationError(files[i].filename().string() + ": " + failures[i]);

  std::ostringstream csv;
  std::ostringstream table;
  csv << "instance,algo,optimum,decision,nodes,millis\n";
  for (const auto& rows : results)
    for (const auto& row : rows) {
      std::ostringstream millis;
      if (row.millis) millis << std::fixed << std::setprecision(3) << *row.millis;
      csv << row.instance << ',' << row.algo << ',' << row.optimum << ',' << row.decision << ',' << row.nodes << ','
          << millis.str() << '\n';
      table << std::left << std::setw(32) << row.instance << std::setw(8) << row.algo << std::setw(10) << row.optimum
            << std::setw(6) << row.decision << std::right << std::setw(12) << row.nodes << std::setw(12)
            << (row.millis ? millis.str() : "-") << (row.error.empty() ? "" : "  " + row.error) << '\n';
    }
  if (cfg.output.empty()) {
    std::cout << csv.str();
  } else {
    write_file(cfg.output, csv.str());
    std::cout << table.str();
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge interdiction workbench: exact oracles, FPT solvers, kernels and reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("-i,--input", cfg.input, "Input graph or instance file");
  app.add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  app.add_flag("--json", cfg.json_output, "Emit graphs and instances as JSON");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify and bench")->check(CLI::PositiveNumber);
  app.add_option("--cap-edges", cfg.cap_edges, "Edge-subset cap exponent (default 22)");
  app.add_option("--cap-vertices", cfg.cap_vertices, "Vertex-subset cap exponent (default 20)");
  app.add_flag("--timing", cfg.timing, "Record wall-clock times (outputs are then not reproducible)");
  for (auto& [name, value] : cfg.params) {
    const std::string flags = name.size() == 1 ? "-" + name + ",--" + name : "--" + name;
    app.add_option(flags, value, "Parameter " + name);
  }
  app.add_option("--mode", cfg.mode, "Domination counting: inclusive or exclusive");

  std::string problem;
  std::string algo = "oracle";
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("--problem", problem, "Problem kind, or mve01 / mmei-bipartite / pvc-bipartite");
  solve->add_option("--algo", algo, "oracle, fpt or kernel");

  std::string reduction;
  std::string from;
  std::string to;
  std::string pairs = "all";
  auto* reduce = app.add_subcommand("reduce", "Transform an instance through a reduction");
  reduce->add_option("--reduction", reduction, "Reduction name");
  reduce->add_option("--from", from, "Source problem kind");
  reduce->add_option("--to", to, "Target problem kind");
  reduce->add_option("--pairs", pairs, "Gadget pairs for kway-to-mve: all or non-adjacent");

  std::string trace_path;
  std::string replay_path;
  std::string rule1_mode = "safe";
  auto* kern = app.add_subcommand("kernelize", "Apply the MMEI reduction rules");
  kern->add_option("--trace", trace_path, "Write the replayable trace here");
  kern->add_option("--replay", replay_path, "Replay a trace instead of kernelizing");
  kern->add_option("--rule1", rule1_mode, "safe (keep b+1 pendants) or literal (keep b)");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--family", gen.family, "gnm-random, bipartite-random, clique, cycle, path, gadget:<reduction>")
      ->required();
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--nx", gen.nx, "X side size");
  generate->add_option("--ny", gen.ny, "Y side size");
  generate->add_option("--edges", gen.edges, "Edge count for random families");
  generate->add_option("--weights", gen.weights, "unit or 01");
  generate->add_option("--source", gen.source, "Named source graph: kN, kA,B, pN, cN, NK2, prism, petersen");

  std::string verify_name;
  int max_n = 5;
  int max_side = 3;
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "Exhaustive equivalence sweep of a reduction");
  verify->add_option("--reduction", verify_name, "Reduction name or 'all'")->required();
  verify->add_option("--max-n", max_n, "Largest general source graph");
  verify->add_option("--max-side", max_side, "Largest bipartite side");
  verify->add_flag("--mutate", mutate, "Shift the target threshold by one (verifier self-test)");
  verify->add_option("--pairs", pairs, "Gadget pairs for kway-to-mve: all or non-adjacent");

  std::string corpus;
  std::string algos = "oracle,fpt";
  auto* bench = app.add_subcommand("bench", "Run algorithms over a corpus of instance files");
  bench->add_option("--corpus", corpus, "Directory of instance JSON files")->required();
  bench->add_option("--algos", algos, "Comma-separated algorithms");

  std::string replay_trace;
  auto* replay = app.add_subcommand("replay", "Replay a kernelization trace");
  replay->add_option("--trace", replay_trace, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) return cmd_solve(cfg, problem, algo);
    if (*reduce) return cmd_reduce(cfg, reduction, from, to, pairs);
    if (*kern) return cmd_kernelize(cfg, trace_path, replay_path, rule1_mode);
    if (*generate) return cmd_generate(cfg, gen);
    if (*verify) return cmd_verify(cfg, verify_name, max_n, max_side, mutate, pairs);
    if (*bench) return cmd_bench(cfg, corpus, algos);
    if (*replay) return cmd_replay(cfg, replay_trace);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
