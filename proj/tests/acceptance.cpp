// Acceptance suite: one PASS/FAIL line per criterion, exit status = failures.
// Pass criterion names (C1..C8) as arguments to run a subset.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "interdict/conflict_graph.hpp"
#include "interdict/enumerate.hpp"
#include "interdict/fpt.hpp"
#include "interdict/kernel.hpp"
#include "interdict/oracle.hpp"
#include "interdict/reduction.hpp"
#include "interdict/verify.hpp"

using namespace interdict;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Facts gathered by one criterion and asserted by another.
struct Shared {
  std::int64_t fpt_weight_one_checked = 0;
  std::int64_t fpt_weight_one_violations = 0;
  std::vector<VerifyReport> reports;
  std::int64_t conflict_graphs = 0;
  std::int64_t odd_conflict_graphs = 0;
};

Shared shared;

std::string fmt(const char* format, auto... args) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), format, args...);
  return buf.data();
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, int weight_hi, int cost_hi) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 5 < 2) edges.push_back({u, v, uniform(rng, weight_hi == 1 ? 1 : 0, weight_hi), uniform(rng, 1, cost_hi)});
  return WeightedGraph(n, edges);
}

WeightedGraph random_bipartite(std::mt19937_64& rng, int nx, int ny) {
  std::vector<Edge> edges;
  for (int u = 0; u < nx; ++u)
    for (int v = 0; v < ny; ++v)
      if (rng() % 2) edges.push_back({u, nx + v, 1, 1});
  std::vector<Side> sides(static_cast<std::size_t>(nx), Side::X);
  sides.resize(static_cast<std::size_t>(nx + ny), Side::Y);
  return WeightedGraph(nx + ny, edges, sides);
}

FlowNetwork random_network(std::mt19937_64& rng, int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u < v && v != 0 && u != n - 1 && rng() % 2) arcs.push_back({u, v, uniform(rng, 1, 3), uniform(rng, 1, 2)});
  return FlowNetwork(n, arcs, 0, n - 1);
}

// C1 ------------------------------------------------------------------------

Outcome c1_oracle_consistency() {
  std::mt19937_64 rng(20240601);
  const ProblemKind kinds[] = {ProblemKind::MVE,  ProblemKind::MMEI, ProblemKind::FEI,
                               ProblemKind::MMMEI, ProblemKind::PVC,  ProblemKind::PEDS,
                               ProblemKind::KWAY, ProblemKind::KSS,  ProblemKind::KKPVC};
  int certificates = 0;
  int infeasible = 0;
  int identities = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < 200; ++i) {
    const ProblemKind kind = kinds[i % 9];
    const int n = uniform(rng, 2, 7);
    const WeightedGraph g = random_graph(rng, n, kind == ProblemKind::MVE ? 3 : 1, kind == ProblemKind::MMEI ? 2 : 1);
    const FlowNetwork net = random_network(rng, n);
    const WeightedGraph bip = random_bipartite(rng, uniform(rng, 1, 4), uniform(rng, 1, 4));
    const std::int64_t small = uniform(rng, 0, 3);

    ProblemInstance inst;
    switch (kind) {
      case ProblemKind::MVE: inst = make_instance(kind, g, {{"b", small}, {"r", 1}}); break;
      case ProblemKind::MMEI: inst = make_instance(kind, g, {{"b", small}, {"m", 1}}); break;
      case ProblemKind::FEI: inst = make_instance(kind, net, {{"b", small}, {"r", 1}}); break;
      case ProblemKind::MMMEI: inst = make_instance(kind, g, {{"b", small}, {"r", 1}}); break;
      case ProblemKind::PVC: inst = make_instance(kind, g, {{"k", uniform(rng, 0, n + 1)}, {"x", 2}}); break;
      case ProblemKind::PEDS:
        inst = make_instance(kind, g, {{"k", small}, {"x", 3}},
                             rng() % 2 ? DominationMode::inclusive : DominationMode::exclusive);
        break;
      case ProblemKind::KWAY: inst = make_instance(kind, g, {{"s", small}, {"k", 2}}); break;
      default:
        inst = make_instance(kind, bip, {{"k1", uniform(rng, 0, 3)}, {"k2", uniform(rng, 0, 3)}, {"x", 2}});
        break;
    }
    const OracleResult res = solve_oracle(inst);
    if (!res.feasible) {
      ++infeasible;
      if (!res.optimum.is_infinite() || res.decision) failures.push_back(fmt("instance %d: infeasible but finite", i));
    } else {
      ++certificates;
      const auto value = evaluate_certificate(inst, res.certificate);
      if (!value || !(*value == res.optimum))
        failures.push_back(fmt("instance %d (%s): certificate re-evaluates to %s, optimum %s", i,
                               std::string(kind_name(kind)).c_str(),
                               value ? value->to_string().c_str() : "invalid", res.optimum.to_string().c_str()));
    }

    if (!(oracle_mmei(g, 0).optimum == ExtendedWeight(max_matching(g))))
      failures.push_back(fmt("instance %d: oracle_mmei(G,0) != nu(G)", i));
    if (!(oracle_fei(net, 0).optimum == ExtendedWeight(max_flow(net).value)))
      failures.push_back(fmt("instance %d: oracle_fei(N,0) != max_flow(N)", i));
    if (!(oracle_mmmei(g, 0).optimum == ExtendedWeight(min_maximal_matching(g))))
      failures.push_back(fmt("instance %d: oracle_mmmei(G,0) != lambda(G)", i));
    identities += 3;
  }
  Outcome out;
  out.pass = failures.empty();
  out.detail = fmt("200 instances, %d certificates re-evaluated, %d infeasible, %d identities", certificates,
                   infeasible, identities);
  if (!failures.empty()) out.detail += "; first failure: " + failures.front();
  return out;
}

// C2 ------------------------------------------------------------------------

Outcome c2_fpt_correctness() {
  std::mt19937_64 rng(7);
  std::int64_t graphs = 0;
  std::int64_t cases = 0;
  std::int64_t mismatches = 0;
  std::string first;
  for (int n = 1; n <= 7; ++n) {
    for (const WeightedGraph& base : connected_graphs(n)) {
      ++graphs;
      // All-0, all-1 and three random 0/1 assignments per graph.
      for (int w = 0; w < 5; ++w) {
        std::vector<Edge> edges = base.edges();
        for (Edge& e : edges) e.weight = w == 0 ? 0 : w == 1 ? 1 : static_cast<std::int64_t>(rng() & 1U);
        const WeightedGraph g(n, edges);
        const int lambda = n >= 2 ? edge_connectivity(g).d : 0;
        for (std::int64_t b = 1; b <= 3; ++b) {
          ++cases;
          const OracleResult fpt = fpt_mve_01(g, b);
          const OracleResult oracle = oracle_mve(g, b);
          const auto value = evaluate_certificate(make_instance(ProblemKind::MVE, g, {{"b", b}, {"r", 0}}),
                                                  fpt.certificate);
          if (!(fpt.optimum == oracle.optimum) || !value || !(*value == fpt.optimum)) {
            if (mismatches++ == 0)
              first = fmt("n=%d b=%lld fpt=%s oracle=%s", n, static_cast<long long>(b),
                          fpt.optimum.to_string().c_str(), oracle.optimum.to_string().c_str());
          }
          if (n >= 2 && lambda >= b + 1) {
            ++shared.fpt_weight_one_checked;
            for (int e : std::get<EdgeSet>(fpt.certificate).edges)
              if (g.edge(e).weight == 1) {
                ++shared.fpt_weight_one_violations;
                break;
              }
          }
        }
      }
    }
  }
  Outcome out;
  out.pass = mismatches == 0 && graphs >= 500;
  out.detail = fmt("%lld connected graphs x 5 weightings x b=1..3 = %lld cases, %lld mismatches",
                   static_cast<long long>(graphs), static_cast<long long>(cases), static_cast<long long>(mismatches));
  if (!first.empty()) out.detail += "; first: " + first;
  return out;
}

// C3 ------------------------------------------------------------------------

Outcome c3_kernel_safety() {
  const bool bounds = kernel_bound(1, 1) == 16 && kernel_bound(2, 2) == 94;
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  struct Tally {
    std::int64_t cases = 0, reduced = 0, no = 0, oracle_calls = 0, unsafe = 0, over = 0;
    std::string first;
  };
  std::vector<Tally> tallies(hw);
  std::vector<std::pair<int, std::uint64_t>> work;
  for (int n = 1; n <= 9; ++n)
    for (std::uint64_t code : canonical_codes(n)) work.emplace_back(n, code);

  std::vector<std::thread> threads;
  for (unsigned t = 0; t < hw; ++t)
    threads.emplace_back([&, t] {
      Tally& tally = tallies[t];
      for (std::size_t i = t; i < work.size(); i += hw) {
        const auto [n, code] = work[i];
        const WeightedGraph g = graph_from_code(n, code);
        std::optional<ExtendedWeight> original[3];
        for (std::int64_t b = 1; b <= 2; ++b)
          for (std::int64_t m = 1; m <= 2; ++m) {
            ++tally.cases;
            const KernelResult res = kernelize(g, b, m);
            const bool changed = res.kernel.num_vertices() != n;
            if (changed) ++tally.reduced;
            if (res.verdict == KernelVerdict::no) ++tally.no;
            if (res.verdict != KernelVerdict::no && res.kernel.num_edges() > kernel_bound(b, m)) ++tally.over;
            // An unchanged graph solved directly is trivially preserved.
            if (!changed && res.verdict != KernelVerdict::no) continue;
            auto& opt = original[b];
            if (!opt) {
              opt = oracle_mmei(g, b).optimum;
              ++tally.oracle_calls;
            }
            const bool want = *opt <= ExtendedWeight(m);
            bool got = res.verdict == KernelVerdict::yes;
            if (res.verdict == KernelVerdict::reduced) {
              ++tally.oracle_calls;
              got = oracle_mmei(res.kernel, b).optimum <= ExtendedWeight(m);
            }
            if (want != got && tally.unsafe++ == 0)
              tally.first = fmt("n=%d code=%llx b=%lld m=%lld", n, static_cast<unsigned long long>(code),
                                static_cast<long long>(b), static_cast<long long>(m));
          }
      }
    });
  for (auto& th : threads) th.join();
  Tally sum;
  for (const Tally& t : tallies) {
    sum.cases += t.cases;
    sum.reduced += t.reduced;
    sum.no += t.no;
    sum.oracle_calls += t.oracle_calls;
    sum.unsafe += t.unsafe;
    sum.over += t.over;
    if (sum.first.empty()) sum.first = t.first;
  }
  Outcome out;
  out.pass = bounds && sum.unsafe == 0 && sum.over == 0;
  out.detail = fmt("%zu graphs on <=9 vertices, %lld cases, %lld reduced, %lld no-verdicts, %lld oracle calls, "
                   "%lld decision changes, %lld kernels over B; B(1,1)=%lld B(2,2)=%lld",
                   work.size(), static_cast<long long>(sum.cases), static_cast<long long>(sum.reduced),
                   static_cast<long long>(sum.no), static_cast<long long>(sum.oracle_calls),
                   static_cast<long long>(sum.unsafe), static_cast<long long>(sum.over),
                   static_cast<long long>(kernel_bound(1, 1)), static_cast<long long>(kernel_bound(2, 2)));
  if (!sum.first.empty()) out.detail += "; first: " + sum.first;
  return out;
}

// C4 ------------------------------------------------------------------------

Outcome c4_reduction_sweep() {
  SweepOptions opts;
  opts.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::int64_t points = 0, checked = 0, skipped = 0, counterexamples = 0;
  std::ostringstream names;
  std::ostringstream skips;
  shared.reports.clear();
  for (const auto& spec : reduction_specs()) {
    VerifyReport report = verify_equivalence(spec.name, opts);
    points += report.points;
    checked += report.checked;
    skipped += report.skipped;
    counterexamples += static_cast<std::int64_t>(report.counterexamples.size());
    if (!report.passed()) names << ' ' << spec.name;
    if (report.skipped > 0) skips << ' ' << spec.name << '=' << report.skipped;
    shared.reports.push_back(std::move(report));
  }
  Outcome out;
  out.pass = counterexamples == 0;
  out.detail = fmt("%zu reductions, %lld points, %lld checked, %lld counterexamples, %lld skipped beyond caps",
                   reduction_specs().size(), static_cast<long long>(points), static_cast<long long>(checked),
                   static_cast<long long>(counterexamples), static_cast<long long>(skipped));
  if (!skips.str().empty()) out.detail += " (" + skips.str().substr(1) + ")";
  if (!names.str().empty()) out.detail += "; failing:" + names.str();
  return out;
}

// C5 ------------------------------------------------------------------------

bool independent_by_adjacency(const WeightedGraph& g, const VertexSet& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (vs[a] == vs[b] || g.adjacent(vs[a], vs[b])) return false;
  return true;
}

// Whether the link multigraph of a conflict graph has an odd cycle.
bool has_odd_cycle(const ConflictGraph& cg) {
  std::map<int, std::vector<int>> adj;
  for (const auto& link : cg.links) {
    adj[link.a].push_back(link.b);
    adj[link.b].push_back(link.a);
  }
  std::map<int, int> color;
  for (const auto& [start, _] : adj) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!color.count(v)) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

Outcome c5_back_mapping() {
  std::int64_t certificates = 0, failures = 0, tree = 0, peel = 0, cycle = 0;
  std::string first;
  for (const WeightedGraph& source : general_sweep(5)) {
    const int n = source.num_vertices();
    const WeightedGraph gadget = is_to_peds_gadget(source);
    const int edges = gadget.num_edges();
    for (int k = 1; k <= n; ++k) {
      const std::int64_t target = 2LL * k * n;
      std::vector<int> chosen;
      // Each added edge raises the inclusive count by at most 2n+1.
      std::function<void(int)> dfs = [&](int start) {
        const int size = static_cast<int>(chosen.size());
        const std::int64_t inclusive = domination_count(gadget, chosen, DominationMode::inclusive);
        if (inclusive + static_cast<std::int64_t>(k - size) * (2LL * n + 1) < target + k) return;
        if (size == k) {
          if (domination_count(gadget, chosen, DominationMode::exclusive) != target) return;
          ++certificates;
          ++shared.conflict_graphs;
          const ConflictGraph cg = build_conflict_graph(gadget, chosen, n);
          if (has_odd_cycle(cg)) ++shared.odd_conflict_graphs;
          try {
            const Extraction ext = extract_independent_set(gadget, chosen, source, k);
            if (static_cast<int>(ext.vertices.size()) != k || !independent_by_adjacency(source, ext.vertices)) {
              if (failures++ == 0) first = fmt("n=%d k=%d: not an independent %d-set", n, k, k);
            }
            if (ext.stats.core_nodes > 0)
              ++cycle;
            else if (ext.stats.peeled_by_link > 0)
              ++peel;
            else
              ++tree;
          } catch (const ExtractionError& e) {
            if (failures++ == 0) first = fmt("n=%d k=%d: %s", n, k, e.what());
          }
          return;
        }
        for (int e = start; e < edges; ++e) {
          chosen.push_back(e);
          dfs(e + 1);
          chosen.pop_back();
        }
      };
      dfs(0);
    }
  }
  Outcome out;
  out.pass = failures == 0 && tree > 0 && peel > 0 && cycle > 0;
  out.detail = fmt("%lld full certificates on sources <=5 vertices: %lld acyclic link-free, %lld acyclic peeled, %lld with an even "
                   "conflict cycle; %lld failures",
                   static_cast<long long>(certificates), static_cast<long long>(tree), static_cast<long long>(peel),
                   static_cast<long long>(cycle), static_cast<long long>(failures));
  if (!first.empty()) out.detail += "; first: " + first;
  return out;
}

// C6 ------------------------------------------------------------------------

Outcome c6_structural_claims() {
  Outcome out;
  std::ostringstream detail;
  bool have_mve = false, have_fei = false;
  for (const VerifyReport& r : shared.reports) {
    if (r.reduction != "kway-to-mve" && r.reduction != "mmei-to-fei") continue;
    (r.reduction == "kway-to-mve" ? have_mve : have_fei) = r.structural_checked > 0;
    out.pass = out.pass && r.structural_violations.empty();
    detail << r.reduction << ": " << r.structural_checked << " optimal certificates, "
           << r.structural_violations.size() << " violations; ";
  }
  out.pass = out.pass && have_mve && have_fei && shared.fpt_weight_one_checked > 0 &&
             shared.fpt_weight_one_violations == 0;
  detail << "fpt on (b+1)-edge-connected inputs: " << shared.fpt_weight_one_checked << " certificates, "
         << shared.fpt_weight_one_violations << " with a weight-1 edge";
  out.detail = detail.str();
  return out;
}

// C7 ------------------------------------------------------------------------

std::int64_t partition_number(int n) {
  // Euler's pentagonal recurrence.
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > i) break;
      const std::int64_t sign = j % 2 == 1 ? 1 : -1;
      p[static_cast<std::size_t>(i)] += sign * p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i) p[static_cast<std::size_t>(i)] += sign * p[static_cast<std::size_t>(i - g2)];
    }
  return p[static_cast<std::size_t>(n)];
}

int brute_vertex_cover(const WeightedGraph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool cover = true;
    for (const Edge& e : g.edges())
      if (!((mask >> e.u) & 1U) && !((mask >> e.v) & 1U)) cover = false;
    if (cover) best = size;
  }
  return best;
}

Outcome c7_combinatorics() {
  int partition_errors = 0;
  for (int b = 0; b <= 20; ++b)
    if (static_cast<std::int64_t>(additive_partitions(b).size()) != partition_number(b)) ++partition_errors;
  const bool anchors = additive_partitions(4).size() == 5 && additive_partitions(5).size() == 7;
  int koenig_graphs = 0, koenig_errors = 0;
  for (const WeightedGraph& g : bipartite_sweep(4)) {
    ++koenig_graphs;
    if (max_matching(g) != brute_vertex_cover(g)) ++koenig_errors;
  }
  Outcome out;
  out.pass = partition_errors == 0 && anchors && koenig_errors == 0 && shared.conflict_graphs > 0 &&
             shared.odd_conflict_graphs == 0;
  out.detail = fmt("p(b) for b<=20: %d mismatches (p(4)=%zu, p(5)=%zu); conflict graphs: %lld, %lld with an odd cycle; "
                   "Koenig on %d bipartite graphs: %d mismatches",
                   partition_errors, additive_partitions(4).size(), additive_partitions(5).size(),
                   static_cast<long long>(shared.conflict_graphs), static_cast<long long>(shared.odd_conflict_graphs),
                   koenig_graphs, koenig_errors);
  return out;
}

// C8 ------------------------------------------------------------------------

struct CommandOutput {
  int exit = -1;
  std::string out;
};

CommandOutput shell(const std::string& cmd) {
  CommandOutput r;
  FILE* pipe = ::popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs every command once in a fresh directory and hashes stdout, exit codes
// and written files.
std::map<std::string, std::uint64_t> run_corpus(const fs::path& dir, const std::vector<std::string>& commands) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::map<std::string, std::uint64_t> hashes;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string cmd = commands[i];
    for (std::size_t at; (at = cmd.find("@DIR@")) != std::string::npos;) cmd.replace(at, 5, dir.string());
    const CommandOutput r = shell(cmd);
    hashes[commands[i]] = fnv1a(std::to_string(r.exit) + '\n' + r.out);
  }
  for (const auto& entry : fs::directory_iterator(dir))
    hashes["file:" + entry.path().filename().string()] = fnv1a(read_all(entry.path()));
  return hashes;
}

Outcome c8_determinism() {
  const std::string cli = INTERDICT_CLI;
  const std::string corpus = INTERDICT_CORPUS;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::string> commands;
  const std::string seed = " --seed 42";
  for (const fs::path& file : files) {
    const std::string in = " -i " + file.string();
    const std::string stem = file.stem().string();
    const auto inst = instance_from_json(nlohmann::json::parse(read_all(file)));
    for (const char* algo : {"oracle", "fpt", "kernel"}) {
      commands.push_back(cli + " solve" + in + " --algo " + algo + " --json" + seed);
      commands.push_back(cli + " solve" + in + " --algo " + algo + seed);
    }
    if (inst.kind == ProblemKind::MMEI) {
      const std::string trace = " --trace @DIR@/" + stem + ".trace.json";
      commands.push_back(cli + " kernelize" + in + trace + seed);
      commands.push_back(cli + " kernelize" + in + " --json --rule1 literal" + seed);
      commands.push_back(cli + " replay" + trace + seed);
    }
    for (const auto& spec : reduction_specs()) {
      if (spec.source != inst.kind) continue;
      commands.push_back(cli + " reduce --reduction " + spec.name + in + seed);
      commands.push_back(cli + " reduce --reduction " + spec.name + in + " -o @DIR@/" + stem + "." + spec.name +
                         ".json" + seed);
    }
  }
  for (const char* family : {"gnm-random --n 9 --edges 14 --weights 01", "bipartite-random --nx 4 --ny 5 --edges 9",
                             "clique --n 5", "cycle --n 7", "path --n 6",
                             "gadget:is-to-peds --source c5 -k 2", "gadget:kway-to-mve --source p4 -s 1 -k 2",
                             "gadget:pvc-to-mmei --source p4 -k 2 -x 3"}) {
    commands.push_back(cli + " generate --family " + family + seed);
    commands.push_back(cli + " generate --family " + family + " --json" + seed);
  }
  commands.push_back(cli + " verify --reduction all --max-n 4 --max-side 2 --jobs 4" + seed);
  commands.push_back(cli + " verify --reduction kway-to-mve --max-n 4 --mutate" + seed);
  commands.push_back(cli + " bench --corpus " + corpus + " --algos oracle,fpt,kernel --jobs 4" + seed);
  commands.push_back(cli + " bench --corpus " + corpus + " --algos oracle,fpt,kernel -o @DIR@/bench.csv" + seed);

  const fs::path base = fs::temp_directory_path() / "interdict_acceptance_c8";
  const auto first = run_corpus(base / "run", commands);
  const auto second = run_corpus(base / "run", commands);
  fs::remove_all(base);
  int differing = 0;
  std::string which;
  for (const auto& [key, hash] : first) {
    const auto it = second.find(key);
    if (it == second.end() || it->second != hash) {
      if (differing++ == 0) which = key;
    }
  }
  if (first.size() != second.size()) ++differing;
  Outcome out;
  out.pass = differing == 0;
  out.detail = fmt("%zu commands over %zu corpus instances, %zu outputs hashed, %d differ", commands.size(),
                   files.size(), first.size(), differing);
  if (!which.empty()) out.detail += "; first: " + which;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1", c1_oracle_consistency}, {"C2", c2_fpt_correctness},  {"C3", c3_kernel_safety},
      {"C4", c4_reduction_sweep},    {"C5", c5_back_mapping},     {"C6", c6_structural_claims},
      {"C7", c7_combinatorics},      {"C8", c8_determinism}};
  std::set<std::string> selected(argv + 1, argv + argc);
  // C6 and C7 assert facts gathered by C2, C4 and C5.
  if (selected.count("C6")) selected.insert({"C2", "C4"});
  if (selected.count("C7")) selected.insert("C5");
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::cout << name << ' ' << (outcome.pass ? "PASS" : "FAIL") << "  " << outcome.detail << fmt("  [%.1fs]", secs)
              << std::endl;
  }
  return failures;
}
