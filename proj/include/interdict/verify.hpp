#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "interdict/oracle.hpp"
#include "interdict/reduction.hpp"

namespace interdict {

struct SweepOptions {
  int max_n = 5;     // general sources: every graph on 1..max_n vertices
  int max_side = 3;  // bipartite sources: sides of 1..max_side vertices
  int jobs = 1;
  Caps caps;
  bool mutate = false;  // verifier self-test: shift the target threshold by one
  GadgetPairs pairs = GadgetPairs::all;
};

struct VerifyReport {
  std::string reduction;
  std::int64_t points = 0;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::int64_t source_yes = 0;
  std::int64_t structural_checked = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json skipped_points = nlohmann::json::array();
  // Violations of the per-reduction optimal-certificate claims (gadget edges
  // in b-MVE images, cost-(b+1) arcs in FEI images).
  nlohmann::json structural_violations = nlohmann::json::array();

  bool passed() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
};

/// Source graphs of a reduction's sweep, in enumeration order.
std::vector<WeightedGraph> sweep_sources(const ReductionSpec& spec, const SweepOptions& opts);

/// Every parameter point of the sweep for one source graph.
std::vector<Params> sweep_parameters(const ReductionSpec& spec, const WeightedGraph& g);

/// Checks decision equivalence and both witness maps at every parameter
/// point of the sweep. Points beyond the oracle caps are skipped and listed.
VerifyReport verify_equivalence(const std::string& name, const SweepOptions& opts = {});

}  // namespace interdict
