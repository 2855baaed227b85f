#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "interdict/instance.hpp"

namespace interdict {

/// Enumeration limits. A search that would visit more than 2^max_edges edge
/// subsets (or 2^max_vertices vertex subsets) is refused with CapExceeded.
struct Caps {
  int max_edges = 22;
  int max_vertices = 20;

  /// Defaults overridden by INTERDICT_CAP_EDGES / INTERDICT_CAP_VERTICES.
  static Caps from_env();
  std::uint64_t edge_subset_limit() const;
  std::uint64_t vertex_subset_limit() const;
};

struct OracleResult {
  ExtendedWeight optimum;
  Certificate certificate;
  bool feasible = true;
  bool decision = false;
  std::int64_t nodes = 0;
  nlohmann::json stats = nlohmann::json::object();
};

// Certificates are the smallest optimal sets, lexicographically first among
// those of that size. Budgets: MVE/MMMEI/KWAY/PEDS count edges, MMEI/FEI sum
// interdiction costs.
OracleResult oracle_mve(const WeightedGraph& g, std::int64_t b, const Caps& caps = {});
OracleResult oracle_mmei(const WeightedGraph& g, std::int64_t b, const Caps& caps = {});
OracleResult oracle_fei(const FlowNetwork& net, std::int64_t b, const Caps& caps = {});
OracleResult oracle_mmmei(const WeightedGraph& g, std::int64_t b, const Caps& caps = {});
OracleResult oracle_pvc(const WeightedGraph& g, std::int64_t k, const Caps& caps = {});
OracleResult oracle_peds(const WeightedGraph& g, std::int64_t k, DominationMode mode,
                         const Caps& caps = {});
/// stats["profile"][i] holds the best component count with at most i deletions.
OracleResult oracle_kway(const WeightedGraph& g, std::int64_t s, const Caps& caps = {});
OracleResult oracle_kss(const WeightedGraph& g, std::int64_t k1, std::int64_t k2,
                        const Caps& caps = {});
OracleResult oracle_kkpvc(const WeightedGraph& g, std::int64_t k1, std::int64_t k2,
                          const Caps& caps = {});
OracleResult oracle_independent_set(const WeightedGraph& g, const Caps& caps = {});
OracleResult oracle_clique(const WeightedGraph& g, const Caps& caps = {});

/// Dispatches on the instance kind and fills in the decision.
OracleResult solve_oracle(const ProblemInstance& inst, const Caps& caps = {});

/// Saturating sum of C(n, i) for i = 0..k.
std::uint64_t binomial_prefix_sum(int n, int k, std::uint64_t limit);

}  // namespace interdict
