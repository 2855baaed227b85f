#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "interdict/instance.hpp"

namespace interdict {

/// A source instance, its transformed target, and witness maps in both
/// directions. `trivial_target` marks parameter points whose answer is "no"
/// outright; the target is then a fixed no-instance and the maps are unused.
struct Reduction {
  std::string name;
  ProblemInstance source;
  ProblemInstance target;
  nlohmann::json param_map = nlohmann::json::object();
  bool trivial_target = false;
  std::function<Certificate(const Certificate&)> forward;
  std::function<Certificate(const Certificate&)> backward;
};

// Which vertex pairs receive a connection gadget in the k-way cut image.
// `non_adjacent` follows the original construction and is unsound whenever a
// small cut isolates a set whose pairs are all adjacent (K3, s=2, k=3).
enum class GadgetPairs { all, non_adjacent };

Reduction red_kway_to_mve(const WeightedGraph& g, std::int64_t s, std::int64_t k,
                          GadgetPairs pairs = GadgetPairs::all);
Reduction red_pvc_to_mmei(const WeightedGraph& g, std::int64_t k, std::int64_t x);
Reduction equiv_pvc_to_mmei_bipartite(const WeightedGraph& g, std::int64_t k, std::int64_t x);
Reduction equiv_mmei_to_pvc_bipartite(const WeightedGraph& g, std::int64_t b, std::int64_t m);
Reduction red_mmei_to_fei(const WeightedGraph& g, std::int64_t b, std::int64_t m);
Reduction red_is_to_peds(const WeightedGraph& g, std::int64_t k);
Reduction equiv_peds_to_mmmei(const WeightedGraph& g, std::int64_t k, std::int64_t x);
Reduction equiv_mmmei_to_peds(const WeightedGraph& g, std::int64_t b, std::int64_t r);
Reduction equiv_uncovered_pvc_to_mmei(const WeightedGraph& g, std::int64_t k, std::int64_t u);
Reduction equiv_mmei_to_uncovered_pvc(const WeightedGraph& g, std::int64_t b, std::int64_t m);
Reduction red_clique_to_kss(const WeightedGraph& g, std::int64_t k);
Reduction red_kss_to_kkpvc(const WeightedGraph& g, std::int64_t k1, std::int64_t k2, std::int64_t x);

/// Gadget graph of the independent-set construction (no parameters needed).
WeightedGraph is_to_peds_gadget(const WeightedGraph& g);

/// Smallest edge dominating set of G - removed, lexicographically first, by
/// enumeration.
std::vector<int> minimum_edge_dominating_set(const WeightedGraph& g, const BitSet& removed = {});

struct ReductionSpec {
  std::string name;
  ProblemKind source;
  ProblemKind target;
  bool bipartite_source;
};

/// Registered names; equivalences appear once per direction
/// (e.g. "mmei-pvc-bipartite" and "mmei-pvc-bipartite:reverse").
const std::vector<ReductionSpec>& reduction_specs();
const ReductionSpec& find_reduction_spec(const std::string& name);

/// Builds the named reduction for a source instance of the matching kind.
Reduction build_reduction(const std::string& name, const ProblemInstance& source,
                          GadgetPairs pairs = GadgetPairs::all);

}  // namespace interdict
