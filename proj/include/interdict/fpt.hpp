#pragma once

#include <cstdint>
#include <vector>

#include "interdict/oracle.hpp"

namespace interdict {

using Partition = std::vector<int>;

/// All additive partitions of b, parts non-increasing, listed in descending
/// lexicographic order: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> additive_partitions(int b);

/// Exact k-way cut profile of one graph: best[i] is the largest component
/// count reachable with at most i deletions (i = 0..s), witnesses[i] a
/// smallest lexicographically-first edge set reaching it.
struct CutProfile {
  std::vector<std::int64_t> best;
  std::vector<std::vector<int>> witnesses;
  std::int64_t nodes = 0;
};

CutProfile kway_cut_exact(const WeightedGraph& g, int s, const Caps& caps = {});

struct FptOptions {
  // Branch over every component per part instead of the top-j table entries.
  bool full_window = false;
  Caps caps;
};

/// b-MVE on 0/1 edge weights via edge connectivity, per-component cut
/// profiles over the weight-0 subgraph, and partitions of the budget.
OracleResult fpt_mve_01(const WeightedGraph& g, std::int64_t b, const FptOptions& opts = {});

/// Maximum edges covered by exactly k vertices of a bipartite graph, by
/// take/discard branching with a top-k residual degree bound.
OracleResult pvc_bipartite(const WeightedGraph& g, std::int64_t k);

/// Bipartite unit MMEI: the smallest m' whose k=m' partial cover leaves at
/// most b edges uncovered is the optimum; the uncovered edges are the
/// interdiction set.
OracleResult fpt_mmei_bipartite(const WeightedGraph& g, std::int64_t b, std::int64_t m);

}  // namespace interdict
