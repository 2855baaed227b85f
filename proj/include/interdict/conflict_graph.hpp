#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// Layout of the independent-set gadget: source vertex v becomes the twins
// 2v (first coordinate, side V1) and 2v+1 (second coordinate, side V2);
// pendant vertices are numbered from 2n upward.
inline Vertex first_twin(Vertex v) { return 2 * v; }
inline Vertex second_twin(Vertex v) { return 2 * v + 1; }

/// Nodes are the chosen gadget edges. A link between nodes a and b records a
/// connector vertex t outside the chosen edges whose twin is an endpoint of a
/// and which is adjacent to an endpoint of b. A connector on side V2 forbids
/// both nodes picking their first coordinate; one on V1 forbids both picking
/// their second.
struct ConflictGraph {
  struct Link {
    int a = 0;
    int b = 0;
    Vertex connector = 0;
    Side side = Side::X;
  };
  std::vector<int> nodes;  // gadget edge indices
  std::vector<Link> links;
};

struct ExtractionStats {
  int isolated = 0;         // nodes with no link
  int peeled_by_link = 0;   // leaves resolved through their connector's side
  int core_nodes = 0;       // nodes resolved by 2-coloring
  int core_components = 0;
  bool acyclic() const { return core_nodes == 0; }
};

struct Extraction {
  VertexSet vertices;
  ConflictGraph conflicts;
  ExtractionStats stats;
};

/// Raised when the chosen edges violate the extraction precondition or the
/// conflict core is not 2-colorable. `witness` names the offending gadget
/// edges (a pair, or the nodes of an odd cycle).
class ExtractionError : public ValidationError {
 public:
  ExtractionError(const std::string& message, std::vector<int> witness)
      : ValidationError(message), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

ConflictGraph build_conflict_graph(const WeightedGraph& gadget, const std::vector<int>& chosen,
                                   int source_n);

/// Converts k gadget edges dominating 2kn edges (exclusive counting) into an
/// independent set of size k in the source graph.
Extraction extract_independent_set(const WeightedGraph& gadget, const std::vector<int>& chosen,
                                   const WeightedGraph& source, std::int64_t k);

}  // namespace interdict
