#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "interdict/graph.hpp"

namespace interdict {

// The literal form of rule 1 keeps b pendants per vertex, which changes the
// answer on 2xP3 (b=1, m=1) and K1,3 (b=2, m=0). `safe` keeps b+1.
enum class Rule1Mode { safe, literal };

enum class KernelVerdict { yes, no, reduced };

std::string_view verdict_name(KernelVerdict verdict);

/// One rule application. Vertex ids refer to the original graph. `anchor` is
/// the pendant center for rule 1 and the shared neighborhood U for rule 2.
struct KernelStep {
  int rule = 1;
  std::vector<Vertex> anchor;
  std::vector<Vertex> kept;
  std::vector<Vertex> removed;
};

struct KernelResult {
  WeightedGraph original;
  WeightedGraph kernel;
  std::vector<Vertex> vertex_map;  // kernel vertex i is original vertex_map[i]
  std::vector<KernelStep> steps;
  std::int64_t b = 0;
  std::int64_t m = 0;
  Rule1Mode mode = Rule1Mode::safe;
  std::int64_t bound = 0;
  std::int64_t closing_bound = 0;
  KernelVerdict verdict = KernelVerdict::reduced;

  nlohmann::json trace() const;
};

/// l = sum_{i=1..m} 2^i C(m,i) max(i, b+1) + m.
std::int64_t kernel_l(std::int64_t b, std::int64_t m);
/// B = b + 4m^2 + 2bm + 4bm + l*m.
std::int64_t kernel_bound(std::int64_t b, std::int64_t m);
/// The shorter closing count l*m + 4bm + 4m^2, kept for comparison.
std::int64_t kernel_bound_closing(std::int64_t b, std::int64_t m);

/// Single-rule passes to a fixed point; `second` reports whether anything
/// was removed. Surviving vertices keep their relative order.
std::pair<WeightedGraph, bool> rule1(const WeightedGraph& g, std::int64_t b, Rule1Mode mode = Rule1Mode::safe);
std::pair<WeightedGraph, bool> rule2(const WeightedGraph& g, std::int64_t b);

/// Rule 1 to a fixed point, then rule 2 to a fixed point, repeated until
/// neither applies; then the size bound and the trivial verdicts.
KernelResult kernelize(const WeightedGraph& g, std::int64_t b, std::int64_t m,
                       Rule1Mode mode = Rule1Mode::safe);

/// Applies the recorded steps to the trace's original graph and checks the
/// result against the recorded kernel.
WeightedGraph replay_kernel(const nlohmann::json& trace);

}  // namespace interdict
