#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "interdict/algorithms.hpp"
#include "interdict/graph.hpp"
#include "interdict/io.hpp"

namespace interdict {

// IS and CLIQUE are source-only kinds for the hardness reductions.
enum class ProblemKind { MVE, MMEI, FEI, MMMEI, PVC, PEDS, KKPVC, KSS, KWAY, IS, CLIQUE };

std::string_view kind_name(ProblemKind kind);
std::optional<ProblemKind> parse_kind(std::string_view name);

using Certificate = std::variant<EdgeSet, VertexSet>;
using Params = std::map<std::string, std::int64_t>;

/// Required parameters per kind. PVC accepts either a coverage target "x" or
/// an uncovered-edge allowance "u".
struct ProblemInstance {
  ProblemKind kind = ProblemKind::MVE;
  AnyGraph graph;
  Params params;
  DominationMode mode = DominationMode::inclusive;

  const WeightedGraph& weighted() const;
  const FlowNetwork& network() const;
  std::int64_t param(const std::string& name) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }
  void validate() const;
};

ProblemInstance make_instance(ProblemKind kind, AnyGraph graph, Params params,
                              DominationMode mode = DominationMode::inclusive);

/// Whether the instance's objective is maximized (MVE, PVC, PEDS, KKPVC, KWAY,
/// IS, CLIQUE) or minimized.
bool maximizes(ProblemKind kind);

/// Yes/no verdict of an objective value against the instance's target
/// parameter. Infeasible instances are always "no".
bool decide(const ProblemInstance& inst, const ExtendedWeight& value);

/// Re-evaluates a certificate from scratch with graph-core primitives.
/// nullopt means the certificate violates the instance's constraints.
std::optional<ExtendedWeight> evaluate_certificate(const ProblemInstance& inst,
                                                   const Certificate& cert);

std::vector<Side> sides_of(const WeightedGraph& g);

nlohmann::json certificate_to_json(const ProblemInstance& inst, const Certificate& cert);
Certificate certificate_from_json(const ProblemInstance& inst, const nlohmann::json& doc);
std::string weight_to_json_text(const ExtendedWeight& w);
nlohmann::json weight_to_json(const ExtendedWeight& w);

nlohmann::json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& doc);

}  // namespace interdict
