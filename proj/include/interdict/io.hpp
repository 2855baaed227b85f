#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "interdict/graph.hpp"

namespace interdict {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

using AnyGraph = std::variant<WeightedGraph, FlowNetwork>;

// Line-oriented text format:
//
//   # comment
//   p graph <n> <m>                      |  p flow <n> <m> s=<id> t=<id>
//   bipartite X=<id,id,...>              (graph only, optional)
//   e <u> <v> <weight> <cost>            |  a <i> <j> <capacity> <cost>
//
// Vertex ids are 1..n. Writers emit edges sorted by (u, v).
AnyGraph parse_graph(std::string_view text);
AnyGraph parse_graph_json(const nlohmann::json& doc);

// Detects the JSON mirror by a leading '{'.
AnyGraph read_graph_any(std::string_view text);
AnyGraph read_graph_file(const std::string& path);

std::string write_graph(const WeightedGraph& g);
std::string write_graph(const FlowNetwork& net);
nlohmann::json graph_to_json(const WeightedGraph& g);
nlohmann::json graph_to_json(const FlowNetwork& net);

WeightedGraph expect_weighted(AnyGraph graph);
FlowNetwork expect_flow(AnyGraph graph);

std::string read_text_file(const std::string& path);

}  // namespace interdict
