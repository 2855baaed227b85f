#include "interdict/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace interdict {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(token) + "'");
  return value;
}

std::int64_t parse_keyed(std::string_view token, std::string_view key, int line) {
  if (token.substr(0, key.size()) != key)
    throw ParseError(line, "expected '" + std::string(key) + "<id>'");
  return parse_int(token.substr(key.size()), line, "id");
}

Vertex to_vertex(std::int64_t id, std::int64_t n, int line) {
  if (id < 1 || id > n) throw ParseError(line, "vertex id " + std::to_string(id) + " out of range");
  return static_cast<Vertex>(id - 1);
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  enum class Kind { none, graph, flow } kind = Kind::none;
  std::int64_t n = 0;
  std::int64_t declared = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  std::optional<std::vector<Side>> sides;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = split_tokens(line);
    if (tok.empty() || tok[0][0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view head = tok[0];
    if (head == "p") {
      if (kind != Kind::none) throw ParseError(line_no, "second header line");
      if (tok.size() < 4) throw ParseError(line_no, "malformed header");
      n = parse_int(tok[2], line_no, "vertex count");
      declared = parse_int(tok[3], line_no, "edge count");
      if (n < 0 || declared < 0) throw ParseError(line_no, "negative count in header");
      if (tok[1] == "graph") {
        if (tok.size() != 4) throw ParseError(line_no, "malformed graph header");
        kind = Kind::graph;
      } else if (tok[1] == "flow") {
        if (tok.size() != 6) throw ParseError(line_no, "flow header needs s=<id> t=<id>");
        kind = Kind::flow;
        s = to_vertex(parse_keyed(tok[4], "s=", line_no), n, line_no);
        t = to_vertex(parse_keyed(tok[5], "t=", line_no), n, line_no);
      } else {
        throw ParseError(line_no, "unknown header type '" + std::string(tok[1]) + "'");
      }
    } else if (head == "bipartite") {
      if (kind != Kind::graph) throw ParseError(line_no, "bipartite line outside a graph");
      if (tok.size() != 2 || tok[1].substr(0, 2) != "X=")
        throw ParseError(line_no, "expected 'bipartite X=<id,...>'");
      std::vector<Side> labels(static_cast<std::size_t>(n), Side::Y);
      std::string_view list = tok[1].substr(2);
      while (!list.empty()) {
        const std::size_t comma = std::min(list.find(','), list.size());
        const Vertex v = to_vertex(parse_int(list.substr(0, comma), line_no, "id"), n, line_no);
        labels[static_cast<std::size_t>(v)] = Side::X;
        list = comma < list.size() ? list.substr(comma + 1) : std::string_view{};
      }
      sides = std::move(labels);
    } else if (head == "e") {
      if (kind != Kind::graph) throw ParseError(line_no, "edge line outside a graph");
      if (tok.size() != 5) throw ParseError(line_no, "expected 'e <u> <v> <weight> <cost>'");
      const Vertex u = to_vertex(parse_int(tok[1], line_no, "u"), n, line_no);
      const Vertex v = to_vertex(parse_int(tok[2], line_no, "v"), n, line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.push_back({u, v, parse_int(tok[3], line_no, "weight"), parse_int(tok[4], line_no, "cost")});
    } else if (head == "a") {
      if (kind != Kind::flow) throw ParseError(line_no, "arc line outside a flow network");
      if (tok.size() != 5) throw ParseError(line_no, "expected 'a <i> <j> <capacity> <cost>'");
      const Vertex i = to_vertex(parse_int(tok[1], line_no, "i"), n, line_no);
      const Vertex j = to_vertex(parse_int(tok[2], line_no, "j"), n, line_no);
      if (i == j) throw ParseError(line_no, "self-loop");
      arcs.push_back({i, j, parse_int(tok[3], line_no, "capacity"), parse_int(tok[4], line_no, "cost")});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(head) + "'");
    }
    if (end == text.size()) break;
  }

  if (kind == Kind::none) throw ParseError(line_no, "missing 'p' header");
  if (kind == Kind::graph) {
    if (static_cast<std::int64_t>(edges.size()) != declared)
      throw ValidationError("header declares " + std::to_string(declared) + " edges, found " +
                            std::to_string(edges.size()));
    return WeightedGraph(static_cast<int>(n), std::move(edges), std::move(sides));
  }
  if (static_cast<std::int64_t>(arcs.size()) != declared)
    throw ValidationError("header declares " + std::to_string(declared) + " arcs, found " +
                          std::to_string(arcs.size()));
  return FlowNetwork(static_cast<int>(n), std::move(arcs), s, t);
}

AnyGraph parse_graph_json(const nlohmann::json& doc) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    const int n = doc.at("n").get<int>();
    if (kind == "graph") {
      std::vector<Edge> edges;
      for (const auto& e : doc.at("edges")) {
        if (e.size() != 4) throw ValidationError("edge entries are [u, v, weight, cost]");
        edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<std::int64_t>(),
                         e[3].get<std::int64_t>()});
      }
      std::optional<std::vector<Side>> sides;
      if (doc.contains("bipartiteX")) {
        std::vector<Side> labels(static_cast<std::size_t>(n), Side::Y);
        for (const auto& id : doc.at("bipartiteX")) {
          const int v = id.get<int>();
          if (v < 1 || v > n) throw ValidationError("bipartiteX id out of range");
          labels[static_cast<std::size_t>(v - 1)] = Side::X;
        }
        sides = std::move(labels);
      }
      return WeightedGraph(n, std::move(edges), std::move(sides));
    }
    if (kind == "flow") {
      std::vector<Arc> arcs;
      for (const auto& a : doc.at("arcs")) {
        if (a.size() != 4) throw ValidationError("arc entries are [i, j, capacity, cost]");
        arcs.push_back({a[0].get<int>() - 1, a[1].get<int>() - 1, a[2].get<std::int64_t>(),
                        a[3].get<std::int64_t>()});
      }
      return FlowNetwork(n, std::move(arcs), doc.at("s").get<int>() - 1, doc.at("t").get<int>() - 1);
    }
    throw ValidationError("unknown graph kind '" + kind + "'");
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed graph JSON: ") + ex.what());
  }
}

AnyGraph read_graph_any(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(1, ex.what());
    }
    return parse_graph_json(doc);
  }
  return parse_graph(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AnyGraph read_graph_file(const std::string& path) { return read_graph_any(read_text_file(path)); }

std::string write_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (g.bipartition()) {
    out << "bipartite X=";
    bool first = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.side(v) != Side::X) continue;
      out << (first ? "" : ",") << v + 1;
      first = false;
    }
    out << '\n';
  }
  for (const Edge& e : g.edges())
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << ' ' << e.cost << '\n';
  return out.str();
}

std::string write_graph(const FlowNetwork& net) {
  std::ostringstream out;
  out << "p flow " << net.num_vertices() << ' ' << net.num_arcs() << " s=" << net.source() + 1
      << " t=" << net.sink() + 1 << '\n';
  for (const Arc& a : net.arcs())
    out << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.capacity << ' ' << a.cost << '\n';
  return out.str();
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json doc;
  doc["kind"] = "graph";
  doc["n"] = g.num_vertices();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.weight, e.cost});
  doc["edges"] = std::move(edges);
  if (g.bipartition()) {
    auto xs = nlohmann::json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
      if (g.side(v) == Side::X) xs.push_back(v + 1);
    doc["bipartiteX"] = std::move(xs);
  }
  return doc;
}

nlohmann::json graph_to_json(const FlowNetwork& net) {
  nlohmann::json doc;
  doc["kind"] = "flow";
  doc["n"] = net.num_vertices();
  doc["s"] = net.source() + 1;
  doc["t"] = net.sink() + 1;
  auto arcs = nlohmann::json::array();
  for (const Arc& a : net.arcs()) arcs.push_back({a.from + 1, a.to + 1, a.capacity, a.cost});
  doc["arcs"] = std::move(arcs);
  return doc;
}

WeightedGraph expect_weighted(AnyGraph graph) {
  if (auto* g = std::get_if<WeightedGraph>(&graph)) return std::move(*g);
  throw ValidationError("expected an undirected graph ('p graph'), got a flow network");
}

FlowNetwork expect_flow(AnyGraph graph) {
  if (auto* net = std::get_if<FlowNetwork>(&graph)) return std::move(*net);
  throw ValidationError("expected a flow network ('p flow'), got an undirected graph");
}

}  // namespace interdict
