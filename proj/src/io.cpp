#include "posetdist/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "posetdist/error.hpp"

namespace posetdist {

namespace {

using nlohmann::json;

struct RawNode {
  std::string id;
  std::string label;
};

struct RawDocument {
  std::vector<RawNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  // 1-based source line of each node and edge; 0 for JSON input.
  std::vector<std::size_t> node_lines;
  std::vector<std::size_t> edge_lines;
  std::vector<std::string> edge_fields;
  std::vector<std::string> node_fields;
};

bool looks_like_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string scalar(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("expected a string or integer", 0, field);
}

RawDocument parse_json(std::string_view text, const char* node_key, const char* edge_key) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_byte(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("top-level value must be an object", 0, "$");
  if (!doc.contains("format_version")) throw ParseError("missing field", 0, "format_version");
  if (!doc["format_version"].is_string()) {
    throw ParseError("format_version must be a string", 0, "format_version");
  }
  RawDocument raw;
  if (!doc.contains(node_key) || !doc[node_key].is_array()) {
    throw ParseError("missing or non-array field", 0, node_key);
  }
  const json& nodes = doc[node_key];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string field = std::string(node_key) + "[" + std::to_string(i) + "]";
    const json& n = nodes[i];
    if (!n.is_object()) throw ParseError("expected an object", 0, field);
    if (!n.contains("id")) throw ParseError("missing field", 0, field + ".id");
    if (!n.contains("label")) throw ParseError("missing field", 0, field + ".label");
    raw.nodes.push_back({scalar(n["id"], field + ".id"), scalar(n["label"], field + ".label")});
    raw.node_lines.push_back(0);
    raw.node_fields.push_back(field + ".id");
  }
  if (doc.contains(edge_key)) {
    const json& edges = doc[edge_key];
    if (!edges.is_array()) throw ParseError("expected an array", 0, edge_key);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string field = std::string(edge_key) + "[" + std::to_string(i) + "]";
      const json& e = edges[i];
      if (!e.is_array() || e.size() != 2) throw ParseError("expected a pair [source, target]", 0, field);
      raw.edges.emplace_back(scalar(e[0], field + "[0]"), scalar(e[1], field + "[1]"));
      raw.edge_lines.push_back(0);
      raw.edge_fields.push_back(field);
    }
  } else {
    throw ParseError("missing field", 0, edge_key);
  }
  return raw;
}

RawDocument parse_lines(std::string_view text) {
  RawDocument raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "node") {
      if (words.size() != 3) throw ParseError("expected 'node <id> <label>'", number);
      raw.nodes.push_back({words[1], words[2]});
      raw.node_lines.push_back(number);
      raw.node_fields.emplace_back();
    } else if (words.size() == 2) {
      raw.edges.emplace_back(words[0], words[1]);
      raw.edge_lines.push_back(number);
      raw.edge_fields.emplace_back();
    } else {
      throw ParseError("expected 'node <id> <label>' or '<source> <target>'", number);
    }
  }
  return raw;
}

RawDocument parse_any(std::string_view text, const char* node_key, const char* edge_key) {
  return looks_like_json(text) ? parse_json(text, node_key, edge_key) : parse_lines(text);
}

// Checks unique ids and declared edge endpoints.
void check_references(const RawDocument& raw) {
  std::map<std::string, std::size_t, std::less<>> seen;
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    if (!seen.emplace(raw.nodes[i].id, i).second) {
      throw ParseError("duplicate node id '" + raw.nodes[i].id + "'", raw.node_lines[i],
                       raw.node_fields[i]);
    }
  }
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    for (const std::string& end : {raw.edges[i].first, raw.edges[i].second}) {
      if (!seen.contains(end)) {
        throw ParseError("unknown node id '" + end + "'", raw.edge_lines[i], raw.edge_fields[i]);
      }
    }
  }
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

LabeledDigraph parse_graph(std::string_view text) {
  const RawDocument raw = parse_any(text, "nodes", "edges");
  check_references(raw);
  LabeledDigraph g;
  for (const auto& n : raw.nodes) g.add_node(n.id, n.label);
  for (const auto& [s, t] : raw.edges) g.add_edge(s, t);
  return g;
}

PosetSpec parse_poset(std::string_view text) {
  const RawDocument raw = parse_any(text, "elements", "relations");
  check_references(raw);
  PosetSpec spec;
  for (const auto& n : raw.nodes) spec.elements.push_back({n.id, n.label});
  spec.relations = raw.edges;
  return spec;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabeledDigraph load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

PosetDigraph load_poset(const std::filesystem::path& path) {
  const PosetSpec spec = parse_poset(read_file(path));
  try {
    return build_poset_digraph(spec);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.code(), std::string(to_string(e.code())) + ": " + e.what());
  }
}

std::string to_json(const LabeledDigraph& g) {
  std::vector<NodeIndex> nodes(g.node_count());
  for (NodeIndex v = 0; v < nodes.size(); ++v) nodes[v] = v;
  std::sort(nodes.begin(), nodes.end(), [&](NodeIndex a, NodeIndex b) { return g.id(a) < g.id(b); });
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.id(e.tail), g.id(e.head));
  std::sort(edges.begin(), edges.end());

  json j;
  j["format_version"] = "1.0";
  j["nodes"] = json::array();
  for (NodeIndex v : nodes) j["nodes"].push_back({{"id", g.id(v)}, {"label", g.label(v)}});
  j["edges"] = json::array();
  for (const auto& [s, t] : edges) j["edges"].push_back({s, t});
  return render(j);
}

std::string to_json(const PosetDigraph& p) {
  const LabeledDigraph& g = p.graph();
  json graph = json::parse(to_json(g));
  json j;
  j["format_version"] = graph["format_version"];
  j["elements"] = graph["nodes"];
  j["relations"] = graph["edges"];
  return render(j);
}

void save_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'", 0);
  out << content;
}

std::string to_dot(const ExtendedLineDigraph& eld) {
  std::ostringstream out;
  out << "digraph extended_line_digraph {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < eld.node_count(); ++i) {
    const auto& [a, b] = eld.node_labels()[i];
    out << "  n" << i << " [label=\"" << dot_escape(eld.node_name(i)) << "\\n(" << dot_escape(a)
        << "," << dot_escape(b) << ")\"];\n";
  }
  for (const LineEdge& e : eld.edges()) {
    const char* style = e.relation == Relation::HeadToTail   ? "solid"
                        : e.relation == Relation::HeadToHead ? "dashed"
                                                             : "dotted";
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.relation)
        << "\", style=" << style << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace posetdist
