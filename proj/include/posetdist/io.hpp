#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "posetdist/graph.hpp"
#include "posetdist/line_digraph.hpp"

namespace posetdist {

/// Parses a graph from JSON ({"format_version", "nodes", "edges"}) or from
/// the text edge-list format. Text is assumed unless the first non-blank
/// character is '{'. Text lines are `node <id> <label>` or `<src> <dst>`;
/// `#` starts a comment. Throws ParseError with a line or field location.
LabeledDigraph parse_graph(std::string_view text);

/// Parses a poset description: JSON ({"format_version", "elements",
/// "relations"}) or the same text format as graphs, where edge lines are
/// relations p <= q. Only syntax and references are checked here.
PosetSpec parse_poset(std::string_view text);

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

LabeledDigraph load_graph(const std::filesystem::path& path);

/// Parses and builds the poset digraph. Structural failures are reported as
/// ValidationError whose cause is the underlying error code.
PosetDigraph load_poset(const std::filesystem::path& path);

/// Canonical JSON: sorted keys, nodes sorted by id, edges sorted by
/// (source id, target id), two-space indent, trailing newline. Parsing the
/// output and rendering it again reproduces it byte for byte.
std::string to_json(const LabeledDigraph& g);
/// Canonical poset JSON. Relations are the strict order pairs.
std::string to_json(const PosetDigraph& p);

void save_text(const std::filesystem::path& path, std::string_view content);

/// Graphviz rendering: HT edges solid, HH dashed, TT dotted. Output depends
/// only on the input.
std::string to_dot(const ExtendedLineDigraph& eld);

}  // namespace posetdist
