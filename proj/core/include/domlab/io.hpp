#ifndef DOMLAB_IO_HPP
#define DOMLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Edge-list document: header "n <count>", one "i j" pair per line,
/// '#' comments, blank lines ignored. 0-indexed on disk.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Standard graph6 line: N(n) then the upper triangle column by column as a
/// 6-bit stream, bytes offset by 63.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

/// FNV-1a of the graph6 serialization, as a hex digest.
std::string graph_digest(const Graph& g);

/// Reads a whole input file: edge-list if it has an "n" header, otherwise
/// one-graph-per-line graph6.
std::vector<Graph> parse_graph_file(const std::string& text);

/// Display notation (1-indexed, matching v_i / e_{i,j} conventions).
std::string format_element(MixedElement x);
std::string format_mixed_set(const MixedSet& s);
std::optional<MixedElement> parse_display_element(const std::string& token);

/// Witness file: one element per line, "v <id>" or "e <i> <j>", 0-indexed.
MixedSet parse_witness(const std::string& text, const Graph& host);
std::string write_witness(const MixedSet& s);

/// Graphviz export; highlighted vertices and edges are drawn distinctly.
std::string to_dot(const Graph& g, const MixedSet* highlight = nullptr);

}  // namespace domlab

#endif
