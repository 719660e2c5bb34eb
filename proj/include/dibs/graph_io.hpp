#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

/// Edge-list text format: optional `#` comment lines, then `n m`, then m lines
/// `u v` (0-indexed). Throws InputError on malformed content, including an
/// edge count that disagrees with the header.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Writes `# <line>` for each header line, then the graph with edges (u < v)
/// in lexicographic order. LF line endings.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& header = {});

}  // namespace dibs
