#include "dibs/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dibs/errors.hpp"

namespace dibs {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::uint64_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::uint64_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw InputError("missing `n m` header", 0);
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n > 0xffffffffull)
      throw InputError("malformed header on line " + std::to_string(lineno), lineno);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  while (next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    std::int64_t u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0 ||
        static_cast<std::uint64_t>(u) >= n || static_cast<std::uint64_t>(v) >= n)
      throw InputError("malformed or out-of-range edge on line " + std::to_string(lineno), lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     lineno);
  return build_graph(static_cast<Vertex>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path, 0);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << g.n() << ' ' << g.m() << '\n';
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot write " + path);
  write_graph(out, g, header);
  if (!out) throw Error("io", "write failed for " + path);
}

}  // namespace dibs
