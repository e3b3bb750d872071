#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public GraphError {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Format:
///   n m <directed|undirected> <weighted|unweighted>
///   u v [w]      (m lines, 0-based ids; w only when weighted)
/// Lines starting with '#' and blank lines are ignored anywhere.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// One vertex id per line; '#' comments and blank lines are ignored.
std::vector<Vertex> read_vertex_set(std::istream& in);
std::vector<Vertex> read_vertex_set(const std::filesystem::path& path);

}  // namespace graphdiam
