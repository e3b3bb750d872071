#include "graphdiam/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace graphdiam {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected nonnegative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return v;
}

// Next non-comment, non-blank line split into tokens; false at end of input.
bool next_tokens(std::istream& in, std::size_t& line_no, std::vector<std::string_view>& toks,
                 std::string& buf) {
  while (std::getline(in, buf)) {
    ++line_no;
    toks = split(buf);
    if (toks.empty() || toks.front().front() == '#') continue;
    return true;
  }
  return false;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path.string());
  return f;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::size_t line = 0;
  std::string buf;
  std::vector<std::string_view> t;
  if (!next_tokens(in, line, t, buf)) throw ParseError(0, "missing header line");
  if (t.size() != 4) {
    throw ParseError(line, "header must be 'n m <directed|undirected> <weighted|unweighted>'");
  }
  const std::uint64_t n = parse_uint(t[0], line, "n");
  const std::uint64_t m = parse_uint(t[1], line, "m");
  if (n >= std::numeric_limits<Vertex>::max()) throw ParseError(line, "vertex count too large");
  bool directed = false;
  if (t[2] == "directed") {
    directed = true;
  } else if (t[2] != "undirected") {
    throw ParseError(line, "expected 'directed' or 'undirected', got '" + std::string(t[2]) + "'");
  }
  bool weighted = false;
  if (t[3] == "weighted") {
    weighted = true;
  } else if (t[3] != "unweighted") {
    throw ParseError(line, "expected 'weighted' or 'unweighted', got '" + std::string(t[3]) + "'");
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_tokens(in, line, t, buf)) {
      throw ParseError(line, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    const std::size_t want = weighted ? 3 : 2;
    if (t.size() != want) {
      throw ParseError(line, "expected " + std::to_string(want) + " fields, got " +
                                 std::to_string(t.size()));
    }
    const std::uint64_t u = parse_uint(t[0], line, "u");
    const std::uint64_t v = parse_uint(t[1], line, "v");
    if (u >= n || v >= n) throw ParseError(line, "vertex id out of range [0," + std::to_string(n) + ")");
    const Weight w = weighted ? parse_uint(t[2], line, "w") : 1;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (next_tokens(in, line, t, buf)) throw ParseError(line, "more edge lines than the header's m");
  try {
    return Graph(static_cast<Vertex>(n), directed, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream f = open_in(path);
  return read_edge_list(f);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const bool weighted = !g.unit_weights() && g.edge_count() > 0;
  out << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (g.directed() ? "directed" : "undirected") << ' '
      << (weighted ? "weighted" : "unweighted") << '\n';
  for (const Edge& e : g.edges()) {
    out << e.from << ' ' << e.to;
    if (weighted) out << ' ' << e.weight;
    out << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream f(path);
  if (!f) throw GraphError("cannot write " + path.string());
  write_edge_list(f, g);
}

std::vector<Vertex> read_vertex_set(std::istream& in) {
  std::size_t line = 0;
  std::string buf;
  std::vector<std::string_view> t;
  std::vector<Vertex> out;
  while (next_tokens(in, line, t, buf)) {
    if (t.size() != 1) throw ParseError(line, "expected one vertex id per line");
    const std::uint64_t v = parse_uint(t[0], line, "vertex id");
    if (v >= std::numeric_limits<Vertex>::max()) throw ParseError(line, "vertex id too large");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> read_vertex_set(const std::filesystem::path& path) {
  std::ifstream f = open_in(path);
  return read_vertex_set(f);
}

}  // namespace graphdiam
