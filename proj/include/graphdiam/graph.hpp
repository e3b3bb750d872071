#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphdiam {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;
using Dist = std::uint64_t;

/// Distance of a vertex that cannot be reached. Compares greater than every
/// finite distance and is never used as an addend.
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

enum class Direction { kOut, kIn };

/// Errors raised by library operations. The CLI maps each kind to an exit code.
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (empty source set, directed
/// graph where undirected is required, not strongly connected, ...).
class PreconditionError : public GraphError {
public:
  using GraphError::GraphError;
};

/// A generator would exceed its configured vertex/edge budget.
class SizeGuardError : public GraphError {
public:
  using GraphError::GraphError;
};

struct Arc {
  Vertex head;
  Weight weight;
};

struct Edge {
  Vertex from;
  Vertex to;
  Weight weight;
};

enum class WeightClass {
  kUnit,     // every weight is 1
  kZeroOne,  // weights in {0, 1}, at least one 0
  kGeneral,
};

/// Immutable compressed adjacency graph. Undirected edges are stored as two
/// arcs; the reverse adjacency is the exact transpose of the forward one.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws PreconditionError on an
  /// out-of-range endpoint or when (n-1)*max_weight+1 would overflow.
  Graph(Vertex vertex_count, bool directed, std::vector<Edge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  /// Number of input edges (an undirected edge counts once).
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  Weight max_weight() const noexcept { return max_weight_; }
  WeightClass weight_class() const noexcept { return weight_class_; }
  bool unit_weights() const noexcept { return weight_class_ == WeightClass::kUnit; }

  std::span<const Arc> out_arcs(Vertex v) const noexcept {
    return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in_arcs(Vertex v) const noexcept {
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }
  std::span<const Arc> arcs(Vertex v, Direction dir) const noexcept {
    return dir == Direction::kOut ? out_arcs(v) : in_arcs(v);
  }

  std::size_t out_degree(Vertex v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }
  /// Number of incident edges ignoring direction (undirected: plain degree).
  std::size_t degree(Vertex v) const noexcept {
    return directed_ ? out_degree(v) + in_degree(v) : out_degree(v);
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Same vertices and edges with every arc reversed.
  Graph transpose() const;

private:
  Vertex n_ = 0;
  bool directed_ = false;
  Weight max_weight_ = 0;
  WeightClass weight_class_ = WeightClass::kUnit;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
};

/// Accumulates edges, then freezes them into a Graph.
class GraphBuilder {
public:
  GraphBuilder(Vertex vertex_count, bool directed) : n_(vertex_count), directed_(directed) {}

  Vertex vertex_count() const noexcept { return n_; }
  Vertex add_vertex() { return n_++; }
  void add_edge(Vertex u, Vertex v, Weight w = 1) { edges_.push_back({u, v, w}); }
  /// Traversable both ways: one edge in an undirected graph, two opposite
  /// arcs in a directed one.
  void add_two_way(Vertex u, Vertex v, Weight w = 1);
  /// Adds a two-way path of `length` unit edges between u and v through
  /// length-1 fresh vertices; returns the fresh vertices in path order.
  std::vector<Vertex> add_subdivided_edge(Vertex u, Vertex v, std::size_t length);

  Graph build() &&;

private:
  Vertex n_;
  bool directed_;
  std::vector<Edge> edges_;
};

/// True when every vertex reaches every other vertex.
bool strongly_connected(const Graph& g);

}  // namespace graphdiam
