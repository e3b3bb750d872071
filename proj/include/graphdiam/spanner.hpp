#pragma once

#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Subgraph H on the same vertices with d_H(u,v) <= d_G(u,v) + 2.
struct Spanner {
  Graph graph;
  std::size_t degree_threshold = 0;  // vertices below it keep all their edges
  std::vector<Vertex> dominators;    // BFS tree roots
};

/// Keeps every edge at a vertex of degree < ceil(sqrt(n)), then adds a full
/// BFS tree from each vertex of a greedy dominating set of the heavy
/// vertices. Deterministic. Undirected unit-weight graphs.
Spanner additive2_spanner(const Graph& g);

/// g's vertices with the union of both edge lists, duplicates removed.
Graph merge_edges(Vertex n, const std::vector<Edge>& a, const std::vector<Edge>& b);

}  // namespace graphdiam
