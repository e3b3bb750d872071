#pragma once

#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

struct BlowupMap {
  /// node standing for original vertex v
  std::vector<Vertex> representative;
  /// per original edge index: the node carrying it on the `from` side and on
  /// the `to` side. Self-loops are dropped and map to their representative.
  std::vector<std::pair<Vertex, Vertex>> edge_ports;
};

struct Blowup {
  Graph graph;
  BlowupMap map;
};

/// Replaces every vertex of degree >= 3 by a cycle of weight-0 edges, one node
/// per incident edge, so the result has maximum degree 3 and the same
/// distances between representatives. Vertices of degree <= 2 are kept as a
/// single node. Undirected graphs only.
Blowup degree3_blowup(const Graph& g);

}  // namespace graphdiam
