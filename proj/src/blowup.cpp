#include "graphdiam/blowup.hpp"

namespace graphdiam {

Blowup degree3_blowup(const Graph& g) {
  if (g.directed()) throw PreconditionError("degree-3 blow-up needs an undirected graph");
  const Vertex n = g.vertex_count();
  const auto& edges = g.edges();

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    if (e.from == e.to) continue;
    ++deg[e.from];
    ++deg[e.to];
  }

  // first node of each vertex; vertices of degree >= 3 own deg(v) consecutive nodes
  std::vector<Vertex> first(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    first[v] = next;
    next += deg[v] >= 3 ? static_cast<Vertex>(deg[v]) : 1;
  }

  Blowup out;
  out.map.representative = first;
  out.map.edge_ports.resize(edges.size());
  std::vector<Edge> new_edges;
  new_edges.reserve(edges.size() + 2 * edges.size());

  std::vector<std::size_t> used(n, 0);
  auto port = [&](Vertex v) -> Vertex {
    if (deg[v] < 3) return first[v];
    return first[v] + static_cast<Vertex>(used[v]++);
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.from == e.to) {
      out.map.edge_ports[i] = {first[e.from], first[e.from]};
      continue;
    }
    const Vertex a = port(e.from);
    const Vertex b = port(e.to);
    out.map.edge_ports[i] = {a, b};
    new_edges.push_back({a, b, e.weight});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] < 3) continue;
    const auto k = static_cast<Vertex>(deg[v]);
    for (Vertex j = 0; j < k; ++j) new_edges.push_back({first[v] + j, first[v] + (j + 1) % k, 0});
  }
  out.graph = Graph(next, false, std::move(new_edges));
  return out;
}

}  // namespace graphdiam
