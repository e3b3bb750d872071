#include "graphdiam/spanner.hpp"

#include <algorithm>

#include "graphdiam/centers.hpp"
#include "graphdiam/random.hpp"

namespace graphdiam {

Graph merge_edges(Vertex n, const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<std::pair<Vertex, Vertex>> keys;
  keys.reserve(a.size() + b.size());
  for (const auto* list : {&a, &b}) {
    for (const Edge& e : *list) {
      if (e.from != e.to) keys.push_back(std::minmax(e.from, e.to));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Edge> edges;
  edges.reserve(keys.size());
  for (const auto& [u, v] : keys) edges.push_back({u, v, 1});
  return Graph(n, false, std::move(edges));
}

Spanner additive2_spanner(const Graph& g) {
  if (g.directed()) throw PreconditionError("the additive spanner needs an undirected graph");
  if (!g.unit_weights() && g.edge_count() > 0) {
    throw PreconditionError("the additive spanner needs unit weights");
  }
  const Vertex n = g.vertex_count();
  Spanner out;
  out.degree_threshold = ceil_sqrt(n);

  std::vector<Edge> light;
  std::vector<std::vector<Vertex>> closed_nbhd;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < out.degree_threshold) {
      for (const Arc& a : g.out_arcs(v)) light.push_back({v, a.head, 1});
    } else {
      auto& s = closed_nbhd.emplace_back();
      s.push_back(v);
      for (const Arc& a : g.out_arcs(v)) s.push_back(a.head);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }
  out.dominators = greedy_hitting_set(n, closed_nbhd);

  std::vector<Edge> trees;
  std::vector<char> seen(n);
  std::vector<Vertex> queue;
  for (Vertex root : out.dominators) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, root);
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (const Arc& a : g.out_arcs(u)) {
        if (!seen[a.head]) {
          seen[a.head] = 1;
          trees.push_back({u, a.head, 1});
          queue.push_back(a.head);
        }
      }
    }
  }
  out.graph = merge_edges(n, light, trees);
  return out;
}

}  // namespace graphdiam
