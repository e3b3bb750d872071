#include "graphdiam/diam_sparse.hpp"

#include <algorithm>

#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

namespace {

Dist two_way_eccentricity(const Graph& g, Vertex v) {
  Dist best = 0;
  for (Direction dir : {Direction::kOut, Direction::kIn}) {
    const DistanceArray d = sssp(g, v, dir);
    best = std::max(best, *std::max_element(d.dist.begin(), d.dist.end()));
  }
  return best;
}

}  // namespace

DiameterEstimate diam_folklore_2approx(const Graph& g) {
  DiameterEstimate out;
  out.method = "diam-folk";
  if (g.vertex_count() == 0) return out;
  out.value = two_way_eccentricity(g, 0);
  out.unreachable = out.value == kUnreachable;
  out.vertices_searched = 1;
  return out;
}

DiameterEstimate diam_linear_lessthan2(const Graph& g) {
  DiameterEstimate out;
  out.method = "diam-lin";
  const Vertex n = g.vertex_count();
  if (n == 0) return out;
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.out_degree(u) + g.in_degree(u) < g.out_degree(v) + g.in_degree(v)) v = u;
  }
  out.center = v;
  std::vector<Vertex> group{v};
  for (const Arc& a : g.out_arcs(v)) group.push_back(a.head);
  for (const Arc& a : g.in_arcs(v)) group.push_back(a.head);
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  for (Vertex u : group) out.value = std::max(out.value, two_way_eccentricity(g, u));
  out.vertices_searched = group.size();
  out.unreachable = out.value == kUnreachable;
  return out;
}

}  // namespace graphdiam
