#include "graphdiam/exact.hpp"

#include <algorithm>

#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

std::vector<Dist> exact_eccentricities(const Graph& g, Direction dir) {
  std::vector<Dist> ecc(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const DistanceArray d = sssp(g, v, dir);
    ecc[v] = *std::max_element(d.dist.begin(), d.dist.end());
  }
  return ecc;
}

Dist exact_st_diameter(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T) {
  if (S.empty() || T.empty()) throw PreconditionError("S-T diameter needs nonempty S and T");
  Dist best = 0;
  for (Vertex s : S) {
    const DistanceArray d = sssp(g, s);
    for (Vertex t : T) {
      if (t >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(t) + " out of range");
      best = std::max(best, d[t]);
    }
  }
  return best;
}

Dist exact_diameter(const Graph& g) {
  const std::vector<Dist> ecc = exact_eccentricities(g);
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

RadiusResult exact_radius(const Graph& g) {
  const std::vector<Dist> ecc = exact_eccentricities(g);
  if (ecc.empty()) throw PreconditionError("radius of an empty graph");
  const auto it = std::min_element(ecc.begin(), ecc.end());
  return {static_cast<Vertex>(it - ecc.begin()), *it};
}

}  // namespace graphdiam
