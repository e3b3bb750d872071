#pragma once

#include <span>
#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Exact eccentricity of every vertex by one search per vertex.
/// kUnreachable where some target cannot be reached.
std::vector<Dist> exact_eccentricities(const Graph& g, Direction dir = Direction::kOut);

/// max over s in S, t in T of d(s,t). Throws PreconditionError on an empty set.
Dist exact_st_diameter(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T);

/// Largest out-eccentricity (kUnreachable when not strongly connected).
Dist exact_diameter(const Graph& g);

/// Smallest out-eccentricity and a vertex attaining it (smallest id on ties).
struct RadiusResult {
  Vertex center = 0;
  Dist value = 0;
};
RadiusResult exact_radius(const Graph& g);

}  // namespace graphdiam
